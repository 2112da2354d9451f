// Node-link panel. Visual encodings: node size follows the chosen attribute
// (followers or tweets), shape separates reporters (squares) from ordinary
// users (circles), edge thickness follows weight, the inner fill lightness
// follows tweet count, and the outline color follows community membership.

import { forceLayout } from "./layout.js";
import { NEUTRAL_OUTLINE, communityColors, lightnessRamp, normalized } from "./palette.js";
import type { ExplorerStore } from "./state.js";
import type { NodeId } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 760;
const HEIGHT = 560;

export class NodeLinkView {
  readonly svg: SVGSVGElement;
  private zoom = 1;

  constructor(
    private readonly store: ExplorerStore,
    container: HTMLElement,
  ) {
    this.svg = document.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
    this.svg.setAttribute("class", "node-link");
    this.svg.addEventListener("click", (event) => {
      if (event.target === this.svg) this.store.selectMember(null);
    });
    this.svg.addEventListener("wheel", (event) => {
      event.preventDefault();
      this.zoom = Math.max(0.4, Math.min(6, this.zoom * (event.deltaY < 0 ? 1.15 : 0.87)));
      this.applyZoom();
    });
    container.appendChild(this.svg);
    store.subscribe(() => this.render());
    this.render();
  }

  private applyZoom(): void {
    const w = WIDTH / this.zoom;
    const h = HEIGHT / this.zoom;
    this.svg.setAttribute(
      "viewBox",
      `${(WIDTH - w) / 2} ${(HEIGHT - h) / 2} ${w} ${h}`,
    );
  }

  render(): void {
    this.svg.replaceChildren();
    const graph = this.store.graph;
    if (!graph) return;

    const positions = forceLayout(graph.nodes, graph.edges, WIDTH, HEIGHT);
    const colors = this.store.detection
      ? communityColors(this.store.detection.communities)
      : new Map<number, string>();
    const highlighted = this.store.highlightedNodes();
    const maxWeight = Math.max(1, ...graph.edges.map((e) => e.weight));
    const maxTweets = Math.max(0, ...graph.nodes.map((n) => n.tweets));
    const sizeOf = (id: NodeId): number => {
      const node = graph.nodes.find((n) => n.id === id);
      if (!node) return 0;
      return this.store.sizeEncoding === "followers" ? node.followers : node.tweets;
    };
    const maxSize = Math.max(1, ...graph.nodes.map((n) => sizeOf(n.id)));

    for (const edge of graph.edges) {
      const a = positions.get(edge.source);
      const b = positions.get(edge.target);
      if (!a || !b) continue;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
      line.setAttribute("stroke", "#bbb");
      line.setAttribute("stroke-width", String(0.5 + 3.5 * (edge.weight / maxWeight)));
      this.svg.appendChild(line);
    }

    for (const node of graph.nodes) {
      const pos = positions.get(node.id);
      if (!pos) continue;
      const radius = 5 + 11 * Math.sqrt(sizeOf(node.id) / maxSize);
      const community = this.store.communityOf(node.id);
      const outline = community !== null ? (colors.get(community) ?? NEUTRAL_OUTLINE) : NEUTRAL_OUTLINE;

      const shape = node.reporter
        ? document.createElementNS(SVG_NS, "rect")
        : document.createElementNS(SVG_NS, "circle");
      if (node.reporter) {
        shape.setAttribute("x", String(pos.x - radius));
        shape.setAttribute("y", String(pos.y - radius));
        shape.setAttribute("width", String(2 * radius));
        shape.setAttribute("height", String(2 * radius));
      } else {
        shape.setAttribute("cx", String(pos.x));
        shape.setAttribute("cy", String(pos.y));
        shape.setAttribute("r", String(radius));
      }
      shape.setAttribute("fill", lightnessRamp(normalized(node.tweets, maxTweets)));
      shape.setAttribute("stroke", outline);
      shape.setAttribute("stroke-width", highlighted.has(node.id) ? "4" : "1.5");
      shape.setAttribute("data-node-id", String(node.id));
      if (highlighted.has(node.id)) shape.classList.add("highlight");
      shape.addEventListener("click", (event) => {
        event.stopPropagation();
        this.store.selectMember(node.id);
      });

      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = node.label;
      shape.appendChild(title);
      this.svg.appendChild(shape);
    }
  }
}
