// Communities panel: one enclosing circle per detected community, member
// circles inside sized by the chosen attribute, optionally ordered by size.

import { packCommunities } from "./layout.js";
import { NEUTRAL_OUTLINE, communityColors } from "./palette.js";
import type { ExplorerStore } from "./state.js";
import type { NodeId } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 560;
const HEIGHT = 560;

export class CirclePackView {
  readonly svg: SVGSVGElement;

  constructor(
    private readonly store: ExplorerStore,
    container: HTMLElement,
  ) {
    this.svg = document.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
    this.svg.setAttribute("class", "circle-pack");
    this.svg.addEventListener("click", (event) => {
      if (event.target === this.svg) this.store.selectCommunity(null);
    });
    container.appendChild(this.svg);
    store.subscribe(() => this.render());
    this.render();
  }

  render(): void {
    this.svg.replaceChildren();
    const graph = this.store.graph;
    const detection = this.store.detection;
    if (!graph) return;

    const attribute = new Map<NodeId, number>();
    for (const node of graph.nodes) {
      attribute.set(node.id, this.store.sizeEncoding === "followers" ? node.followers : node.tweets);
    }
    const maxAttr = Math.max(1, ...attribute.values());
    const radiusOf = (node: NodeId) => 4 + 12 * Math.sqrt((attribute.get(node) ?? 0) / maxAttr);

    const groups = detection
      ? detection.communities.map((c) => ({ community: c.id, members: c.members }))
      : [{ community: -1, members: graph.nodes.map((n) => n.id) }];
    const colors = detection ? communityColors(detection.communities) : new Map<number, string>();
    const highlighted = this.store.highlightedNodes();

    const packs = packCommunities(groups, radiusOf, WIDTH, HEIGHT, this.store.orderBySize);
    for (const pack of packs) {
      const color = pack.community >= 0 ? (colors.get(pack.community) ?? NEUTRAL_OUTLINE) : NEUTRAL_OUTLINE;
      const enclosure = document.createElementNS(SVG_NS, "circle");
      enclosure.setAttribute("cx", String(pack.x));
      enclosure.setAttribute("cy", String(pack.y));
      enclosure.setAttribute("r", String(pack.r));
      enclosure.setAttribute("fill", "none");
      enclosure.setAttribute("stroke", color);
      enclosure.setAttribute("stroke-width", pack.community === this.store.selectedCommunity ? "3.5" : "1.5");
      enclosure.setAttribute("data-community-id", String(pack.community));
      if (pack.community >= 0) {
        enclosure.addEventListener("click", (event) => {
          event.stopPropagation();
          this.store.selectCommunity(pack.community);
        });
      }
      this.svg.appendChild(enclosure);

      for (const member of pack.members) {
        const circle = document.createElementNS(SVG_NS, "circle");
        circle.setAttribute("cx", String(member.x));
        circle.setAttribute("cy", String(member.y));
        circle.setAttribute("r", String(member.r));
        circle.setAttribute("fill", color);
        circle.setAttribute("fill-opacity", "0.55");
        circle.setAttribute("stroke", highlighted.has(member.node) ? "#000" : "none");
        circle.setAttribute("stroke-width", highlighted.has(member.node) ? "2.5" : "0");
        circle.setAttribute("data-node-id", String(member.node));
        if (highlighted.has(member.node)) circle.classList.add("highlight");
        circle.addEventListener("click", (event) => {
          event.stopPropagation();
          this.store.selectMember(member.node);
        });
        const title = document.createElementNS(SVG_NS, "title");
        title.textContent = String(member.node);
        circle.appendChild(title);
        this.svg.appendChild(circle);
      }
    }
  }
}
