// Application bootstrap: overview first (the whole graph renders on load),
// zoom and filter through the forms, details on demand via selections.

import { ApiClient } from "./api.js";
import { CirclePackView } from "./circlePack.js";
import { detectForm, filterForm } from "./forms.js";
import { NodeLinkView } from "./nodeLink.js";
import { ExplorerStore } from "./state.js";
import { renderStats } from "./statsPanel.js";
import type { CommunityStatsPayload, GraphNode } from "./types.js";

export function bootstrap(root: HTMLElement, api: ApiClient = new ApiClient()): ExplorerStore {
  const store = new ExplorerStore();

  root.innerHTML = `
    <header>
      <h1>Community explorer</h1>
      <span id="summary"></span>
      <label>size by
        <select id="size-encoding">
          <option value="followers">followers</option>
          <option value="tweets">tweets</option>
        </select>
      </label>
      <label><input type="checkbox" id="order-by-size"> order circles by size</label>
    </header>
    <main>
      <section id="node-link-panel"><h2>Node-link</h2></section>
      <section id="communities-panel"><h2>Communities</h2></section>
      <aside>
        <section id="filters-panel"><h2>Data filters</h2></section>
        <section id="detection-panel"><h2>Community detection</h2></section>
        <section id="member-panel" class="hidden"><h2>Member</h2><div id="member-card"></div></section>
        <section id="stats-section"><h2>Stats views</h2><div id="stats-panel"></div></section>
      </aside>
    </main>`;

  const nodeLinkPanel = root.querySelector<HTMLElement>("#node-link-panel")!;
  const communitiesPanel = root.querySelector<HTMLElement>("#communities-panel")!;
  new NodeLinkView(store, nodeLinkPanel);
  new CirclePackView(store, communitiesPanel);

  const sizeSelect = root.querySelector<HTMLSelectElement>("#size-encoding")!;
  sizeSelect.addEventListener("change", () => {
    store.setSizeEncoding(sizeSelect.value === "tweets" ? "tweets" : "followers");
  });
  const orderBox = root.querySelector<HTMLInputElement>("#order-by-size")!;
  orderBox.addEventListener("change", () => store.setOrderBySize(orderBox.checked));

  const filters = filterForm(async (body) => {
    const summary = await api.filter(body);
    root.querySelector("#summary")!.textContent =
      `${summary.v} nodes, ${summary.edge_count} edges, ${summary.record_count} records`;
    store.setGraph(await api.graph());
  });
  root.querySelector("#filters-panel")!.appendChild(filters.element);

  const detection = detectForm(async (body) => {
    const token = store.beginDetect();
    if (token === null) return;
    try {
      const result = await api.detect(body);
      const communities = await api.communities();
      store.completeDetect(token, {
        communities,
        k: result.metrics.k,
        modularity: result.metrics.modularity,
        elapsedMs: result.metrics.elapsed_ms,
      });
    } catch (error) {
      store.completeDetect(token, null);
      throw error;
    }
  });
  root.querySelector("#detection-panel")!.appendChild(detection.element);

  const statsPanel = root.querySelector<HTMLElement>("#stats-panel")!;
  const memberPanel = root.querySelector<HTMLElement>("#member-panel")!;
  const memberCard = root.querySelector<HTMLElement>("#member-card")!;

  let statsToken = 0;
  const refreshStats = async () => {
    const community = store.selectedCommunity;
    const token = ++statsToken;
    if (community === null || !store.detection) {
      renderStats(statsPanel, null, { onSelect: () => undefined });
      return;
    }
    const selection: { theme?: string; media?: string } = {};
    if (store.activeTheme !== null) selection.theme = store.activeTheme;
    if (store.activeMedia !== null) selection.media = store.activeMedia;
    let payload: CommunityStatsPayload;
    try {
      payload = await api.communityStats(community, selection);
    } catch {
      renderStats(statsPanel, null, { onSelect: () => undefined });
      return;
    }
    if (token !== statsToken || store.selectedCommunity !== community) return;
    renderStats(statsPanel, payload, {
      onSelect: (theme, media) => store.setSelection(theme, media),
    });
  };

  const renderMemberCard = () => {
    const id = store.selectedMember;
    const node: GraphNode | undefined = store.graph?.nodes.find((n) => n.id === id);
    if (id === null || !node) {
      memberPanel.classList.add("hidden");
      memberCard.replaceChildren();
      return;
    }
    memberPanel.classList.remove("hidden");
    memberCard.innerHTML = `
      <dl>
        <dt>label</dt><dd data-field="label">${node.label}</dd>
        <dt>followers</dt><dd data-field="followers">${node.followers}</dd>
        <dt>tweets</dt><dd data-field="tweets">${node.tweets}</dd>
        <dt>reporter</dt><dd data-field="reporter">${node.reporter ? "yes" : "no"}</dd>
      </dl>`;
  };

  let lastStatsKey = "";
  store.subscribe(() => {
    renderMemberCard();
    const key = JSON.stringify([store.selectedCommunity, store.activeTheme, store.activeMedia,
                                store.detection?.k ?? null]);
    if (key !== lastStatsKey) {
      lastStatsKey = key;
      void refreshStats();
    }
  });

  void (async () => {
    try {
      store.setGraph(await api.graph());
      const graph = store.graph!;
      root.querySelector("#summary")!.textContent =
        `${graph.nodes.length} nodes, ${graph.edges.length} edges, ${graph.records.length} records`;
    } catch (error) {
      root.querySelector("#summary")!.textContent = `no dataset loaded (${String(error)})`;
    }
  })();

  return store;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  bootstrap(document.getElementById("app")!);
}
