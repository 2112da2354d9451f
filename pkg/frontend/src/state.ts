// Central view state. Both views render from the same store, so the
// highlighted node set is identical everywhere by construction; selections
// are cleared whenever the data under them is refreshed.

import type { CommunityInfo, GraphPayload, NodeId, SizeEncoding } from "./types.js";

export interface Detection {
  communities: CommunityInfo[];
  k: number;
  modularity: number | null;
  elapsedMs: number;
}

export type Listener = () => void;

export class ExplorerStore {
  graph: GraphPayload | null = null;
  detection: Detection | null = null;
  selectedCommunity: number | null = null;
  selectedMember: NodeId | null = null;
  activeTheme: string | null = null;
  activeMedia: string | null = null;
  sizeEncoding: SizeEncoding = "followers";
  orderBySize = false;

  private listeners: Listener[] = [];
  private detectToken = 0;
  private detectInFlight = false;
  private membership = new Map<NodeId, number>();

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  setGraph(payload: GraphPayload): void {
    this.graph = payload;
    this.detection = null;
    this.membership.clear();
    this.selectedCommunity = null;
    this.selectedMember = null;
    this.emit();
  }

  /** Marks a detect request as in flight; returns null if one already is. */
  beginDetect(): number | null {
    if (this.detectInFlight) return null;
    this.detectInFlight = true;
    this.detectToken += 1;
    return this.detectToken;
  }

  /** Applies a detect result unless a newer request or refresh superseded it. */
  completeDetect(token: number, detection: Detection | null): boolean {
    if (token !== this.detectToken) return false;
    this.detectInFlight = false;
    if (detection === null) {
      this.emit();
      return false;
    }
    this.detection = detection;
    this.membership.clear();
    for (const community of detection.communities) {
      for (const member of community.members) this.membership.set(member, community.id);
    }
    this.selectedCommunity = null;
    this.selectedMember = null;
    this.emit();
    return true;
  }

  get detecting(): boolean {
    return this.detectInFlight;
  }

  communityOf(node: NodeId): number | null {
    const community = this.membership.get(node);
    return community === undefined ? null : community;
  }

  communityInfo(id: number): CommunityInfo | null {
    return this.detection?.communities.find((c) => c.id === id) ?? null;
  }

  selectCommunity(id: number | null): void {
    if (id !== null && this.communityInfo(id) === null) return;
    this.selectedCommunity = id;
    this.selectedMember = null;
    this.emit();
  }

  selectMember(node: NodeId | null): void {
    if (node === null) {
      this.selectedMember = null;
      this.emit();
      return;
    }
    if (!this.graph || !this.graph.nodes.some((n) => n.id === node)) return;
    this.selectedMember = node;
    this.selectedCommunity = this.communityOf(node);
    this.emit();
  }

  setSizeEncoding(encoding: SizeEncoding): void {
    this.sizeEncoding = encoding;
    this.emit();
  }

  setOrderBySize(ordered: boolean): void {
    this.orderBySize = ordered;
    this.emit();
  }

  setSelection(theme: string | null, media: string | null): void {
    this.activeTheme = theme;
    this.activeMedia = media;
    this.emit();
  }

  /** The one highlighted node set that every view must agree on. */
  highlightedNodes(): Set<NodeId> {
    if (this.selectedMember !== null) return new Set([this.selectedMember]);
    if (this.selectedCommunity !== null) {
      const info = this.communityInfo(this.selectedCommunity);
      if (info) return new Set(info.members);
    }
    return new Set();
  }
}
