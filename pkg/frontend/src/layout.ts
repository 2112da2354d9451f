// Pure layout math for the two views: a small deterministic force layout
// for the node-link panel and a ring-based circle packing for communities.

import type { GraphEdge, GraphNode, NodeId } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface PlacedCircle {
  node: NodeId;
  x: number;
  y: number;
  r: number;
}

export interface CommunityPack {
  community: number;
  x: number;
  y: number;
  r: number;
  members: PlacedCircle[];
}

/**
 * Force-directed positions: seeded circular start, spring forces along
 * edges, pairwise repulsion, mild centering. Deterministic for fixed input.
 */
export function forceLayout(
  nodes: GraphNode[],
  edges: GraphEdge[],
  width: number,
  height: number,
  iterations = 150,
): Map<NodeId, Point> {
  const n = nodes.length;
  const positions = new Map<NodeId, Point>();
  if (n === 0) return positions;
  const index = new Map<NodeId, number>();
  nodes.forEach((node, i) => index.set(node.id, i));

  const radius = Math.min(width, height) * 0.38;
  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n;
    xs[i] = width / 2 + radius * Math.cos(angle);
    ys[i] = height / 2 + radius * Math.sin(angle);
  }

  const pairs = edges
    .map((e) => [index.get(e.source), index.get(e.target)] as const)
    .filter((p): p is readonly [number, number] => p[0] !== undefined && p[1] !== undefined);

  const area = width * height;
  const k = Math.sqrt(area / Math.max(1, n)) * 0.6;
  let temperature = Math.min(width, height) / 8;

  for (let step = 0; step < iterations; step++) {
    const dx = new Float64Array(n);
    const dy = new Float64Array(n);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let vx = xs[i] - xs[j];
        let vy = ys[i] - ys[j];
        let dist2 = vx * vx + vy * vy;
        if (dist2 < 1e-6) {
          // nudge coincident nodes apart deterministically
          vx = 0.01 * (i - j);
          vy = 0.01;
          dist2 = vx * vx + vy * vy;
        }
        const repulse = (k * k) / dist2;
        dx[i] += vx * repulse;
        dy[i] += vy * repulse;
        dx[j] -= vx * repulse;
        dy[j] -= vy * repulse;
      }
    }
    for (const [a, b] of pairs) {
      const vx = xs[a] - xs[b];
      const vy = ys[a] - ys[b];
      const dist = Math.sqrt(vx * vx + vy * vy) || 1e-3;
      const attract = (dist * dist) / k / dist;
      dx[a] -= vx * attract;
      dy[a] -= vy * attract;
      dx[b] += vx * attract;
      dy[b] += vy * attract;
    }
    for (let i = 0; i < n; i++) {
      dx[i] += (width / 2 - xs[i]) * 0.02;
      dy[i] += (height / 2 - ys[i]) * 0.02;
      const len = Math.sqrt(dx[i] * dx[i] + dy[i] * dy[i]) || 1e-9;
      const scale = Math.min(len, temperature) / len;
      xs[i] += dx[i] * scale;
      ys[i] += dy[i] * scale;
      xs[i] = Math.max(10, Math.min(width - 10, xs[i]));
      ys[i] = Math.max(10, Math.min(height - 10, ys[i]));
    }
    temperature *= 0.97;
  }

  nodes.forEach((node, i) => positions.set(node.id, { x: xs[i], y: ys[i] }));
  return positions;
}

/**
 * Place circles of the given radii around the origin in concentric rings:
 * first circle at the center, later ones ring by ring. Guarantees no two
 * circles overlap. Returns positions plus the enclosing radius.
 */
export function packRing(radii: number[]): { offsets: Point[]; enclosing: number } {
  const offsets: Point[] = [];
  if (radii.length === 0) return { offsets, enclosing: 0 };
  offsets.push({ x: 0, y: 0 });
  let enclosing = radii[0];
  let placed = 1;
  let ringInner = radii[0];
  while (placed < radii.length) {
    const ringMax = Math.max(...radii.slice(placed));
    const ringRadius = ringInner + ringMax * 1.05;
    // every slot is sized for the largest remaining circle, so equally
    // spaced neighbors cannot overlap regardless of their actual radii
    const circumference = 2 * Math.PI * ringRadius;
    const slot = 2.6 * ringMax;
    let used = 0;
    const start = placed;
    while (placed < radii.length) {
      if (used + slot > circumference && placed > start) break;
      used += slot;
      placed += 1;
    }
    const count = placed - start;
    for (let i = 0; i < count; i++) {
      const angle = (2 * Math.PI * i) / count;
      offsets.push({
        x: ringRadius * Math.cos(angle),
        y: ringRadius * Math.sin(angle),
      });
    }
    const ringOuter = ringRadius + ringMax;
    enclosing = Math.max(enclosing, ringOuter);
    ringInner = ringOuter;
  }
  return { offsets, enclosing };
}

/**
 * Circle packing of communities: members become circles with radius from
 * `radiusOf`, grouped inside one enclosing circle per community, and the
 * community circles themselves are ring-packed into the panel.
 */
export function packCommunities(
  groups: { community: number; members: NodeId[] }[],
  radiusOf: (node: NodeId) => number,
  width: number,
  height: number,
  orderBySize = false,
): CommunityPack[] {
  const packs: { community: number; members: PlacedCircle[]; r: number }[] = [];
  for (const group of groups) {
    const members = [...group.members];
    if (orderBySize) {
      members.sort((a, b) => radiusOf(b) - radiusOf(a) || String(a).localeCompare(String(b)));
    }
    const radii = members.map((m) => Math.max(1, radiusOf(m)));
    const { offsets, enclosing } = packRing(radii);
    packs.push({
      community: group.community,
      r: enclosing + 4,
      members: members.map((m, i) => ({ node: m, x: offsets[i].x, y: offsets[i].y, r: radii[i] })),
    });
  }

  const { offsets, enclosing } = packRing(packs.map((p) => p.r));
  const scale = enclosing > 0 ? Math.min(width, height) / 2 / (enclosing * 1.05) : 1;
  const cx = width / 2;
  const cy = height / 2;
  return packs.map((pack, i) => ({
    community: pack.community,
    x: cx + offsets[i].x * scale,
    y: cy + offsets[i].y * scale,
    r: pack.r * scale,
    members: pack.members.map((m) => ({
      node: m.node,
      x: cx + (offsets[i].x + m.x) * scale,
      y: cy + (offsets[i].y + m.y) * scale,
      r: m.r * scale,
    })),
  }));
}
