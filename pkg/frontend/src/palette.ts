// Community colors and the lightness ramps used by the encodings.

import type { CommunityInfo } from "./types.js";

export const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
];

export const NEUTRAL_OUTLINE = "#999999";

/**
 * Assign palette colors by descending community size (ties by id), cycling
 * when there are more communities than colors.
 */
export function communityColors(communities: CommunityInfo[]): Map<number, string> {
  const ordered = [...communities].sort((a, b) => b.size - a.size || a.id - b.id);
  const colors = new Map<number, string>();
  ordered.forEach((community, rank) => {
    colors.set(community.id, PALETTE[rank % PALETTE.length]);
  });
  return colors;
}

/**
 * Linear single-hue lightness ramp: 0 maps to a pale blue, 1 to a dark one.
 * Used for bar darkness (member coverage) and node inner color (tweets).
 */
export function lightnessRamp(t: number): string {
  const clamped = Math.max(0, Math.min(1, t));
  const lightness = 90 - 55 * clamped;
  return `hsl(210, 60%, ${lightness}%)`;
}

/** Normalizes a raw count against a maximum for the lightness ramp. */
export function normalized(value: number, max: number): number {
  return max > 0 ? value / max : 0;
}
