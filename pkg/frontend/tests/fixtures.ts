// Shared test fixtures mirroring real API payloads.

import type { CommunityInfo, CommunityStatsPayload, GraphPayload } from "../src/types.js";

export function smallGraph(): GraphPayload {
  return {
    nodes: [
      { id: "a0", label: "A0", followers: 120, tweets: 4, reporter: true, degree: 3 },
      { id: "a1", label: "A1", followers: 80, tweets: 2, reporter: false, degree: 3 },
      { id: "a2", label: "A2", followers: 40, tweets: 7, reporter: false, degree: 3 },
      { id: "a3", label: "A3", followers: 10, tweets: 0, reporter: false, degree: 2 },
      { id: "b0", label: "B0", followers: 300, tweets: 1, reporter: false, degree: 2 },
      { id: "b1", label: "B1", followers: 25, tweets: 9, reporter: false, degree: 1 },
    ],
    edges: [
      { source: "a0", target: "a1", type: "retweet", weight: 5 },
      { source: "a1", target: "a2", type: "retweet", weight: 5 },
      { source: "a0", target: "a2", type: "retweet", weight: 5 },
      { source: "a2", target: "a3", type: "retweet", weight: 5 },
      { source: "a0", target: "a3", type: "retweet", weight: 2 },
      { source: "a3", target: "b0", type: "retweet", weight: 1 },
      { source: "b0", target: "b1", type: "retweet", weight: 4 },
    ],
    records: [
      { author: "a0", theme: "sport", media: "slate.fr", date: "2015-01-10" },
      { author: "a2", theme: "world", media: "slate.fr", date: "2015-01-11" },
    ],
  };
}

export function smallCommunities(): CommunityInfo[] {
  return [
    { id: 0, size: 4, iw: 22, wd: 47, members: ["a0", "a1", "a2", "a3"] },
    { id: 1, size: 2, iw: 4, wd: 9, members: ["b0", "b1"] },
  ];
}

export function shareStats(): CommunityStatsPayload {
  return {
    community: 0,
    member_count: 10,
    tweet_count: 50,
    tweet_share: {
      theme: { sport: 0.14, world: 0.86 },
      media: { "slate.fr": 0.88, "lefigaro.fr": 0.12 },
    },
    member_coverage: {
      theme: { sport: 0.3, world: 0.9 },
      media: { "slate.fr": 1.0, "lefigaro.fr": 0.4 },
    },
    member_share: { a0: 1.0, a1: 0.5 },
    members: ["a0", "a1"],
  };
}
