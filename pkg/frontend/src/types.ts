// Wire types for the exploration API. Field names mirror the server exactly;
// the UI never recomputes a statistic, it only displays these values.

export type NodeId = string | number;

export interface GraphNode {
  id: NodeId;
  label: string;
  followers: number;
  tweets: number;
  reporter: boolean;
  degree: number;
}

export interface GraphEdge {
  source: NodeId;
  target: NodeId;
  type: string;
  weight: number;
}

export interface GraphRecord {
  author: NodeId;
  theme: string;
  media: string;
  date: string;
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: GraphEdge[];
  records: GraphRecord[];
}

export interface FilterRequest {
  min_degree?: number;
  edge_type?: string;
  themes?: string[] | null;
  medias?: string[] | null;
  date_from?: string | null;
  date_to?: string | null;
}

export interface DetectRequest {
  omega?: number;
  sort_choice?: string;
  seed?: number;
}

export interface SessionSummary {
  v: number;
  edge_count: number;
  total_weight: number;
  record_count: number;
  has_detection: boolean;
}

export interface DetectResponse {
  partition: { k: number; assignment: number[] };
  node_ids: NodeId[];
  metrics: {
    modularity: number | null;
    rand_index: number | null;
    k: number;
    elapsed_ms: number;
  };
}

export interface CommunityInfo {
  id: number;
  size: number;
  iw: number;
  wd: number;
  members: NodeId[];
}

export interface CommunityStatsPayload {
  community: number;
  member_count: number;
  tweet_count: number;
  tweet_share: { theme: Record<string, number>; media: Record<string, number> };
  member_coverage: { theme: Record<string, number>; media: Record<string, number> };
  member_share: Record<string, number>;
  members: NodeId[];
}

export type SizeEncoding = "followers" | "tweets";
