// Thin fetch client for the exploration API.

import type {
  CommunityInfo,
  CommunityStatsPayload,
  DetectRequest,
  DetectResponse,
  FilterRequest,
  GraphPayload,
  SessionSummary,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (body && typeof body.error === "string") detail = body.error;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private url(path: string): string {
    return this.base + path;
  }

  async graph(): Promise<GraphPayload> {
    return unwrap(await fetch(this.url("/graph")));
  }

  async filter(body: FilterRequest): Promise<SessionSummary> {
    return unwrap(
      await fetch(this.url("/filter"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }

  async detect(body: DetectRequest): Promise<DetectResponse> {
    return unwrap(
      await fetch(this.url("/detect"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }

  async communities(): Promise<CommunityInfo[]> {
    const payload = await unwrap<{ communities: CommunityInfo[] }>(
      await fetch(this.url("/communities")),
    );
    return payload.communities;
  }

  async communityStats(
    id: number,
    selection: { theme?: string; media?: string } = {},
  ): Promise<CommunityStatsPayload> {
    const params = new URLSearchParams();
    if (selection.theme !== undefined) params.set("theme", selection.theme);
    if (selection.media !== undefined) params.set("media", selection.media);
    const query = params.toString();
    return unwrap(await fetch(this.url(`/communities/${id}/stats${query ? "?" + query : ""}`)));
  }
}
