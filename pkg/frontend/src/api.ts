import type {
  PoiListResponse,
  RadarResponse,
  RecommendRequest,
  RecommendResponse,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof Error && err.name === "AbortError";
}

export class ApiClient {
  private inflightRecommend: AbortController | null = null;

  constructor(private baseUrl: string = "") {}

  async fetchPois(): Promise<PoiListResponse> {
    return this.getJson("/pois");
  }

  /**
   * Issue a recommendation query. At most one request is in flight: a newer
   * submission aborts the older one, so a slow early response can never
   * overwrite a fresher result.
   */
  async recommend(request: RecommendRequest): Promise<RecommendResponse> {
    if (this.inflightRecommend) {
      this.inflightRecommend.abort();
    }
    const controller = new AbortController();
    this.inflightRecommend = controller;
    try {
      const res = await fetch(`${this.baseUrl}/recommend`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(request),
        signal: controller.signal,
      });
      return await this.unwrap(res);
    } finally {
      if (this.inflightRecommend === controller) {
        this.inflightRecommend = null;
      }
    }
  }

  async fetchRadar(routeIds: number[], checkedIds: number[]): Promise<RadarResponse> {
    const params = new URLSearchParams({
      route: routeIds.join(","),
      checked: checkedIds.join(","),
    });
    return this.getJson(`/poi/${routeIds[0]}/features?${params.toString()}`);
  }

  private async getJson(path: string): Promise<any> {
    const res = await fetch(`${this.baseUrl}${path}`);
    return this.unwrap(res);
  }

  private async unwrap(res: Response): Promise<any> {
    if (!res.ok) {
      let code = "http_error";
      let message = `request failed with status ${res.status}`;
      try {
        const body = await res.json();
        if (body && typeof body.code === "string") {
          code = body.code;
          message = typeof body.message === "string" ? body.message : message;
        }
      } catch {
        // non-JSON error body; keep the generic message
      }
      throw new ApiError(res.status, code, message);
    }
    return res.json();
  }
}
