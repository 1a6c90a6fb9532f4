/** Typed client for the practice-selection HTTP API (/api/v1). */

export interface VocabularyNames {
  Domain: string[];
  Function: string[];
  Maintenance: string[];
  PerformanceEfficiency: string[];
}

export interface SchemaResponse {
  schema: unknown;
  names: VocabularyNames;
  criteriaNames: string[];
}

export interface ReportRow {
  name: string;
  apiClient: string;
  channel: string;
  finalScore: number;
}

export interface Report {
  rows: ReportRow[];
  recommended?: string;
  excluded: string[];
}

export interface ReportRequest {
  context: { domain: string; function: string; requireHostAgents: boolean };
  criteria: Record<string, number>;
}

/** Non-2xx responses carry exactly one of these. */
export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      let body: ApiErrorBody;
      try {
        body = (await response.json()) as ApiErrorBody;
      } catch {
        body = { code: "HttpError", message: `request failed with status ${response.status}` };
      }
      throw new ApiError(response.status, body);
    }
    return (await response.json()) as T;
  }

  getSchema(): Promise<SchemaResponse> {
    return this.request<SchemaResponse>("/api/v1/schema");
  }

  postReport(request: ReportRequest, signal?: AbortSignal): Promise<Report> {
    return this.request<Report>("/api/v1/report", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
      signal,
    });
  }
}
