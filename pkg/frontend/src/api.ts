/**
 * JSON API client.
 *
 * The dashboard talks to the server exclusively through the `ApiClient`
 * interface so tests can substitute a request-recording stub.
 */

/** Query parameters; empty/undefined values are omitted from the URL. */
export type QueryParams = Record<string, string | undefined>;

export interface ApiClient {
  getJson(path: string, params?: QueryParams): Promise<unknown>;
}

/** `/api/meta` payload. */
export interface Meta {
  terms: string[];
  lexicon_version: string | null;
  data_range: { min_date: string; max_date: string } | null;
  states: string[];
}

/** One row of `/api/skills`. */
export interface SkillCount {
  skill: string;
  count: number;
}

/** One row of `/api/counts/weekly`. */
export interface WeekCount {
  week: string;
  count: number;
}

/** One row of `/api/map/states`; `state` may be the literal "unknown". */
export interface StateCount {
  state: string;
  count: number;
}

/** Error raised for non-2xx responses, carrying the server's envelope. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
  }
}

function buildUrl(baseUrl: string, path: string, params?: QueryParams): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params ?? {})) {
    if (value !== undefined && value !== "") {
      search.set(key, value);
    }
  }
  const query = search.toString();
  return baseUrl + path + (query ? `?${query}` : "");
}

/**
 * Fetch-backed client. `baseUrl` is "" when the bundle is served by the
 * API process itself, or an absolute origin during development.
 */
export function createHttpApi(baseUrl = ""): ApiClient {
  return {
    async getJson(path: string, params?: QueryParams): Promise<unknown> {
      let response: Response;
      try {
        response = await fetch(buildUrl(baseUrl, path, params), {
          headers: { Accept: "application/json" },
        });
      } catch {
        throw new ApiError(0, "unreachable", "API unreachable");
      }
      if (!response.ok) {
        let code = "http_error";
        let message = `HTTP ${response.status}`;
        try {
          const body = (await response.json()) as {
            code?: string;
            message?: string;
          };
          if (body.code) code = body.code;
          if (body.message) message = body.message;
        } catch {
          // non-JSON error body; keep the generic message
        }
        throw new ApiError(response.status, code, message);
      }
      return response.json();
    },
  };
}
