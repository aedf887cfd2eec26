/**
 * URL query-string persistence for the dashboard filters.
 *
 * The serialized form only carries values that differ from the defaults,
 * so a pristine dashboard keeps a clean URL and every interaction stays
 * shareable/reloadable.
 */

export const DEFAULT_TERM = "all";
export const DEFAULT_TOP_N = 20;
export const MAX_TOP_N = 50;

/** The filter half of the dashboard state (what the URL round-trips). */
export interface FilterState {
  term: string;
  from: string | null;
  to: string | null;
  selectedState: string | null;
  topN: number;
}

export interface UrlAdapter {
  /** Current query string, with or without a leading "?". */
  read(): string;
  /** Replace the query string (no history entry). */
  write(query: string): void;
}

/** Adapter over `window.location` / `history.replaceState`. */
export function browserUrlAdapter(): UrlAdapter {
  return {
    read: () => window.location.search,
    write: (query) => {
      const url = query
        ? `${window.location.pathname}?${query}`
        : window.location.pathname;
      window.history.replaceState(null, "", url);
    },
  };
}

/** In-memory adapter for tests and headless use. */
export function memoryUrlAdapter(initial = ""): UrlAdapter & { query: string } {
  const adapter = {
    query: initial,
    read: () => adapter.query,
    write: (query: string) => {
      adapter.query = query;
    },
  };
  return adapter;
}

const ISO_DATE = /^\d{4}-\d{2}-\d{2}$/;
const STATE_CODE = /^[A-Z]{2}$/;

/**
 * Parse a query string into partial filter state. Malformed values are
 * dropped rather than carried into requests.
 */
export function parseQuery(query: string): Partial<FilterState> {
  const params = new URLSearchParams(
    query.startsWith("?") ? query.slice(1) : query,
  );
  const out: Partial<FilterState> = {};

  const term = params.get("term");
  if (term) out.term = term;

  const from = params.get("from");
  if (from && ISO_DATE.test(from)) out.from = from;

  const to = params.get("to");
  if (to && ISO_DATE.test(to)) out.to = to;

  const state = params.get("state")?.toUpperCase();
  if (state && STATE_CODE.test(state)) out.selectedState = state;

  const n = Number(params.get("n"));
  if (Number.isInteger(n) && n >= 1 && n <= MAX_TOP_N) out.topN = n;

  return out;
}

/**
 * Serialize filter state, omitting defaults. `defaultFrom`/`defaultTo`
 * are the data-range bounds the pickers start at.
 */
export function serializeQuery(
  state: FilterState,
  defaultFrom: string | null,
  defaultTo: string | null,
): string {
  const params = new URLSearchParams();
  if (state.term !== DEFAULT_TERM) params.set("term", state.term);
  if (state.from && state.from !== defaultFrom) params.set("from", state.from);
  if (state.to && state.to !== defaultTo) params.set("to", state.to);
  if (state.selectedState) params.set("state", state.selectedState);
  if (state.topN !== DEFAULT_TOP_N) params.set("n", String(state.topN));
  return params.toString();
}
