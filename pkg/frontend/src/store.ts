/**
 * Dashboard state machine.
 *
 * Holds the filter state (term, date range, selected state, top-N), the
 * three data panels (map, skills, counts), and fires exactly the fetch
 * set each interaction mandates:
 *
 *   term change   -> refetch map + skills + counts
 *   date change   -> refetch map + skills + counts
 *   state click   -> refetch skills + counts (the map is the selector,
 *                    so it stays nationwide)
 *   reset         -> clear selection, refetch skills + counts
 *   top-N change  -> refetch skills
 *
 * No-op inputs (same term, same range, same state) fire nothing.
 *
 * Concurrency: one monotonically increasing sequence number per panel;
 * a response is applied only if it is still the newest request for that
 * panel, so stale in-flight responses are discarded.
 */

import {
  ApiError,
  type ApiClient,
  type Meta,
  type QueryParams,
  type SkillCount,
  type StateCount,
  type WeekCount,
} from "./api";
import {
  DEFAULT_TERM,
  DEFAULT_TOP_N,
  MAX_TOP_N,
  parseQuery,
  serializeQuery,
  type FilterState,
  type UrlAdapter,
} from "./urlState";

export type PanelName = "map" | "skills" | "counts";

export type PanelStatus = "loading" | "ready" | "error";

export interface PanelState<T> {
  status: PanelStatus;
  data: T | null;
  message: string | null;
}

export interface DashboardSnapshot extends FilterState {
  meta: Meta | null;
  metaError: string | null;
  map: PanelState<StateCount[]>;
  skills: PanelState<SkillCount[]>;
  counts: PanelState<WeekCount[]>;
}

export interface DashboardStore {
  getState(): DashboardSnapshot;
  subscribe(listener: () => void): () => void;
  /** Fetch meta, apply URL state, then load all three panels. */
  load(): Promise<void>;
  setTerm(term: string): void;
  setDateRange(from: string | null, to: string | null): void;
  selectState(code: string): void;
  reset(): void;
  setTopN(n: number): void;
  /** Resolves once no request is in flight (cascades included). */
  whenIdle(): Promise<void>;
  destroy(): void;
}

function clampDate(
  value: string | null,
  bounds: { min_date: string; max_date: string } | null,
): string | null {
  if (value === null || bounds === null) return value;
  if (value < bounds.min_date) return bounds.min_date;
  if (value > bounds.max_date) return bounds.max_date;
  return value;
}

function errorMessage(error: unknown): string {
  return error instanceof ApiError || error instanceof Error
    ? error.message
    : String(error);
}

export interface StoreOptions {
  api: ApiClient;
  url: UrlAdapter;
}

export function createDashboardStore(options: StoreOptions): DashboardStore {
  const { api, url } = options;
  const fromUrl = parseQuery(url.read());

  let destroyed = false;
  let defaultFrom: string | null = null;
  let defaultTo: string | null = null;

  const state: FilterState & { meta: Meta | null; metaError: string | null } = {
    term: fromUrl.term ?? DEFAULT_TERM,
    from: fromUrl.from ?? null,
    to: fromUrl.to ?? null,
    selectedState: fromUrl.selectedState ?? null,
    topN: fromUrl.topN ?? DEFAULT_TOP_N,
    meta: null,
    metaError: null,
  };

  const listeners = new Set<() => void>();
  const inflight = new Set<Promise<unknown>>();

  function notify(): void {
    for (const listener of listeners) listener();
  }

  function track<T>(promise: Promise<T>): Promise<T> {
    inflight.add(promise);
    // .then with both handlers (not .finally) so this bookkeeping chain
    // never itself becomes an unhandled rejection
    const release = () => void inflight.delete(promise);
    promise.then(release, release);
    return promise;
  }

  /**
   * One panel's fetch lifecycle: refresh() issues a request tagged with a
   * ticket; only the newest ticket may apply its response, so anything
   * slower than a later request is discarded (success and failure alike).
   */
  function createPanelRuntime<T>(path: string, params: () => QueryParams) {
    let slot: PanelState<T> = { status: "loading", data: null, message: null };
    let newest = 0;
    return {
      get: (): PanelState<T> => slot,

      refresh(): void {
        const ticket = ++newest;
        // keep the last data visible while the replacement loads
        slot = { status: "loading", data: slot.data, message: null };
        notify();
        track(
          api.getJson(path, params()).then(
            (data) => {
              if (destroyed || ticket !== newest) return;
              // trusted wire boundary: the server's documented row shape
              slot = { status: "ready", data: data as T, message: null };
              notify();
            },
            (error: unknown) => {
              if (destroyed || ticket !== newest) return;
              slot = { status: "error", data: null, message: errorMessage(error) };
              notify();
            },
          ),
        );
      },

      fail(message: string): void {
        ++newest; // invalidate anything still in flight
        slot = { status: "error", data: null, message };
      },
    };
  }

  function syncUrl(): void {
    url.write(serializeQuery(state, defaultFrom, defaultTo));
  }

  function panelParams(panel: PanelName): QueryParams {
    const params: QueryParams = {};
    if (state.term !== DEFAULT_TERM) params.term = state.term;
    if (state.from) params.from = state.from;
    if (state.to) params.to = state.to;
    if (panel !== "map" && state.selectedState) {
      params.state = state.selectedState;
    }
    if (panel === "skills") params.n = String(state.topN);
    return params;
  }

  const panels = {
    map: createPanelRuntime<StateCount[]>("/api/map/states", () =>
      panelParams("map"),
    ),
    skills: createPanelRuntime<SkillCount[]>("/api/skills", () =>
      panelParams("skills"),
    ),
    counts: createPanelRuntime<WeekCount[]>("/api/counts/weekly", () =>
      panelParams("counts"),
    ),
  };

  function refreshPanels(names: PanelName[]): void {
    for (const name of names) panels[name].refresh();
  }

  async function load(): Promise<void> {
    let meta: Meta;
    try {
      meta = (await track(api.getJson("/api/meta"))) as Meta;
    } catch (error) {
      const message = errorMessage(error);
      state.metaError = message;
      panels.map.fail(message);
      panels.skills.fail(message);
      panels.counts.fail(message);
      notify();
      return;
    }
    if (destroyed) return;
    state.meta = meta;
    state.metaError = null;

    const bounds = meta.data_range;
    defaultFrom = bounds?.min_date ?? null;
    defaultTo = bounds?.max_date ?? null;
    if (!meta.terms.includes(state.term)) state.term = DEFAULT_TERM;
    state.from = clampDate(state.from, bounds) ?? defaultFrom;
    state.to = clampDate(state.to, bounds) ?? defaultTo;
    if (state.from && state.to && state.from > state.to) {
      [state.from, state.to] = [state.to, state.from];
    }

    syncUrl();
    refreshPanels(["map", "skills", "counts"]);
  }

  return {
    getState: () => ({
      ...state,
      map: panels.map.get(),
      skills: panels.skills.get(),
      counts: panels.counts.get(),
    }),

    subscribe(listener) {
      listeners.add(listener);
      return () => listeners.delete(listener);
    },

    load() {
      return track(load());
    },

    setTerm(term) {
      if (term === state.term) return;
      if (state.meta && !state.meta.terms.includes(term)) return;
      state.term = term;
      syncUrl();
      refreshPanels(["map", "skills", "counts"]);
    },

    setDateRange(from, to) {
      const bounds = state.meta?.data_range ?? null;
      let nextFrom = clampDate(from, bounds);
      let nextTo = clampDate(to, bounds);
      if (nextFrom && nextTo && nextFrom > nextTo) {
        [nextFrom, nextTo] = [nextTo, nextFrom];
      }
      if (nextFrom === state.from && nextTo === state.to) {
        // no refetch, but the inputs may hold the raw out-of-range value;
        // a render snaps them back to the clamped state
        notify();
        return;
      }
      state.from = nextFrom;
      state.to = nextTo;
      syncUrl();
      refreshPanels(["map", "skills", "counts"]);
    },

    selectState(code) {
      if (code === state.selectedState) return;
      state.selectedState = code;
      syncUrl();
      refreshPanels(["skills", "counts"]);
    },

    reset() {
      if (state.selectedState === null) return;
      state.selectedState = null;
      syncUrl();
      refreshPanels(["skills", "counts"]);
    },

    setTopN(n) {
      const next = Math.min(Math.max(Math.trunc(n), 1), MAX_TOP_N);
      if (next === state.topN) return;
      state.topN = next;
      syncUrl();
      refreshPanels(["skills"]);
    },

    async whenIdle() {
      while (inflight.size > 0) {
        await Promise.allSettled([...inflight]);
      }
    },

    destroy() {
      destroyed = true;
      listeners.clear();
    },
  };
}
