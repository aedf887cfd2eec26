"""HTTP read API over a posting store.

Thin JSON layer: every endpoint parses its query string by hand (so
validation failures surface as 400s with a stable error envelope instead
of framework-shaped errors), opens one snapshot, and delegates to the
analytics functions. List endpoints return bare JSON arrays in ranked
order; identical stores produce byte-identical bodies.

Every non-2xx body is exactly:
    {"status": <http status>, "code": <short string>, "message": <text>}
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import __version__
from ..analytics import (
    BadFilter,
    Filter,
    UnknownSkill,
    company_counts,
    skill_timeseries,
    state_counts,
    top_skills,
    weekly_counts,
)
from ..store import Store, StoreError
from ..terms import ALL_TERMS

MAX_N = 200
DEFAULT_N = 20


def _parse_n(raw: str | None) -> int:
    if raw is None or raw == "":
        return DEFAULT_N
    try:
        n = int(raw)
    except ValueError:
        raise BadFilter("n", f"not an integer: {raw!r}")
    if not 1 <= n <= MAX_N:
        raise BadFilter("n", f"must be between 1 and {MAX_N}")
    return n


def _envelope(code: str, message: str, http_status: int) -> JSONResponse:
    return JSONResponse(
        status_code=http_status,
        content={"status": http_status, "code": code, "message": message},
    )


def create_app(store: Store, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="skillscope", version=__version__, docs_url=None)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(BadFilter)
    async def _bad_filter(request: Request, exc: BadFilter):
        return _envelope("bad_parameter", str(exc), 400)

    @app.exception_handler(UnknownSkill)
    async def _unknown_skill(request: Request, exc: UnknownSkill):
        return _envelope("unknown_skill", str(exc), 422)

    @app.exception_handler(StoreError)
    async def _store_error(request: Request, exc: StoreError):
        return _envelope("store_unavailable", str(exc), 503)

    @app.exception_handler(Exception)
    async def _unexpected(request: Request, exc: Exception):
        return _envelope("internal", exc.__class__.__name__, 500)

    @app.get("/healthz")
    def healthz():
        try:
            store.count_postings()
        except StoreError as exc:
            return _envelope("store_unavailable", str(exc), 503)
        return {"status": "ok", "version": __version__}

    @app.get("/api/meta")
    def meta():
        with store.snapshot() as conn:
            span = store.date_span(conn=conn)
            lexicon_version = store.active_lexicon_version()
            present = sorted(
                code for code, _ in store.group_counts("state", conn=conn)
            )
        return {
            "terms": ["all"] + [t.slug for t in ALL_TERMS],
            "lexicon_version": lexicon_version,
            "data_range": (
                {"min_date": span[0], "max_date": span[1]} if span else None
            ),
            "states": present,
        }

    @app.get("/api/skills")
    def skills(
        term: str | None = None,
        date_from: str | None = Query(None, alias="from"),
        date_to: str | None = Query(None, alias="to"),
        state: str | None = None,
        company: str | None = None,
        n: str | None = None,
    ):
        flt = Filter.from_params(term, date_from, date_to, state, company)
        limit = _parse_n(n)
        with store.snapshot() as conn:
            return top_skills(store, flt, n=limit, conn=conn)

    @app.get("/api/counts/weekly")
    def counts_weekly(
        term: str | None = None,
        date_from: str | None = Query(None, alias="from"),
        date_to: str | None = Query(None, alias="to"),
        state: str | None = None,
        company: str | None = None,
    ):
        flt = Filter.from_params(term, date_from, date_to, state, company)
        with store.snapshot() as conn:
            return weekly_counts(store, flt, conn=conn)

    @app.get("/api/map/states")
    def map_states(
        term: str | None = None,
        date_from: str | None = Query(None, alias="from"),
        date_to: str | None = Query(None, alias="to"),
        company: str | None = None,
    ):
        # the map is the selector, never the selected: no state param here
        flt = Filter.from_params(term, date_from, date_to, None, company)
        with store.snapshot() as conn:
            rows = state_counts(store, flt, conn=conn)
        return [
            {"state": "unknown" if r["state"] == "??" else r["state"],
             "count": r["count"]}
            for r in rows
        ]

    @app.get("/api/companies")
    def companies(
        term: str | None = None,
        date_from: str | None = Query(None, alias="from"),
        date_to: str | None = Query(None, alias="to"),
        state: str | None = None,
        n: str | None = None,
    ):
        flt = Filter.from_params(term, date_from, date_to, state, None)
        limit = _parse_n(n)
        with store.snapshot() as conn:
            return company_counts(store, flt, n=limit, conn=conn)

    @app.get("/api/skills/timeseries")
    def timeseries(
        skills: str | None = None,
        term: str | None = None,
        date_from: str | None = Query(None, alias="from"),
        date_to: str | None = Query(None, alias="to"),
        state: str | None = None,
        company: str | None = None,
    ):
        wanted = [s.strip() for s in (skills or "").split(",") if s.strip()]
        if not wanted:
            raise BadFilter("skills", "at least one skill required")
        flt = Filter.from_params(term, date_from, date_to, state, company)
        with store.snapshot() as conn:
            return skill_timeseries(store, wanted, flt, conn=conn)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True))

    return app
