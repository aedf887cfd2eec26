"""Command-line entry point.

Machine-readable output (JSON, CSV, tables) goes to stdout; progress and
diagnostics go to stderr, so pipelines can consume stdout directly.

Exit codes: 0 success, 1 runtime/data failure (unreachable source, bad
store, broken lexicon file), 2 usage error (unknown term, malformed date,
bad flag combination).
"""

from __future__ import annotations

import csv
import datetime as dt
import io
import json
import sys
from pathlib import Path

import click

from . import __version__
from .analytics import (
    BadFilter,
    Filter,
    UnknownSkill,
    company_counts,
    skill_timeseries,
    state_counts,
    top_skills,
    weekly_counts,
)
from .config import BadConfig, load_config, pick
from .extract import build_matcher, extract_skills, run_extraction
from .ingest import (
    FixtureSource,
    SourceUnavailable,
    SynthProfile,
    daemon_loop,
    run_crawl,
    synth_source,
)
from .lexicon import (
    DanglingAlias,
    FormatError,
    SurfaceConflict,
    build_reference_lexicon,
    compile_lexicon,
    load_alias_file,
    load_exclusion_file,
    load_lexicon,
    load_tag_file,
    save_lexicon,
)
from .store import Store, StoreError
from .terms import ALL_TERMS, UnknownTerm, parse_term
from .weeks import parse_week, week_of

# ---------------------------------------------------------------- helpers


def _fail(message: str) -> "click.ClickException":
    return click.ClickException(message)  # exit code 1


def _usage(message: str) -> "click.UsageError":
    return click.UsageError(message)  # exit code 2


def _parse_terms(raw: str | None):
    if raw is None or raw.strip() in ("", "all"):
        return list(ALL_TERMS)
    out = []
    for piece in raw.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            term = parse_term(piece)
        except UnknownTerm as exc:
            raise _usage(str(exc))
        if term not in out:
            out.append(term)
    if not out:
        raise _usage("no query terms given")
    return out


def _resolve_window(raw: str | None) -> str:
    if raw is None or raw.strip() in ("", "auto"):
        return week_of(dt.date.today())
    try:
        year, week = parse_week(raw)
    except ValueError as exc:
        raise _usage(str(exc))
    return f"{year}-W{week:02d}"


def _build_source(spec: str | None, seed: int | None):
    if not spec:
        raise _usage("no source configured; pass --source or set it in config")
    if spec.startswith("fixture:"):
        return FixtureSource(spec[len("fixture:"):])
    if spec.startswith("synth:"):
        try:
            profile = SynthProfile.from_file(spec[len("synth:"):])
        except (OSError, ValueError) as exc:
            raise _fail(f"cannot load synth profile: {exc}")
        return synth_source(seed if seed is not None else 0, profile)
    if spec == "live" or spec.startswith("live:"):
        raise _fail(
            "the live source needs a site-specific fetch callable wired in"
            " code; use fixture:FILE or synth:PROFILE here"
        )
    raise _usage(f"unknown source spec {spec!r} (want fixture:…, synth:…, live)")


def _open_store(cfg, store_flag: str | None, must_exist: bool = False) -> Store:
    path = pick(store_flag, "store_path", cfg)
    if must_exist and path != ":memory:" and not Path(path).exists():
        raise _fail(f"store not found: {path}")
    try:
        return Store(path)
    except StoreError as exc:
        raise _fail(f"cannot open store {path}: {exc}")


def _load_lexicon(cfg, lexicon_flag: str | None):
    path = pick(lexicon_flag, "lexicon_path", cfg)
    if path is None:
        return build_reference_lexicon()
    try:
        return load_lexicon(path)
    except (OSError, FormatError) as exc:
        raise _fail(f"cannot load lexicon {path}: {exc}")


def _make_filter(term, date_from, date_to, state, company) -> Filter:
    try:
        return Filter.from_params(term, date_from, date_to, state, company)
    except BadFilter as exc:
        raise _usage(str(exc))


def _echo_json(payload) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=False))


def _render_cells(rows: list[dict], columns: list[str]) -> list[list[str]]:
    return [[str(row.get(col, "")) for col in columns] for row in rows]


def _emit_rows(rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        _echo_json(rows)
        return
    cells = _render_cells(rows, columns)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(cells)
        click.echo(buf.getvalue(), nl=False)
        return
    widths = [
        max(len(columns[i]), *(len(c[i]) for c in cells)) if cells else len(columns[i])
        for i in range(len(columns))
    ]
    click.echo("  ".join(col.ljust(widths[i]) for i, col in enumerate(columns)))
    for line in cells:
        click.echo("  ".join(line[i].ljust(widths[i]) for i in range(len(columns))))


_FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["table", "csv", "json"]), default="table",
    show_default=True, help="Output shape on stdout.",
)


def _filter_options(f):
    for opt in reversed([
        click.option("--term", default=None, help="Query term (slug, name, or code)."),
        click.option("--from", "date_from", default=None, metavar="YYYY-MM-DD"),
        click.option("--to", "date_to", default=None, metavar="YYYY-MM-DD"),
        click.option("--state", default=None, metavar="XX"),
        click.option("--company", default=None),
    ]):
        f = opt(f)
    return f


# ---------------------------------------------------------------- commands


@click.group()
@click.version_option(__version__, prog_name="skillscope")
@click.option("--config", "config_path", default=None, metavar="FILE",
              help="JSON config file (else SKILLSCOPE_CONFIG or ./skillscope.json).")
@click.pass_context
def cli(ctx, config_path):
    """Track skill demand across job postings."""
    try:
        ctx.obj = load_config(config_path)
    except BadConfig as exc:
        raise _fail(str(exc))


main = cli


@cli.command()
@click.option("--source", default=None, metavar="SPEC",
              help="fixture:FILE, synth:PROFILE, or live.")
@click.option("--terms", default=None, metavar="LIST", help="all or comma list.")
@click.option("--window", default=None, metavar="YYYY-Www|auto",
              help="Observation week to stamp (auto = current week).")
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.option("--seed", type=int, default=None, help="Seed for synth sources.")
@click.option("--parallelism", type=int, default=3, show_default=True)
@click.pass_obj
def ingest(cfg, source, terms, window, store_path, seed, parallelism):
    """Fetch postings for each term and store them, deduplicated per week."""
    term_list = _parse_terms(pick(terms, "terms", cfg))
    window_label = _resolve_window(pick(window, "window", cfg))
    seed_cfg = pick(seed, "seed", cfg)
    adapter = _build_source(
        pick(source, "source", cfg),
        int(seed_cfg) if seed_cfg is not None else None,
    )
    with _open_store(cfg, store_path) as store:
        try:
            report = run_crawl(
                adapter, term_list, store, window_label, parallelism=parallelism
            )
        except SourceUnavailable as exc:
            raise _fail(f"source unavailable: {exc}")
    for slug, tally in sorted(report.terms.items()):
        click.echo(
            f"{slug}: fetched={tally.fetched} stored={tally.stored}"
            f" duplicates={tally.duplicates_skipped} bad={tally.parse_failed}",
            err=True,
        )
    _echo_json(report.as_dict())
    if report.error:
        raise _fail(report.error)


@cli.group()
def lexicon():
    """Build and inspect skill lexicons."""


@lexicon.command("build")
@click.option("--tags", "tags_path", default=None, metavar="FILE",
              help="Tag list, one per line (default: packaged reference list).")
@click.option("--exclusions", "exclusions_path", default=None, metavar="FILE")
@click.option("--aliases", "aliases_path", default=None, metavar="FILE")
@click.option("-o", "--out", "out_path", required=True, metavar="FILE")
def lexicon_build(tags_path, exclusions_path, aliases_path, out_path):
    """Compile tag/exclusion/alias files into a versioned lexicon."""
    try:
        if tags_path is None and exclusions_path is None and aliases_path is None:
            lex = build_reference_lexicon()
        else:
            if tags_path is None:
                raise _usage("--tags is required when overriding any input file")
            tags = load_tag_file(tags_path)
            exclusions = (
                load_exclusion_file(exclusions_path) if exclusions_path else ()
            )
            aliases = load_alias_file(aliases_path) if aliases_path else ()
            lex = compile_lexicon(tags, exclusions=exclusions, aliases=aliases)
    except (OSError, FormatError, SurfaceConflict, DanglingAlias) as exc:
        raise _fail(str(exc))
    save_lexicon(lex, out_path)
    click.echo(f"wrote {out_path}", err=True)
    _echo_json(
        {
            "path": out_path,
            "entries": len(lex.entries),
            "surfaces": len(lex.surface_map()),
            "version": lex.version,
        }
    )


@lexicon.command("inspect")
@click.argument("path")
@click.option("--skill", default=None, help="Show one canonical's surfaces.")
@click.option("--surface", default=None, help="Reverse-lookup one surface.")
def lexicon_inspect(path, skill, surface):
    """Summarize a lexicon file (checks its version digest)."""
    try:
        lex = load_lexicon(path)
    except (OSError, FormatError) as exc:
        raise _fail(str(exc))
    if skill is not None:
        entry = next((e for e in lex.entries if e.canonical == skill), None)
        if entry is None:
            raise _fail(f"no canonical skill {skill!r} in {path}")
        _echo_json(
            {
                "canonical": entry.canonical,
                "surfaces": sorted(entry.surfaces),
                "origin": entry.origin,
                "exact_token_only": entry.exact_token_only,
            }
        )
        return
    if surface is not None:
        info = lex.surface_map().get(surface.lower())
        if info is None:
            raise _fail(f"surface {surface!r} not in {path}")
        _echo_json({"surface": surface.lower(), "canonical": info[0]})
        return
    _echo_json(
        {
            "path": path,
            "version": lex.version,
            "built_at": lex.built_at,
            "entries": len(lex.entries),
            "surfaces": len(lex.surface_map()),
        }
    )


@cli.group(invoke_without_command=True)
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.option("--lexicon", "lexicon_path", default=None, metavar="FILE",
              help="Lexicon file (default: packaged reference lexicon).")
@click.option("--since", default=None, metavar="YYYY-Www",
              help="Only postings posted in or after this week.")
@click.option("--force", is_flag=True, help="Re-extract even if already done.")
@click.option("--workers", type=int, default=None,
              help="Parallel extraction workers.")
@click.pass_context
def extract(ctx, store_path, lexicon_path, since, force, workers):
    """Run the skill matcher over stored postings."""
    if ctx.invoked_subcommand is not None:
        return
    cfg = ctx.obj
    lex = _load_lexicon(cfg, lexicon_path)
    matcher = build_matcher(lex)
    if since is not None:
        try:
            parse_week(since)
        except ValueError as exc:
            raise _usage(str(exc))
    worker_count = workers if workers is not None else int(cfg["worker_count"])
    if worker_count < 1:
        raise _usage("--workers must be >= 1")
    with _open_store(cfg, store_path, must_exist=True) as store:
        try:
            summary = run_extraction(
                store, matcher, force=force, workers=worker_count, since_week=since
            )
        except StoreError as exc:
            raise _fail(str(exc))
    click.echo(
        f"extracted {summary.processed} postings"
        f" ({summary.skipped} already done)", err=True,
    )
    _echo_json(summary.as_dict())


@extract.command("one")
@click.option("--lexicon", "lexicon_path", default=None, metavar="FILE")
@click.option("--text", required=True, help="Text to scan for skills.")
@click.pass_obj
def extract_one(cfg, lexicon_path, text):
    """Print the skill set for one text, one canonical per line."""
    lex = _load_lexicon(cfg, lexicon_path)
    matcher = build_matcher(lex)
    for skill in sorted(extract_skills(matcher, text)):
        click.echo(skill)


@cli.group()
def stats():
    """Aggregations over the stored postings."""


def _figures_option(f):
    return click.option(
        "--figures", "figures_dir", default=None, metavar="DIR",
        help="Also render a chart into this directory.",
    )(f)


@stats.command("skills")
@_filter_options
@click.option("-n", type=int, default=20, show_default=True)
@_FORMAT
@_figures_option
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def stats_skills(cfg, term, date_from, date_to, state, company, n, fmt,
                 figures_dir, store_path):
    """Most-mentioned skills with posting counts."""
    flt = _make_filter(term, date_from, date_to, state, company)
    if n < 1:
        raise _usage("-n must be >= 1")
    with _open_store(cfg, store_path, must_exist=True) as store:
        rows = top_skills(store, flt, n=n)
    _emit_rows(rows, ["skill", "count"], fmt)
    if figures_dir:
        from .report import render_top_skills

        path = render_top_skills(rows, Path(figures_dir) / "skills.png", "Top skills")
        click.echo(f"figure: {path}", err=True)


@stats.command("weekly")
@_filter_options
@_FORMAT
@_figures_option
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def stats_weekly(cfg, term, date_from, date_to, state, company, fmt,
                 figures_dir, store_path):
    """Postings per ISO week (zero-filled across the window)."""
    flt = _make_filter(term, date_from, date_to, state, company)
    with _open_store(cfg, store_path, must_exist=True) as store:
        rows = weekly_counts(store, flt)
    _emit_rows(rows, ["week", "count"], fmt)
    if figures_dir:
        from .report import render_weekly

        path = render_weekly(rows, Path(figures_dir) / "weekly.png", "Postings per week")
        click.echo(f"figure: {path}", err=True)


@stats.command("states")
@_filter_options
@_FORMAT
@_figures_option
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def stats_states(cfg, term, date_from, date_to, state, company, fmt,
                 figures_dir, store_path):
    """Postings per state ('??' = unresolvable location)."""
    flt = _make_filter(term, date_from, date_to, state, company)
    with _open_store(cfg, store_path, must_exist=True) as store:
        rows = state_counts(store, flt)
    _emit_rows(rows, ["state", "count"], fmt)
    if figures_dir:
        from .report import render_states

        path = render_states(
            {r["state"]: r["count"] for r in rows},
            Path(figures_dir) / "states.png", "Postings by state",
        )
        click.echo(f"figure: {path}", err=True)


@stats.command("companies")
@_filter_options
@click.option("-n", type=int, default=20, show_default=True)
@_FORMAT
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def stats_companies(cfg, term, date_from, date_to, state, company, n, fmt, store_path):
    """Companies with the most postings in scope."""
    flt = _make_filter(term, date_from, date_to, state, company)
    if n < 1:
        raise _usage("-n must be >= 1")
    with _open_store(cfg, store_path, must_exist=True) as store:
        rows = company_counts(store, flt, n=n)
    _emit_rows(rows, ["company", "count"], fmt)


@stats.command("series")
@_filter_options
@click.option("--skills", "skills_arg", required=True, metavar="LIST",
              help="Comma-separated canonical skills.")
@_FORMAT
@_figures_option
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def stats_series(cfg, term, date_from, date_to, state, company, skills_arg,
                 fmt, figures_dir, store_path):
    """Weekly posting counts per skill, on one shared week axis."""
    wanted = [s.strip() for s in skills_arg.split(",") if s.strip()]
    if not wanted:
        raise _usage("--skills needs at least one skill")
    flt = _make_filter(term, date_from, date_to, state, company)
    with _open_store(cfg, store_path, must_exist=True) as store:
        try:
            series = skill_timeseries(store, wanted, flt)
        except UnknownSkill as exc:
            raise _fail(str(exc))
    if fmt == "json":
        _echo_json(series)
    else:
        names = list(series)
        weeks = [p["week"] for p in series[names[0]]] if names else []
        rows = [
            {"week": week, **{s: series[s][i]["count"] for s in names}}
            for i, week in enumerate(weeks)
        ]
        _emit_rows(rows, ["week"] + names, fmt)
    if figures_dir:
        from .report import render_timeseries

        weeks = [p["week"] for p in next(iter(series.values()))]
        path = render_timeseries(
            weeks, {s: [p["count"] for p in pts] for s, pts in series.items()},
            Path(figures_dir) / "timeseries.png", "Skill demand over time",
        )
        click.echo(f"figure: {path}", err=True)


@cli.command()
@_filter_options
@click.option("--out", "out_dir", required=True, metavar="DIR")
@click.option("-n", type=int, default=20, show_default=True)
@click.option("--skills", "skills_arg", default=None, metavar="LIST",
              help="Also render a weekly series for these skills.")
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def report(cfg, term, date_from, date_to, state, company, out_dir, n,
           skills_arg, store_path):
    """Write a CSV + figure bundle for the filtered slice of the store."""
    from .report import (
        render_states,
        render_timeseries,
        render_top_skills,
        render_weekly,
    )

    flt = _make_filter(term, date_from, date_to, state, company)
    if n < 1:
        raise _usage("-n must be >= 1")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files: list[str] = []

    def write_csv(name: str, rows: list[dict], columns: list[str]) -> None:
        path = out / name
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(_render_cells(rows, columns))
        files.append(str(path))

    with _open_store(cfg, store_path, must_exist=True) as store:
        skills_rows = top_skills(store, flt, n=n)
        weekly_rows = weekly_counts(store, flt)
        state_rows = state_counts(store, flt)
        company_rows = company_counts(store, flt, n=n)
        series = None
        if skills_arg:
            wanted = [s.strip() for s in skills_arg.split(",") if s.strip()]
            try:
                series = skill_timeseries(store, wanted, flt)
            except UnknownSkill as exc:
                raise _fail(str(exc))

    write_csv("skills.csv", skills_rows, ["skill", "count"])
    files.append(str(render_top_skills(skills_rows, out / "skills.png", "Top skills")))
    write_csv("weekly.csv", weekly_rows, ["week", "count"])
    files.append(str(render_weekly(weekly_rows, out / "weekly.png", "Postings per week")))
    write_csv("states.csv", state_rows, ["state", "count"])
    files.append(
        str(
            render_states(
                {r["state"]: r["count"] for r in state_rows},
                out / "states.png", "Postings by state",
            )
        )
    )
    write_csv("companies.csv", company_rows, ["company", "count"])
    if series is not None:
        names = list(series)
        weeks = [p["week"] for p in series[names[0]]] if names else []
        rows = [
            {"week": week, **{s: series[s][i]["count"] for s in names}}
            for i, week in enumerate(weeks)
        ]
        write_csv("timeseries.csv", rows, ["week"] + names)
        files.append(
            str(
                render_timeseries(
                    weeks, {s: [p["count"] for p in pts] for s, pts in series.items()},
                    out / "timeseries.png", "Skill demand over time",
                )
            )
        )
    _echo_json({"out": str(out), "files": sorted(files)})


@cli.command()
@click.option("--term", default=None)
@click.option("--from", "date_from", default=None, metavar="YYYY-MM-DD")
@click.option("--to", "date_to", default=None, metavar="YYYY-MM-DD")
@click.option("-o", "--out", "out_path", required=True, metavar="FILE")
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def export(cfg, term, date_from, date_to, out_path, store_path):
    """Dump postings (with extracted skills) as re-ingestable JSON lines."""
    flt = _make_filter(term, date_from, date_to, None, None)
    kwargs = flt.store_kwargs()
    with _open_store(cfg, store_path, must_exist=True) as store:
        try:
            count = store.export_jsonl(
                out_path,
                terms=kwargs["terms"],
                date_from=kwargs["date_from"],
                date_to=kwargs["date_to"],
            )
        except (OSError, StoreError) as exc:
            raise _fail(str(exc))
    _echo_json({"exported": count, "path": out_path})


@cli.group("store")
def store_group():
    """Store maintenance."""


@store_group.command("check")
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.pass_obj
def store_check(cfg, store_path):
    """Integrity scan; exits 1 if anything is wrong."""
    with _open_store(cfg, store_path, must_exist=True) as store:
        problems = store.check()
        info = store.meta()
    if problems:
        for problem in problems:
            click.echo(f"problem: {problem}", err=True)
        _echo_json({"ok": False, "problems": problems})
        sys.exit(1)
    _echo_json(
        {
            "ok": True,
            "postings": info["postings"],
            "extracted": info["extracted"],
            "skill_rows": info["skill_rows"],
        }
    )


@cli.command()
@click.option("--bind", default=None, metavar="HOST:PORT")
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.option("--static", "static_dir", default=None, metavar="DIR",
              help="Also serve this directory at / (a built dashboard).")
@click.pass_obj
def serve(cfg, bind, store_path, static_dir):
    """Serve the JSON API over HTTP."""
    import uvicorn

    from .api import create_app

    bind_value = pick(bind, "bind_address", cfg) or "127.0.0.1:8080"
    host, _, port_text = bind_value.rpartition(":")
    if not host or not port_text.isdigit():
        raise _usage(f"--bind wants HOST:PORT, got {bind_value!r}")
    store = _open_store(cfg, store_path, must_exist=True)
    app = create_app(store, static_dir=static_dir)
    click.echo(f"serving on http://{bind_value}", err=True)
    uvicorn.run(app, host=host, port=int(port_text), log_level="warning")


@cli.command()
@click.option("--source", default=None, metavar="SPEC")
@click.option("--terms", default=None, metavar="LIST")
@click.option("--store", "store_path", default=None, metavar="FILE")
@click.option("--lexicon", "lexicon_path", default=None, metavar="FILE")
@click.option("--seed", type=int, default=None)
@click.option("--period-days", type=float, default=None,
              help="Days between ingest cycles (config: schedule_period).")
@click.option("--poll-seconds", type=float, default=60.0, show_default=True)
@click.option("--max-runs", type=int, default=None,
              help="Stop after this many cycles (default: run forever).")
@click.pass_obj
def daemon(cfg, source, terms, store_path, lexicon_path, seed, period_days,
           poll_seconds, max_runs):
    """Ingest then extract on a fixed cadence: once now, then every period."""
    period = period_days if period_days is not None else float(cfg["schedule_period"])
    if period <= 0:
        raise _usage("--period-days must be positive")
    term_list = _parse_terms(pick(terms, "terms", cfg))
    seed_cfg = pick(seed, "seed", cfg)
    adapter = _build_source(
        pick(source, "source", cfg),
        int(seed_cfg) if seed_cfg is not None else None,
    )
    lex = _load_lexicon(cfg, lexicon_path)
    matcher = build_matcher(lex)
    store = _open_store(cfg, store_path)

    def run_once():
        window = week_of(dt.date.today())
        try:
            crawl = run_crawl(adapter, term_list, store, window)
        except SourceUnavailable as exc:
            click.echo(f"cycle failed, source unavailable: {exc}", err=True)
            return
        if crawl.error:
            # sink failures are store trouble: stop rather than limp on
            raise _fail(crawl.error)
        extraction = run_extraction(store, matcher)
        totals = crawl.as_dict()["totals"]
        click.echo(
            f"[{crawl.finished_at}] window={window}"
            f" stored={totals['stored']} duplicates={totals['duplicates_skipped']}"
            f" extracted={extraction.processed}",
            err=True,
        )

    try:
        runs = daemon_loop(
            run_once,
            dt.timedelta(days=period),
            poll_seconds=poll_seconds,
            max_runs=max_runs,
        )
    except StoreError as exc:
        raise _fail(str(exc))
    except KeyboardInterrupt:
        click.echo("stopped", err=True)
        return
    finally:
        store.close()
    _echo_json({"runs": runs})


if __name__ == "__main__":
    main()
