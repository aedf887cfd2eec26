import datetime as dt
import random

import pytest

from skillscope.analytics import (
    BadFilter,
    Filter,
    UnknownSkill,
    company_counts,
    skill_timeseries,
    state_counts,
    top_skills,
    weekly_counts,
)
from skillscope.extract import build_matcher
from skillscope.lexicon import compile_lexicon
from skillscope.lexicon.tags import TagEntry
from skillscope.store import Store
from skillscope.terms import QueryTerm

from helpers import raw_record, store_with

LEX = compile_lexicon(
    [TagEntry(n, "unit") for n in ("excel", "sql", "python", "tableau")]
)
MATCHER = build_matcher(LEX)


def da_filter():
    return Filter(terms=(QueryTerm.DATA_ANALYST,))


# --- Filter -----------------------------------------------------------------

def test_filter_from_params():
    flt = Filter.from_params(term="da", date_from="2020-04-01",
                             date_to="2020-05-01", state="ca", company="Acme")
    assert flt.terms == (QueryTerm.DATA_ANALYST,)
    assert flt.date_from == dt.date(2020, 4, 1)
    assert flt.state == "CA"
    assert flt.company == "Acme"


def test_filter_empty_terms_means_all():
    assert Filter.from_params(term=None).terms == ()
    assert Filter.from_params(term="all").terms == ()


@pytest.mark.parametrize(
    "kwargs,needle",
    [
        (dict(term="sous chef"), "term"),
        (dict(date_from="not-a-date"), "from"),
        (dict(date_to="2020-13-01"), "to"),
        (dict(state="ZZ"), "state"),
        (dict(date_from="2020-05-01", date_to="2020-04-01"), "from"),
    ],
)
def test_filter_rejects_bad_params(kwargs, needle):
    with pytest.raises(BadFilter) as exc:
        Filter.from_params(**kwargs)
    assert needle == exc.value.parameter


# --- top_skills ---------------------------------------------------------------

@pytest.fixture
def planted_analyst_store():
    """10 data-analyst postings: excel in 7, sql in 5, python in 2."""
    flags = [
        # (excel, sql, python) presence per posting
        (1, 0, 0), (1, 0, 0), (1, 0, 0),
        (1, 1, 0), (1, 1, 0), (1, 1, 0), (1, 1, 0),
        (0, 1, 1), (0, 0, 1), (0, 0, 0),
    ]
    words = ("excel", "sql", "python")
    records = []
    for i, present in enumerate(flags):
        mention = " and ".join(w for w, on in zip(words, present) if on) or "office"
        records.append(raw_record(f"needs {mention} skills #{i}"))
    with store_with(records, matcher=MATCHER) as store:
        yield store


def test_top_skills_planted_ranking(planted_analyst_store):
    rows = top_skills(planted_analyst_store, da_filter(), n=20)
    assert rows == [
        {"skill": "excel", "count": 7},
        {"skill": "sql", "count": 5},
        {"skill": "python", "count": 2},
    ]


def test_top_skills_n_cuts_list(planted_analyst_store):
    assert [r["skill"] for r in top_skills(planted_analyst_store, da_filter(), n=1)] == [
        "excel"
    ]


def test_top_skills_empty_store():
    with Store() as store:
        assert top_skills(store, Filter(), n=1) == []


def test_top_skills_ties_break_lexicographically():
    records = [raw_record("tableau dashboards"), raw_record("python scripts")]
    with store_with(records, matcher=MATCHER) as store:
        rows = top_skills(store, Filter(), n=5)
        assert rows == [
            {"skill": "python", "count": 1},
            {"skill": "tableau", "count": 1},
        ]


def test_top_skills_rejects_bad_n(planted_analyst_store):
    with pytest.raises(ValueError):
        top_skills(planted_analyst_store, da_filter(), n=0)


# --- weekly_counts --------------------------------------------------------------

@pytest.fixture
def two_week_store():
    days_w17 = ["2020-04-20", "2020-04-21", "2020-04-22", "2020-04-23", "2020-04-24"]
    days_w18 = ["2020-04-27", "2020-04-29", "2020-04-30"]
    records = [raw_record(f"posting {i}", posted_date=d)
               for i, d in enumerate(days_w17 + days_w18)]
    with store_with(records) as store:
        yield store


def test_weekly_counts_buckets_by_posted_week(two_week_store):
    got = weekly_counts(two_week_store, Filter())
    assert got == [
        {"week": "2020-W17", "count": 5},
        {"week": "2020-W18", "count": 3},
    ]


def test_weekly_counts_zero_fills_quiet_weeks(two_week_store):
    flt = Filter(date_from=dt.date(2020, 4, 20), date_to=dt.date(2020, 5, 17))
    got = weekly_counts(two_week_store, flt)
    assert [p["week"] for p in got] == [
        "2020-W17", "2020-W18", "2020-W19", "2020-W20",
    ]
    assert [p["count"] for p in got] == [5, 3, 0, 0]


def test_weekly_counts_empty_range_all_zero(two_week_store):
    flt = Filter(date_from=dt.date(2021, 1, 4), date_to=dt.date(2021, 1, 24))
    got = weekly_counts(two_week_store, flt)
    assert len(got) == 3
    assert all(p["count"] == 0 for p in got)


def test_weekly_counts_conserve_total(two_week_store):
    assert sum(p["count"] for p in weekly_counts(two_week_store, Filter())) == 8


def test_weekly_counts_empty_store_no_axis():
    with Store() as store:
        assert weekly_counts(store, Filter()) == []


# --- state_counts ---------------------------------------------------------------

@pytest.fixture
def states_store():
    records = (
        [raw_record(f"ca {i}", state="CA") for i in range(12)]
        + [raw_record(f"tx {i}", state="TX") for i in range(5)]
        + [raw_record(f"mystery {i}", state="Atlantis") for i in range(2)]
    )
    with store_with(records) as store:
        yield store


def test_state_counts_with_unknown_bucket(states_store):
    got = state_counts(states_store, Filter())
    assert got == [
        {"state": "CA", "count": 12},
        {"state": "TX", "count": 5},
        {"state": "??", "count": 2},
    ]


def test_state_counts_filter_consistency(states_store):
    got = state_counts(states_store, Filter(state="CA"))
    assert got == [{"state": "CA", "count": 12}]


def test_state_counts_sum_matches_row_count(states_store):
    assert sum(r["count"] for r in state_counts(states_store, Filter())) == 19


# --- company_counts ---------------------------------------------------------------

@pytest.fixture
def companies_store():
    records = [raw_record(f"a {i}", company="Acme") for i in range(6)]
    records += [raw_record(f"g {i}", company="Globex") for i in range(4)]
    with store_with(records) as store:
        yield store


def test_company_counts_ranked(companies_store):
    got = company_counts(companies_store, Filter(), n=20)
    assert got == [
        {"company": "Acme", "count": 6},
        {"company": "Globex", "count": 4},
    ]


def test_company_counts_n_exceeding_distinct_is_not_padded(companies_store):
    assert len(company_counts(companies_store, Filter(), n=50)) == 2


def test_company_counts_preserve_verbatim_names():
    with store_with([raw_record("x", company="FHLB Office of Finance")]) as store:
        got = company_counts(store, Filter(), n=5)
        assert got[0]["company"] == "FHLB Office of Finance"


# --- skill_timeseries ---------------------------------------------------------------

@pytest.fixture
def series_store():
    records = [
        raw_record(f"python w17 {i}", posted_date="2020-04-2{}".format(i))
        for i in range(4)  # 2020-04-20..23, all W17
    ]
    records += [
        raw_record(f"python w18 {i}", posted_date=f"2020-04-{27 + i}")
        for i in range(4)  # 27..30, W18
    ]
    records += [
        raw_record(f"python w18 extra {i}", posted_date="2020-05-01")
        for i in range(2)  # May 1 is still W18
    ]
    records += [raw_record("sql only", posted_date="2020-04-21")]
    with store_with(records, matcher=MATCHER) as store:
        yield store


def test_timeseries_planted_counts(series_store):
    series = skill_timeseries(series_store, ["python"], Filter())
    assert series["python"] == [
        {"week": "2020-W17", "count": 4},
        {"week": "2020-W18", "count": 6},
    ]


def test_timeseries_valid_but_absent_skill_is_all_zero(series_store):
    series = skill_timeseries(series_store, ["tableau"], Filter())
    assert all(p["count"] == 0 for p in series["tableau"])
    assert len(series["tableau"]) == 2


def test_timeseries_unknown_skill_rejected(series_store):
    with pytest.raises(UnknownSkill) as exc:
        skill_timeseries(series_store, ["python", "flurble", "zaxxon"], Filter())
    assert exc.value.skills == ["flurble", "zaxxon"]
    assert "flurble" in str(exc.value)


def test_timeseries_requires_at_least_one_skill(series_store):
    with pytest.raises(ValueError):
        skill_timeseries(series_store, [], Filter())


def test_timeseries_shares_one_axis(series_store):
    series = skill_timeseries(series_store, ["python", "sql", "tableau"], Filter())
    axes = {tuple(p["week"] for p in points) for points in series.values()}
    assert len(axes) == 1  # same weeks for every skill
    assert len(series) == 3


def test_timeseries_counts_posting_in_every_requested_skill_it_mentions():
    records = [raw_record("python and sql together", posted_date="2020-04-21")]
    with store_with(records, matcher=MATCHER) as store:
        series = skill_timeseries(store, ["python", "sql"], Filter())
        assert series["python"][0]["count"] == 1
        assert series["sql"][0]["count"] == 1


# --- cross-cutting properties ------------------------------------------------------

def test_conservation_and_additivity_on_benchmark_corpus(corpus_store):
    rng = random.Random(7)
    terms = list(QueryTerm)
    # spot-check conservation across a handful of random filters here; the
    # acceptance suite runs the full thousand
    for _ in range(25):
        chosen = tuple(rng.sample(terms, rng.randint(0, 3)))
        start = dt.date(2020, 4, 20) + dt.timedelta(days=rng.randint(0, 100))
        end = start + dt.timedelta(days=rng.randint(0, 80))
        flt = Filter(terms=chosen, date_from=start, date_to=end)
        total = corpus_store.count_postings(**flt.store_kwargs())
        assert sum(p["count"] for p in weekly_counts(corpus_store, flt)) == total
        assert sum(p["count"] for p in state_counts(corpus_store, flt)) == total

    whole = corpus_store.count_postings()
    by_track = sum(
        corpus_store.count_postings(terms=(t.slug,)) for t in terms
    )
    assert by_track == whole


def test_shrinking_date_range_never_grows_counts(two_week_store):
    wide = Filter(date_from=dt.date(2020, 4, 20), date_to=dt.date(2020, 5, 3))
    narrow = Filter(date_from=dt.date(2020, 4, 22), date_to=dt.date(2020, 4, 28))
    wide_total = sum(p["count"] for p in weekly_counts(two_week_store, wide))
    narrow_total = sum(p["count"] for p in weekly_counts(two_week_store, narrow))
    assert narrow_total <= wide_total
