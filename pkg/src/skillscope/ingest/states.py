"""USPS state normalization.

Raw location fields arrive either as 2-letter codes ("NJ") or full names
("California", sometimes lowercased). Everything is folded onto the USPS
code; unknown regions collapse to the sentinel "??" so the observation
still counts in nationwide totals.
"""

from __future__ import annotations

UNKNOWN_STATE = "??"

# 50 states + DC.
STATE_NAMES: dict[str, str] = {
    "alabama": "AL",
    "alaska": "AK",
    "arizona": "AZ",
    "arkansas": "AR",
    "california": "CA",
    "colorado": "CO",
    "connecticut": "CT",
    "delaware": "DE",
    "district of columbia": "DC",
    "florida": "FL",
    "georgia": "GA",
    "hawaii": "HI",
    "idaho": "ID",
    "illinois": "IL",
    "indiana": "IN",
    "iowa": "IA",
    "kansas": "KS",
    "kentucky": "KY",
    "louisiana": "LA",
    "maine": "ME",
    "maryland": "MD",
    "massachusetts": "MA",
    "michigan": "MI",
    "minnesota": "MN",
    "mississippi": "MS",
    "missouri": "MO",
    "montana": "MT",
    "nebraska": "NE",
    "nevada": "NV",
    "new hampshire": "NH",
    "new jersey": "NJ",
    "new mexico": "NM",
    "new york": "NY",
    "north carolina": "NC",
    "north dakota": "ND",
    "ohio": "OH",
    "oklahoma": "OK",
    "oregon": "OR",
    "pennsylvania": "PA",
    "rhode island": "RI",
    "south carolina": "SC",
    "south dakota": "SD",
    "tennessee": "TN",
    "texas": "TX",
    "utah": "UT",
    "vermont": "VT",
    "virginia": "VA",
    "washington": "WA",
    "west virginia": "WV",
    "wisconsin": "WI",
    "wyoming": "WY",
}

STATE_CODES: frozenset[str] = frozenset(STATE_NAMES.values())

VALID_STATES: frozenset[str] = STATE_CODES | {UNKNOWN_STATE}


def normalize_state(raw: str) -> str:
    """Map a raw region string to a USPS code, or "??" when unrecognized.

    Total function: accepts any string, never raises. Full names and
    2-letter codes match case-insensitively with whitespace collapsed.
    """
    key = " ".join(str(raw).strip().lower().split())
    if not key:
        return UNKNOWN_STATE
    code = key.upper()
    if code in STATE_CODES:
        return code
    return STATE_NAMES.get(key, UNKNOWN_STATE)
