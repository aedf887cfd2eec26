/**
 * Seeded fixture data mirroring a small ingested corpus, plus the
 * default handler that answers stub-API requests from it.
 */

import { ApiError, type Meta, type QueryParams } from "../src/api";

export const META: Meta = {
  terms: ["all", "data_scientist", "data_analyst", "ml_engineer"],
  lexicon_version:
    "17ffd393cfd4f0a6f17b99c4d373b60adf60a2c769aef6459d2254d6e680706c",
  data_range: { min_date: "2020-04-20", max_date: "2020-10-18" },
  states: ["??", "CA", "FL", "GA", "IL", "MA", "MD", "NC", "NY", "PA", "TX", "VA", "WA"],
};

/** CA is deliberately the largest count: the map must shade it darkest. */
export const MAP_ROWS = [
  { state: "CA", count: 301 },
  { state: "NY", count: 184 },
  { state: "TX", count: 173 },
  { state: "VA", count: 156 },
  { state: "WA", count: 133 },
  { state: "MA", count: 116 },
  { state: "IL", count: 95 },
  { state: "FL", count: 80 },
  { state: "PA", count: 79 },
  { state: "MD", count: 61 },
  { state: "NC", count: 49 },
  { state: "GA", count: 42 },
  { state: "unknown", count: 31 },
];

const SKILL_NAMES = [
  "python", "sql", "java", "excel", "tableau",
  "machine learning", "r", "spark", "aws", "hadoop",
  "statistics", "scala", "pandas", "tensorflow", "docker",
  "git", "etl", "power bi", "regression", "nlp",
  "airflow", "kubernetes", "pytorch", "linux", "snowflake",
];

/** 25 skills with strictly decreasing counts, so any top-N cut is stable. */
export function skillRows(params: QueryParams): Array<{ skill: string; count: number }> {
  // vary the leader by term/state so refetches are observable in the DOM
  let offset = 0;
  if (params.term === "data_analyst") offset = 1;
  if (params.term === "ml_engineer") offset = 2;
  if (params.state) offset += 3;
  const rotated = [...SKILL_NAMES.slice(offset), ...SKILL_NAMES.slice(0, offset)];
  return rotated.map((skill, index) => ({ skill, count: 460 - 15 * index }));
}

/** 26 ISO weeks spanning the fixture data range. */
export function weekRows(params: QueryParams): Array<{ week: string; count: number }> {
  const scale = params.state ? 3 : 17;
  return Array.from({ length: 26 }, (_, index) => ({
    week: `2020-W${String(17 + index).padStart(2, "0")}`,
    count: 20 + ((index * scale) % 40),
  }));
}

/** Answer one request from the fixture; unknown paths get a 404 error. */
export function fixtureHandler(path: string, params: QueryParams): unknown {
  switch (path) {
    case "/api/meta":
      return META;
    case "/api/map/states":
      return MAP_ROWS;
    case "/api/skills":
      return skillRows(params).slice(0, Number(params.n ?? 20));
    case "/api/counts/weekly":
      return weekRows(params);
    default:
      throw new ApiError(404, "not_found", `no such endpoint: ${path}`);
  }
}
