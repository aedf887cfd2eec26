/**
 * US choropleth as a tile grid: one clickable square per state, shaded
 * by posting count. Clicking a tile selects that state for the other
 * panels; the map itself always shows the nationwide picture.
 *
 * Counts whose state is not a tile (the API reports postings without a
 * parseable state as "unknown") are shown in a badge below the grid.
 */

import type { StateCount } from "../api";
import { GRID_COLS, GRID_ROWS, STATE_TILES } from "../tiles";

const SVG_NS = "http://www.w3.org/2000/svg";
const TILE = 34;
const GAP = 4;

/** Sequential blue scale; count 0 stays near-white. */
function fillFor(count: number, max: number): string {
  if (max <= 0 || count <= 0) return "hsl(215, 30%, 94%)";
  const t = count / max;
  const lightness = Math.round(90 - 58 * t);
  return `hsl(215, 60%, ${lightness}%)`;
}

export interface StateMapController {
  element: HTMLElement;
  setData(rows: StateCount[]): void;
  setSelected(code: string | null): void;
  destroy(): void;
}

export function createStateMap(options: {
  onSelect: (code: string) => void;
}): StateMapController {
  const element = document.createElement("div");
  element.className = "state-map";

  const svg = document.createElementNS(SVG_NS, "svg");
  const width = GRID_COLS * (TILE + GAP) + GAP;
  const height = GRID_ROWS * (TILE + GAP) + GAP;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("role", "group");
  svg.setAttribute("aria-label", "postings by state");
  element.append(svg);

  const unknownBadge = document.createElement("div");
  unknownBadge.className = "unknown-badge";
  unknownBadge.title = "postings without a recognizable state";
  unknownBadge.hidden = true;
  element.append(unknownBadge);

  interface TileRefs {
    rect: SVGRectElement;
    title: SVGTitleElement;
  }
  const tiles = new Map<string, TileRefs>();
  const cleanups: Array<() => void> = [];

  for (const tile of STATE_TILES) {
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "tile");
    group.setAttribute("role", "button");
    group.setAttribute("tabindex", "0");
    group.setAttribute("data-state", tile.code);
    group.setAttribute("aria-pressed", "false");

    const x = GAP + tile.col * (TILE + GAP);
    const y = GAP + tile.row * (TILE + GAP);

    const rect = document.createElementNS(SVG_NS, "rect");
    rect.setAttribute("x", String(x));
    rect.setAttribute("y", String(y));
    rect.setAttribute("width", String(TILE));
    rect.setAttribute("height", String(TILE));
    rect.setAttribute("rx", "3");
    rect.setAttribute("fill", fillFor(0, 0));

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(x + TILE / 2));
    label.setAttribute("y", String(y + TILE / 2 + 4));
    label.setAttribute("text-anchor", "middle");
    label.textContent = tile.code;

    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${tile.name}: 0`;

    group.append(title, rect, label);
    svg.append(group);
    tiles.set(tile.code, { rect, title });

    const select = () => options.onSelect(tile.code);
    const keySelect = (event: KeyboardEvent) => {
      if (event.key === "Enter" || event.key === " ") {
        event.preventDefault();
        select();
      }
    };
    group.addEventListener("click", select);
    group.addEventListener("keydown", keySelect);
    cleanups.push(() => {
      group.removeEventListener("click", select);
      group.removeEventListener("keydown", keySelect);
    });
  }

  const names = new Map(STATE_TILES.map((tile) => [tile.code, tile.name]));

  return {
    element,

    setData(rows) {
      const counts = new Map<string, number>();
      let unknown = 0;
      for (const row of rows) {
        if (tiles.has(row.state)) counts.set(row.state, row.count);
        else unknown += row.count;
      }
      const max = Math.max(0, ...counts.values());
      for (const [code, refs] of tiles) {
        const count = counts.get(code) ?? 0;
        refs.rect.setAttribute("fill", fillFor(count, max));
        refs.title.textContent = `${names.get(code)}: ${count}`;
      }
      unknownBadge.hidden = unknown === 0;
      unknownBadge.textContent = `unknown: ${unknown}`;
    },

    setSelected(code) {
      for (const group of svg.querySelectorAll(".tile")) {
        const pressed = group.getAttribute("data-state") === code;
        group.setAttribute("aria-pressed", String(pressed));
        group.classList.toggle("selected", pressed);
      }
    },

    destroy() {
      for (const cleanup of cleanups) cleanup();
      element.remove();
    },
  };
}
