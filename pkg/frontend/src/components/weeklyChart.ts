/**
 * Weekly posting-count chart: one vertical bar per ISO week.
 */

import type { WeekCount } from "../api";

const SVG_NS = "http://www.w3.org/2000/svg";
const CHART_HEIGHT = 150;
const BAR_WIDTH = 14;
const BAR_GAP = 4;
const AXIS_HEIGHT = 34;

export interface WeeklyChartController {
  element: HTMLElement;
  setData(rows: WeekCount[]): void;
  destroy(): void;
}

export function createWeeklyChart(): WeeklyChartController {
  const element = document.createElement("div");
  element.className = "weekly-chart";

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("role", "img");
  svg.setAttribute("aria-label", "postings per week");
  element.append(svg);

  return {
    element,

    setData(rows) {
      svg.replaceChildren();
      const width = Math.max(rows.length, 1) * (BAR_WIDTH + BAR_GAP) + BAR_GAP;
      svg.setAttribute("viewBox", `0 0 ${width} ${CHART_HEIGHT + AXIS_HEIGHT}`);
      const max = Math.max(1, ...rows.map((row) => row.count));
      // label roughly a dozen ticks regardless of span
      const labelEvery = Math.max(1, Math.ceil(rows.length / 12));

      rows.forEach((row, index) => {
        const x = BAR_GAP + index * (BAR_WIDTH + BAR_GAP);
        const barHeight = Math.max(
          1,
          Math.round((row.count / max) * CHART_HEIGHT),
        );

        const group = document.createElementNS(SVG_NS, "g");
        group.setAttribute("class", "bar");
        group.setAttribute("data-week", row.week);

        const title = document.createElementNS(SVG_NS, "title");
        title.textContent = `${row.week}: ${row.count}`;

        const rect = document.createElementNS(SVG_NS, "rect");
        rect.setAttribute("x", String(x));
        rect.setAttribute("y", String(CHART_HEIGHT - barHeight));
        rect.setAttribute("width", String(BAR_WIDTH));
        rect.setAttribute("height", String(barHeight));
        rect.setAttribute("rx", "2");

        group.append(title, rect);

        if (index % labelEvery === 0) {
          const label = document.createElementNS(SVG_NS, "text");
          label.setAttribute("class", "axis-label");
          label.setAttribute("text-anchor", "end");
          label.setAttribute(
            "transform",
            `translate(${x + BAR_WIDTH / 2}, ${CHART_HEIGHT + 6}) rotate(-45)`,
          );
          label.textContent = row.week;
          group.append(label);
        }

        svg.append(group);
      });
    },

    destroy() {
      element.remove();
    },
  };
}
