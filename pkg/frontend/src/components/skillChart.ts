/**
 * Top-skills bar chart: horizontal bars ranked by posting count, with a
 * selector for how many skills to show (default 20, up to 50).
 */

import type { SkillCount } from "../api";
import { MAX_TOP_N } from "../urlState";

const SVG_NS = "http://www.w3.org/2000/svg";
const ROW_HEIGHT = 22;
const LABEL_WIDTH = 150;
const BAR_AREA = 260;
const COUNT_GUTTER = 56;

export const TOP_N_CHOICES = [10, 20, 30, 40, 50].filter(
  (n) => n <= MAX_TOP_N,
);

export interface SkillChartController {
  element: HTMLElement;
  /** The top-N selector, mounted into the panel header by the app. */
  limitControl: HTMLElement;
  setData(rows: SkillCount[]): void;
  setLimit(n: number): void;
  destroy(): void;
}

export function createSkillChart(options: {
  onLimitChange: (n: number) => void;
}): SkillChartController {
  const element = document.createElement("div");
  element.className = "skill-chart";

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("role", "img");
  svg.setAttribute("aria-label", "top skills by posting count");
  element.append(svg);

  const limitControl = document.createElement("label");
  limitControl.className = "control skill-limit";
  limitControl.append("Show ");
  const select = document.createElement("select");
  select.setAttribute("aria-label", "number of skills shown");
  for (const n of TOP_N_CHOICES) {
    const option = document.createElement("option");
    option.value = String(n);
    option.textContent = String(n);
    select.append(option);
  }
  limitControl.append(select);

  const handleLimit = () => options.onLimitChange(Number(select.value));
  select.addEventListener("change", handleLimit);

  return {
    element,
    limitControl,

    setData(rows) {
      svg.replaceChildren();
      const width = LABEL_WIDTH + BAR_AREA + COUNT_GUTTER;
      const height = Math.max(rows.length, 1) * ROW_HEIGHT;
      svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
      const max = Math.max(1, ...rows.map((row) => row.count));

      rows.forEach((row, index) => {
        const y = index * ROW_HEIGHT;
        const barWidth = Math.max(1, Math.round((row.count / max) * BAR_AREA));

        const group = document.createElementNS(SVG_NS, "g");
        group.setAttribute("class", "bar");
        group.setAttribute("data-skill", row.skill);

        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("x", String(LABEL_WIDTH - 8));
        label.setAttribute("y", String(y + ROW_HEIGHT / 2 + 4));
        label.setAttribute("text-anchor", "end");
        label.setAttribute("class", "bar-label");
        label.textContent = row.skill;

        const rect = document.createElementNS(SVG_NS, "rect");
        rect.setAttribute("x", String(LABEL_WIDTH));
        rect.setAttribute("y", String(y + 3));
        rect.setAttribute("width", String(barWidth));
        rect.setAttribute("height", String(ROW_HEIGHT - 6));
        rect.setAttribute("rx", "2");

        const value = document.createElementNS(SVG_NS, "text");
        value.setAttribute("x", String(LABEL_WIDTH + barWidth + 6));
        value.setAttribute("y", String(y + ROW_HEIGHT / 2 + 4));
        value.setAttribute("class", "bar-value");
        value.textContent = String(row.count);

        group.append(label, rect, value);
        svg.append(group);
      });
    },

    setLimit(n) {
      const value = String(n);
      const exists = [...select.options].some((opt) => opt.value === value);
      if (!exists) {
        // a URL can carry a non-preset n; surface it as a real option
        const custom = document.createElement("option");
        custom.value = value;
        custom.textContent = value;
        select.prepend(custom);
      }
      select.value = value;
    },

    destroy() {
      select.removeEventListener("change", handleLimit);
      element.remove();
      limitControl.remove();
    },
  };
}
