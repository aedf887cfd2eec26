/**
 * Dashboard shell: mounts the six interactive components, wires them to
 * the state machine, and keeps every panel rendered through loading and
 * error states (a failed fetch gets a placard, never a blank screen).
 */

import type { ApiClient } from "./api";
import { createDateRangePicker } from "./components/dateRangePicker";
import { createResetButton } from "./components/resetButton";
import { createSkillChart } from "./components/skillChart";
import { createStateMap } from "./components/stateMap";
import { createTermSelector } from "./components/termSelector";
import { createWeeklyChart } from "./components/weeklyChart";
import {
  createDashboardStore,
  type DashboardSnapshot,
  type PanelName,
} from "./store";
import { browserUrlAdapter, DEFAULT_TERM, type UrlAdapter } from "./urlState";

export interface DashboardOptions {
  root: HTMLElement;
  api: ApiClient;
  /** Override for tests; defaults to the browser location/history. */
  url?: UrlAdapter;
}

export interface DashboardController {
  state(): DashboardSnapshot;
  whenIdle(): Promise<void>;
  destroy(): void;
}

interface Panel {
  section: HTMLElement;
  body: HTMLElement;
  placard: HTMLElement;
  content: HTMLElement;
}

function createPanel(name: PanelName, title: string, content: HTMLElement): Panel {
  const section = document.createElement("section");
  section.className = `panel panel-${name}`;
  section.dataset.panel = name;

  const header = document.createElement("header");
  const heading = document.createElement("h2");
  heading.textContent = title;
  header.append(heading);
  section.append(header);

  const body = document.createElement("div");
  body.className = "panel-body";
  const placard = document.createElement("div");
  placard.className = "placard";
  placard.hidden = true;
  body.append(placard, content);
  section.append(body);

  return { section, body, placard, content };
}

export function createDashboard(options: DashboardOptions): DashboardController {
  const url = options.url ?? browserUrlAdapter();
  const store = createDashboardStore({ api: options.api, url });

  const root = options.root;
  root.replaceChildren();

  const shell = document.createElement("div");
  shell.className = "dashboard";
  root.append(shell);

  const toolbar = document.createElement("header");
  toolbar.className = "toolbar";
  const brand = document.createElement("h1");
  brand.textContent = "skillscope";
  toolbar.append(brand);
  shell.append(toolbar);

  const banner = document.createElement("div");
  banner.className = "banner";
  banner.hidden = true;
  shell.append(banner);

  const panels = document.createElement("main");
  panels.className = "panels";
  shell.append(panels);

  const termSelector = createTermSelector({
    onChange: (term) => store.setTerm(term),
  });
  const datePicker = createDateRangePicker({
    onChange: (from, to) => store.setDateRange(from, to),
  });
  const resetButton = createResetButton({ onReset: () => store.reset() });
  toolbar.append(termSelector.element, datePicker.element, resetButton.element);

  const stateMap = createStateMap({
    onSelect: (code) => store.selectState(code),
  });
  const skillChart = createSkillChart({
    onLimitChange: (n) => store.setTopN(n),
  });
  const weeklyChart = createWeeklyChart();

  const mapPanel = createPanel("map", "Postings by state", stateMap.element);
  const skillsPanel = createPanel("skills", "Top skills", skillChart.element);
  skillsPanel.section.querySelector("header")?.append(skillChart.limitControl);
  const countsPanel = createPanel(
    "counts",
    "Postings per week",
    weeklyChart.element,
  );
  panels.append(mapPanel.section, skillsPanel.section, countsPanel.section);

  function renderPanel(panel: Panel, snapshot: DashboardSnapshot, name: PanelName): void {
    const slice = snapshot[name];
    panel.section.classList.toggle("is-loading", slice.status === "loading");
    if (slice.status === "error") {
      panel.placard.hidden = false;
      panel.placard.textContent = `Could not load data: ${slice.message}`;
      panel.content.hidden = true;
    } else if (slice.data === null) {
      panel.placard.hidden = false;
      panel.placard.textContent = "Loading…";
      panel.content.hidden = true;
    } else {
      panel.placard.hidden = true;
      panel.content.hidden = false;
    }
  }

  function render(): void {
    const snapshot = store.getState();

    termSelector.setTerms(
      snapshot.meta?.terms ?? [
        DEFAULT_TERM,
        "data_scientist",
        "data_analyst",
        "ml_engineer",
      ],
    );
    termSelector.setValue(snapshot.term);
    datePicker.setBounds(
      snapshot.meta?.data_range?.min_date ?? null,
      snapshot.meta?.data_range?.max_date ?? null,
    );
    datePicker.setRange(snapshot.from, snapshot.to);
    resetButton.setSelected(snapshot.selectedState);

    banner.hidden = snapshot.metaError === null;
    if (snapshot.metaError !== null) {
      banner.textContent = `API unreachable: ${snapshot.metaError}`;
    }

    if (snapshot.map.data !== null) stateMap.setData(snapshot.map.data);
    stateMap.setSelected(snapshot.selectedState);
    if (snapshot.skills.data !== null) skillChart.setData(snapshot.skills.data);
    skillChart.setLimit(snapshot.topN);
    if (snapshot.counts.data !== null) weeklyChart.setData(snapshot.counts.data);

    renderPanel(mapPanel, snapshot, "map");
    renderPanel(skillsPanel, snapshot, "skills");
    renderPanel(countsPanel, snapshot, "counts");
  }

  const unsubscribe = store.subscribe(render);
  render();
  void store.load();

  return {
    state: () => store.getState(),
    whenIdle: () => store.whenIdle(),

    destroy() {
      unsubscribe();
      store.destroy();
      termSelector.destroy();
      datePicker.destroy();
      resetButton.destroy();
      stateMap.destroy();
      skillChart.destroy();
      weeklyChart.destroy();
      shell.remove();
    },
  };
}
