/**
 * Shared mounting and interaction helpers for the dashboard tests.
 */

import { createDashboard, type DashboardController } from "../src/app";
import type { QueryParams } from "../src/api";
import { memoryUrlAdapter } from "../src/urlState";
import { fixtureHandler } from "./fixture";
import { createStubApi, type StubApi, type StubCall, type StubHandler } from "./stubApi";

export interface Mounted {
  stub: StubApi;
  url: ReturnType<typeof memoryUrlAdapter>;
  root: HTMLElement;
  dash: DashboardController;
}

export function mount(query = "", handler: StubHandler = fixtureHandler): Mounted {
  const stub = createStubApi(handler);
  const url = memoryUrlAdapter(query);
  const root = document.createElement("div");
  document.body.append(root);
  const dash = createDashboard({ root, api: stub.api, url });
  return { stub, url, root, dash };
}

export function termSelect(root: HTMLElement): HTMLSelectElement {
  const el = root.querySelector<HTMLSelectElement>(".term-selector select");
  if (!el) throw new Error("term selector not rendered");
  return el;
}

export function limitSelect(root: HTMLElement): HTMLSelectElement {
  const el = root.querySelector<HTMLSelectElement>(".skill-limit select");
  if (!el) throw new Error("skill limit selector not rendered");
  return el;
}

export function fromInput(root: HTMLElement): HTMLInputElement {
  const el = root.querySelector<HTMLInputElement>('input[aria-label="posted from"]');
  if (!el) throw new Error("from input not rendered");
  return el;
}

export function toInput(root: HTMLElement): HTMLInputElement {
  const el = root.querySelector<HTMLInputElement>('input[aria-label="posted to"]');
  if (!el) throw new Error("to input not rendered");
  return el;
}

export function resetButton(root: HTMLElement): HTMLButtonElement {
  const el = root.querySelector<HTMLButtonElement>("button.reset-state");
  if (!el) throw new Error("reset button not rendered");
  return el;
}

export function setSelect(select: HTMLSelectElement, value: string): void {
  select.value = value;
  select.dispatchEvent(new Event("change", { bubbles: true }));
}

export function setDateValue(input: HTMLInputElement, value: string): void {
  input.value = value;
  input.dispatchEvent(new Event("change", { bubbles: true }));
}

export function clickTile(root: HTMLElement, code: string): void {
  const tile = root.querySelector(`.state-map [data-state="${code}"]`);
  if (!tile) throw new Error(`no map tile for ${code}`);
  tile.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

/** Params of the newest recorded call for a path. */
export function lastParams(stub: StubApi, path: string): QueryParams | undefined {
  const match = [...stub.calls].reverse().find((call) => call.path === path);
  return match?.params;
}

export function callsFor(stub: StubApi, path: string): StubCall[] {
  return stub.calls.filter((call) => call.path === path);
}

/** Skill names currently charted, top to bottom. */
export function chartedSkills(root: HTMLElement): string[] {
  return [...root.querySelectorAll(".skill-chart .bar-label")].map(
    (node) => node.textContent ?? "",
  );
}

/** Let queued promises and timers drain. */
export function tick(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
