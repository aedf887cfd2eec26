/**
 * Entry point: mount the dashboard against the configured API origin.
 *
 * The base URL can be set at build time (VITE_API_BASE) or at runtime
 * by assigning `window.SKILLSCOPE_API_BASE` before this script runs;
 * unset, the app talks to its own origin — the layout used when the
 * bundle is served by the API process itself.
 */

import { createDashboard } from "./app";
import { createHttpApi } from "./api";
import "./style.css";

declare global {
  interface Window {
    SKILLSCOPE_API_BASE?: string;
  }
}

const base =
  window.SKILLSCOPE_API_BASE ??
  (import.meta.env.VITE_API_BASE as string | undefined) ??
  "";

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app mount point");
}

createDashboard({ root, api: createHttpApi(base) });
