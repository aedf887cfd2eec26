/// <reference types="vitest/config" />
import { defineConfig } from "vite";

export default defineConfig({
  // relative asset paths so the bundle works under `skillscope serve --static`
  // or any sub-path of a static host
  base: "./",
  build: {
    outDir: "dist",
    sourcemap: true,
  },
  test: {
    environment: "jsdom",
    // see test/node-polyfill.cjs: backfills a worker_threads API that
    // jsdom's HTTP stack expects but some Node 20 builds lack
    execArgv: [
      "--require",
      new URL("./test/node-polyfill.cjs", import.meta.url).pathname,
    ],
  },
});
