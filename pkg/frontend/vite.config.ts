import { defineConfig } from "vitest/config";

// The dev server proxies API paths to a locally running `pathrec serve`
// instance so the app can use same-origin requests in both dev and prod.
const API = "http://127.0.0.1:8000";

export default defineConfig({
  server: {
    proxy: {
      "/pois": API,
      "/poi": API,
      "/recommend": API,
      "/health": API,
    },
  },
  test: {
    environment: "jsdom",
  },
});
