import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    port: 5173,
  },
  build: {
    outDir: "dist",
  },
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
