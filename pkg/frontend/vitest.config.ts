import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    // The flow test spawns the backend server once per file.
    testTimeout: 30_000,
    hookTimeout: 60_000,
  },
});
