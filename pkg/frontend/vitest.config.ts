import { defineConfig } from "vitest/config";

export default defineConfig({
    test: {
        environment: "jsdom",
        include: ["tests/**/*.test.ts"],
        testTimeout: 90000,
        hookTimeout: 90000,
    },
});
