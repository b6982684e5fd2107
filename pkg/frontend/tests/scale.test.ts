import { describe, expect, it } from "vitest";

import { describe as phrase, SCALE_STEPS, sliderState, wireValue } from "../src/scale.js";

describe("verbal scale", () => {
    it("has nine steps with ascending intensities", () => {
        expect(SCALE_STEPS).toHaveLength(9);
        expect(SCALE_STEPS.map((s) => s.intensity)).toEqual([1, 2, 3, 4, 5, 6, 7, 8, 9]);
        expect(SCALE_STEPS[0].label).toBe("equal importance");
        expect(SCALE_STEPS[8].label).toBe("extreme importance");
    });

    it("serializes direct judgments as plain integers", () => {
        expect(wireValue(5, true)).toBe("5");
        expect(wireValue(9, true)).toBe("9");
    });

    it("serializes reversed judgments as unit fractions", () => {
        expect(wireValue(5, false)).toBe("1/5");
        expect(wireValue(9, false)).toBe("1/9");
    });

    it("always serializes intensity 1 as \"1\"", () => {
        expect(wireValue(1, true)).toBe("1");
        expect(wireValue(1, false)).toBe("1");
    });

    it("rejects intensities off the 1..9 grid", () => {
        expect(() => wireValue(0, true)).toThrow(RangeError);
        expect(() => wireValue(10, true)).toThrow(RangeError);
        expect(() => wireValue(2.5, true)).toThrow(RangeError);
    });

    it("round-trips every canonical value through sliderState", () => {
        for (let k = 1; k <= 9; k += 1) {
            expect(sliderState(wireValue(k, true))).toEqual({
                intensity: k,
                firstDominates: true,
            });
            if (k > 1) {
                expect(sliderState(wireValue(k, false))).toEqual({
                    intensity: k,
                    firstDominates: false,
                });
            }
        }
    });

    it("rejects non-canonical value strings", () => {
        for (const bad of ["0", "10", "2.5", "1/1", "1/10", "", "x"]) {
            expect(() => sliderState(bad)).toThrow(RangeError);
        }
    });

    it("phrases judgments with the dominant member first", () => {
        expect(phrase("5", "Cost", "Reach")).toBe("Cost over Reach: strong importance");
        expect(phrase("1/5", "Cost", "Reach")).toBe("Reach over Cost: strong importance");
        expect(phrase("1", "Cost", "Reach")).toBe("Cost and Reach: equal importance");
    });
});
