/**
 * The nine-step verbal judgment scale used by the elicitation wizard.
 *
 * Each step maps a linguistic importance label to an intensity 1..9; a
 * direction toggle decides which member of the pair dominates, turning
 * intensity k into the wire value "k" or its reciprocal "1/k". The labels
 * match the ones the backend accepts for label-based input.
 */

export interface ScaleStep {
    /** Intensity 1..9. */
    intensity: number;
    /** Linguistic label shown next to the slider. */
    label: string;
}

export const SCALE_STEPS: ScaleStep[] = [
    { intensity: 1, label: "equal importance" },
    { intensity: 2, label: "intermediate between equal and moderate" },
    { intensity: 3, label: "moderate importance" },
    { intensity: 4, label: "intermediate between moderate and strong" },
    { intensity: 5, label: "strong importance" },
    { intensity: 6, label: "intermediate between strong and very strong" },
    { intensity: 7, label: "very strong importance" },
    { intensity: 8, label: "intermediate between very strong and extreme" },
    { intensity: 9, label: "extreme importance" },
];

/**
 * Wire value for a judgment of `intensity` on the pair (i, j).
 *
 * `firstDominates` means member i is the more important one (value "k");
 * otherwise member j dominates and the value is the reciprocal "1/k".
 * Intensity 1 is direction-free and always serializes as "1".
 */
export function wireValue(intensity: number, firstDominates: boolean): string {
    if (!Number.isInteger(intensity) || intensity < 1 || intensity > 9) {
        throw new RangeError(`intensity must be an integer 1..9, got ${intensity}`);
    }
    if (intensity === 1) {
        return "1";
    }
    return firstDominates ? String(intensity) : `1/${intensity}`;
}

/** Parse a wire value back into slider state (intensity + direction). */
export function sliderState(value: string): { intensity: number; firstDominates: boolean } {
    const match = /^(?:1\/)?([1-9])$/.exec(value.trim());
    if (!match || (value.trim().startsWith("1/") && match[1] === "1")) {
        throw new RangeError(`not a canonical scale value: ${JSON.stringify(value)}`);
    }
    const intensity = Number(match[1]);
    return { intensity, firstDominates: !value.trim().startsWith("1/") };
}

/** Human-readable phrasing of a judgment for the wizard's summary line. */
export function describe(value: string, firstName: string, secondName: string): string {
    const { intensity, firstDominates } = sliderState(value);
    const step = SCALE_STEPS[intensity - 1];
    if (intensity === 1) {
        return `${firstName} and ${secondName}: ${step.label}`;
    }
    const [winner, loser] = firstDominates ? [firstName, secondName] : [secondName, firstName];
    return `${winner} over ${loser}: ${step.label}`;
}
