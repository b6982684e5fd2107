/**
 * State for the pairwise judgment wizard.
 *
 * The wizard walks one comparison set at a time, asking for every pair
 * above the diagonal. Answers live client-side until the user submits
 * the set, at which point they are pushed to the backend, which replies
 * with the consistency report driving the gauge. All numeric feedback
 * (CR, suggested revisions) comes from that report; this module only
 * tracks which pairs have answers.
 */

import type { JudgmentEntryWire, ReportWire } from "./types.js";

/** Upper-triangle pairs (i, j), i < j, in row-major order. */
export function pairsFor(size: number): [number, number][] {
    const pairs: [number, number][] = [];
    for (let i = 0; i < size; i += 1) {
        for (let j = i + 1; j < size; j += 1) {
            pairs.push([i, j]);
        }
    }
    return pairs;
}

export function pairKey(i: number, j: number): string {
    return `${i},${j}`;
}

/** Mutable per-node answer sheet. */
export interface AnswerSheet {
    nodeId: string;
    size: number;
    /** pairKey -> wire value, e.g. "5" or "1/5". */
    answers: Map<string, string>;
}

export function newSheet(nodeId: string, size: number): AnswerSheet {
    return { nodeId, size, answers: new Map() };
}

export function setAnswer(sheet: AnswerSheet, i: number, j: number, value: string): void {
    if (i < 0 || j <= i || j >= sheet.size) {
        throw new RangeError(`pair (${i}, ${j}) out of range for size ${sheet.size}`);
    }
    sheet.answers.set(pairKey(i, j), value);
}

/** Pairs still unanswered, in canonical order. */
export function missingPairs(sheet: AnswerSheet): [number, number][] {
    return pairsFor(sheet.size).filter(([i, j]) => !sheet.answers.has(pairKey(i, j)));
}

export function isComplete(sheet: AnswerSheet): boolean {
    return missingPairs(sheet).length === 0;
}

/** Wire entries for submission, in canonical pair order. */
export function toEntries(sheet: AnswerSheet): JudgmentEntryWire[] {
    const entries: JudgmentEntryWire[] = [];
    for (const [i, j] of pairsFor(sheet.size)) {
        const value = sheet.answers.get(pairKey(i, j));
        if (value !== undefined) {
            entries.push({ i, j, value });
        }
    }
    return entries;
}

/** Gauge condition derived from the backend's consistency report. */
export type GaugeState = "green" | "red" | "pending";

/**
 * Classify a report for the gauge: green when the backend accepts the
 * set's consistency ratio, red when it exceeds the threshold, pending
 * while the set is incomplete and no report exists yet.
 */
export function gaugeState(report: ReportWire | null): GaugeState {
    if (report === null) {
        return "pending";
    }
    return report.consistent ? "green" : "red";
}

/**
 * Apply the report's revision hint: overwrite the flagged pair with the
 * suggested value. Returns false when the report carries no hint.
 */
export function applySuggestion(sheet: AnswerSheet, report: ReportWire): boolean {
    if (report.worst_pair === null) {
        return false;
    }
    const { i, j, suggested_value } = report.worst_pair;
    setAnswer(sheet, i, j, suggested_value);
    return true;
}
