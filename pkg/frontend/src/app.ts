/**
 * Application shell: screen state, backend calls, and rendering.
 *
 * The app walks three screens — builder, wizard, results — against one
 * backend model. All derived figures come from backend responses; the
 * client only holds the document being edited, the per-node answer
 * sheets, and the latest reports. Every mutating call carries the
 * revision it read, and a conflict triggers a resync-and-retry so no
 * update is silently lost.
 */

import { ApiClient, ApiError } from "./api.js";
import {
    AnswerSheet,
    applySuggestion,
    newSheet,
    setAnswer,
    toEntries,
} from "./elicitation.js";
import { renderBuilder } from "./screens/builder.js";
import { renderResults, ResultsView } from "./screens/results.js";
import { renderWizard, WizardView } from "./screens/wizard.js";
import { comparisonSets, ComparisonSetInfo, templateDocument } from "./template.js";
import type {
    ModelDocumentWire,
    ReportWire,
    SensitivityResponse,
    SynthesisResponse,
} from "./types.js";

export type Screen = "builder" | "wizard" | "results";

export interface AppState {
    screen: Screen;
    doc: ModelDocumentWire;
    modelId: string | null;
    revision: number;
    sets: ComparisonSetInfo[];
    currentNode: string | null;
    sheets: Map<string, AnswerSheet>;
    reports: Map<string, ReportWire | null>;
    /** A write was rejected as stale; the user must reload before retrying. */
    conflict: boolean;
    synthesis: SynthesisResponse | null;
    /** Raw response text of the last synthesis call, for display checks. */
    synthesisRaw: string | null;
    sweep: SensitivityResponse | null;
    sweepRaw: string | null;
    error: string | null;
}

export interface AppHandle {
    state: AppState;
    root: HTMLElement;
    api: ApiClient;
    render(): void;
    /** Promise of the most recent asynchronous action, for tests. */
    lastAction: Promise<void>;
    actions: {
        createModel(): Promise<void>;
        selectNode(nodeId: string): void;
        setPair(i: number, j: number, value: string): void;
        submitSet(): Promise<void>;
        applySuggestion(): Promise<void>;
        reloadModel(): Promise<void>;
        showResults(): Promise<void>;
        runSensitivity(node: string, steps: number): Promise<void>;
        backToWizard(): void;
    };
}

function message(err: unknown): string {
    if (err instanceof ApiError && err.body) {
        const defects = (err.body.defects ?? [])
            .map((defect) => {
                const d = defect as { subject?: string; message?: string };
                return d.message ? `\n${d.subject ?? "?"}: ${d.message}` : "";
            })
            .join("");
        return `${err.body.code}: ${err.body.message}${defects}`;
    }
    return err instanceof Error ? err.message : String(err);
}

export function createApp(root: HTMLElement, api: ApiClient): AppHandle {
    const state: AppState = {
        screen: "builder",
        doc: templateDocument(),
        modelId: null,
        revision: 0,
        sets: [],
        currentNode: null,
        sheets: new Map(),
        reports: new Map(),
        conflict: false,
        synthesis: null,
        synthesisRaw: null,
        sweep: null,
        sweepRaw: null,
        error: null,
    };

    const handle: AppHandle = {
        state,
        root,
        api,
        render,
        lastAction: Promise.resolve(),
        actions: {
            createModel,
            selectNode,
            setPair,
            submitSet,
            applySuggestion: applySuggestionAction,
            reloadModel,
            showResults,
            runSensitivity,
            backToWizard,
        },
    };

    function track(work: Promise<void>): Promise<void> {
        handle.lastAction = work;
        return work;
    }

    function currentSheet(): AnswerSheet {
        const sheet = state.currentNode === null ? undefined : state.sheets.get(state.currentNode);
        if (!sheet) {
            throw new Error("no comparison set selected");
        }
        return sheet;
    }

    async function createModel(): Promise<void> {
        return track((async () => {
            state.error = null;
            try {
                const reply = await api.createModel(state.doc);
                state.modelId = reply.data.model_id;
                state.revision = reply.data.revision;
                state.sets = comparisonSets(state.doc);
                state.sheets = new Map(state.sets.map((set) => [
                    set.nodeId,
                    newSheet(set.nodeId, set.memberIds.length),
                ]));
                state.reports = new Map();
                state.currentNode = state.sets[0]?.nodeId ?? null;
                state.screen = "wizard";
            } catch (err) {
                state.error = message(err);
            }
            render();
        })());
    }

    function selectNode(nodeId: string): void {
        if (state.sheets.has(nodeId)) {
            state.currentNode = nodeId;
            state.error = null;
            render();
        }
    }

    function setPair(i: number, j: number, value: string): void {
        setAnswer(currentSheet(), i, j, value);
        render();
    }

    async function putCurrentSet(): Promise<void> {
        const sheet = currentSheet();
        const modelId = state.modelId;
        if (modelId === null) {
            throw new Error("no model created yet");
        }
        const entries = toEntries(sheet);
        try {
            const reply = await api.putJudgments(modelId, sheet.nodeId, entries, state.revision);
            state.revision = reply.data.revision;
            state.reports.set(sheet.nodeId, reply.data.report);
            state.conflict = false;
        } catch (err) {
            // never overwrite someone else's change silently: surface the
            // conflict and require an explicit reload before resubmitting
            if (err instanceof ApiError && err.status === 409) {
                state.conflict = true;
                const current = err.body?.current_revision;
                state.error = "the model changed in another window"
                    + (current === undefined ? "" : ` (now at revision ${current})`)
                    + "; reload it to continue";
                return;
            }
            throw err;
        }
    }

    async function reloadModel(): Promise<void> {
        return track((async () => {
            const modelId = state.modelId;
            if (modelId === null) {
                return;
            }
            try {
                const model = await api.getModel(modelId);
                state.revision = model.data.revision;
                const judgments = model.data.document.judgments;
                for (const set of state.sets) {
                    // keep the in-progress sheet: resubmitting it is the
                    // user's explicit call after seeing the conflict
                    if (set.nodeId === state.currentNode) {
                        continue;
                    }
                    const sheet = newSheet(set.nodeId, set.memberIds.length);
                    for (const entry of judgments[set.nodeId] ?? []) {
                        setAnswer(sheet, entry.i, entry.j, entry.value);
                    }
                    state.sheets.set(set.nodeId, sheet);
                }
                const consistency = await api.consistency(modelId);
                state.reports = new Map(Object.entries(consistency.data.reports));
                state.conflict = false;
                state.error = null;
            } catch (err) {
                state.error = message(err);
            }
            render();
        })());
    }

    async function submitSet(): Promise<void> {
        return track((async () => {
            state.error = null;
            try {
                await putCurrentSet();
            } catch (err) {
                state.error = message(err);
            }
            render();
        })());
    }

    async function applySuggestionAction(): Promise<void> {
        return track((async () => {
            state.error = null;
            const sheet = currentSheet();
            const report = state.reports.get(sheet.nodeId) ?? null;
            if (report === null || !applySuggestion(sheet, report)) {
                state.error = "no suggestion available";
                render();
                return;
            }
            try {
                await putCurrentSet();
            } catch (err) {
                state.error = message(err);
            }
            render();
        })());
    }

    async function showResults(): Promise<void> {
        return track((async () => {
            state.error = null;
            const modelId = state.modelId;
            if (modelId === null) {
                return;
            }
            try {
                const reply = await api.synthesis(modelId);
                state.synthesis = reply.data;
                state.synthesisRaw = reply.raw;
                state.sweep = null;
                state.sweepRaw = null;
                state.screen = "results";
            } catch (err) {
                state.error = message(err);
            }
            render();
        })());
    }

    async function runSensitivity(node: string, steps: number): Promise<void> {
        return track((async () => {
            state.error = null;
            const modelId = state.modelId;
            if (modelId === null) {
                return;
            }
            try {
                const reply = await api.sensitivity(modelId, node, steps);
                state.sweep = reply.data;
                state.sweepRaw = reply.raw;
            } catch (err) {
                state.error = message(err);
            }
            render();
        })());
    }

    function backToWizard(): void {
        state.screen = "wizard";
        state.error = null;
        render();
    }

    function wizardView(): WizardView {
        const current = state.sets.find((set) => set.nodeId === state.currentNode);
        if (!current) {
            throw new Error("wizard rendered without a current node");
        }
        return {
            sets: state.sets,
            current,
            sheet: currentSheet(),
            report: state.reports.get(current.nodeId) ?? null,
            reports: state.reports,
            allSubmitted: state.sets.every(
                (set) => (state.reports.get(set.nodeId) ?? null) !== null,
            ),
            conflict: state.conflict,
            error: state.error,
        };
    }

    function resultsView(): ResultsView {
        if (state.synthesis === null) {
            throw new Error("results rendered without a synthesis");
        }
        const names = new Map(state.doc.alternatives.map((alt) => [alt.id, alt.name]));
        const sweepNodes = state.sets
            .filter((set) => !set.alternatives && set.memberIds.length >= 2)
            .flatMap((set) => set.memberIds);
        return {
            synthesis: state.synthesis,
            alternativeNames: names,
            sweepNodes,
            sweep: state.sweep,
            error: state.error,
        };
    }

    function render(): void {
        if (state.screen === "builder") {
            renderBuilder(root, state.doc, {
                createModel: () => void createModel(),
                refresh: render,
            }, state.error);
        } else if (state.screen === "wizard") {
            renderWizard(root, wizardView(), {
                selectNode,
                setPair,
                submitSet: () => void submitSet(),
                applySuggestion: () => void applySuggestionAction(),
                reloadModel: () => void reloadModel(),
                showResults: () => void showResults(),
            });
        } else {
            renderResults(root, resultsView(), {
                runSensitivity: (node, steps) => void runSensitivity(node, steps),
                backToWizard,
            });
        }
    }

    render();
    return handle;
}

/** Entry point for the browser bundle. */
export function main(): void {
    const params = new URLSearchParams(window.location.search);
    const backend = params.get("backend") ?? window.location.origin;
    const root = document.getElementById("app");
    if (!root) {
        throw new Error("missing #app container");
    }
    createApp(root, new ApiClient(backend));
}
