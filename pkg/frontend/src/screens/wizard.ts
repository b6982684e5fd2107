/**
 * Pairwise judgment wizard screen.
 *
 * One comparison set is active at a time. Every pair gets a nine-step
 * intensity slider plus a direction toggle; submitting the set sends it
 * to the backend and renders the returned consistency report as a gauge
 * — green when the set passes the CR threshold, red when it fails, with
 * the backend's suggested revision one click away.
 */

import { wireNumber } from "../api.js";
import { el, clear } from "../dom.js";
import {
    AnswerSheet,
    gaugeState,
    isComplete,
    pairKey,
    pairsFor,
} from "../elicitation.js";
import { describe, sliderState, wireValue, SCALE_STEPS } from "../scale.js";
import type { ComparisonSetInfo } from "../template.js";
import type { ReportWire } from "../types.js";

export interface WizardActions {
    selectNode(nodeId: string): void;
    setPair(i: number, j: number, value: string): void;
    submitSet(): void;
    applySuggestion(): void;
    reloadModel(): void;
    showResults(): void;
}

export interface WizardView {
    sets: ComparisonSetInfo[];
    current: ComparisonSetInfo;
    sheet: AnswerSheet;
    report: ReportWire | null;
    /** Reports already received for other nodes, for the status chips. */
    reports: Map<string, ReportWire | null>;
    /** True once every comparison set has been accepted by the backend. */
    allSubmitted: boolean;
    /** True after a write was rejected as stale; a reload is required. */
    conflict: boolean;
    error: string | null;
}

function statusChip(report: ReportWire | null | undefined, submitted: boolean): HTMLElement {
    const state = submitted ? gaugeState(report ?? null) : "pending";
    return el("span", { class: `chip ${state}` }, [state]);
}

function pairRow(
    view: WizardView,
    i: number,
    j: number,
    actions: WizardActions,
): HTMLElement {
    const names = view.current.memberNames;
    const existing = view.sheet.answers.get(pairKey(i, j));
    const state = existing ? sliderState(existing) : { intensity: 1, firstDominates: true };

    const slider = el("input", {
        type: "range",
        min: "1",
        max: "9",
        step: "1",
        value: String(state.intensity),
        class: "intensity-slider",
        "data-pair": pairKey(i, j),
    });
    const toggle = el("button", {
        class: "direction-toggle",
        "data-pair": pairKey(i, j),
        "data-direction": state.firstDominates ? "first" : "second",
    }, [
        state.firstDominates ? `${names[i]} dominates` : `${names[j]} dominates`,
    ]);
    const caption = el("span", { class: "pair-caption" }, [
        existing ? describe(existing, names[i], names[j]) : "no judgment yet",
    ]);

    const current = { ...state };
    const push = () => {
        actions.setPair(i, j, wireValue(current.intensity, current.firstDominates));
    };
    slider.addEventListener("input", () => {
        current.intensity = Number(slider.value);
        push();
    });
    toggle.addEventListener("click", () => {
        current.firstDominates = !current.firstDominates;
        push();
    });

    return el("div", { class: "pair-row", "data-pair": pairKey(i, j) }, [
        el("span", { class: "pair-members" }, [`${names[i]} vs ${names[j]}`]),
        toggle,
        slider,
        caption,
    ]);
}

function gauge(report: ReportWire | null, actions: WizardActions): HTMLElement {
    const state = gaugeState(report);
    const box = el("div", { id: "gauge", class: `gauge ${state}` });
    if (report === null) {
        box.append(el("span", {}, ["consistency: not yet checked"]));
        return box;
    }
    box.append(el("span", { id: "gauge-cr" }, [`CR = ${wireNumber(report.cr)}`]));
    box.append(el("span", { class: "gauge-verdict" }, [
        report.consistent ? " — acceptable" : " — exceeds threshold",
    ]));
    if (!report.consistent && report.worst_pair !== null) {
        const hint = report.worst_pair;
        box.append(el("div", { id: "suggestion" }, [
            `least consistent pair: (${hint.i}, ${hint.j}); suggested value ${hint.suggested_value}`,
        ]));
        const apply = el("button", { id: "apply-suggestion" }, ["Apply suggestion"]);
        apply.addEventListener("click", () => actions.applySuggestion());
        box.append(apply);
    }
    return box;
}

export function renderWizard(root: HTMLElement, view: WizardView, actions: WizardActions): void {
    clear(root);
    root.append(el("h2", {}, ["2. Compare pairwise"]));

    const nav = el("ul", { id: "node-list" });
    for (const set of view.sets) {
        const submitted = view.reports.has(set.nodeId);
        const link = el("a", { href: "#", "data-node": set.nodeId }, [set.nodeId]);
        link.addEventListener("click", (event) => {
            event.preventDefault();
            actions.selectNode(set.nodeId);
        });
        const item = el("li", {
            class: set.nodeId === view.current.nodeId ? "active" : "",
        }, [link, " ", statusChip(view.reports.get(set.nodeId), submitted)]);
        nav.append(item);
    }
    root.append(nav);

    const heading = view.current.alternatives
        ? `Compare the alternatives under "${view.current.nodeId}"`
        : `Compare the children of "${view.current.nodeId}"`;
    root.append(el("h3", { id: "current-node" }, [heading]));
    root.append(el("p", { class: "scale-hint" }, [
        `Scale: ${SCALE_STEPS[0].label} (1) .. ${SCALE_STEPS[8].label} (9)`,
    ]));

    const pairs = el("div", { id: "pair-list" });
    for (const [i, j] of pairsFor(view.sheet.size)) {
        pairs.append(pairRow(view, i, j, actions));
    }
    root.append(pairs);

    const submit = el("button", { id: "submit-set" }, ["Check consistency"]);
    if (!isComplete(view.sheet)) {
        submit.setAttribute("disabled", "disabled");
    }
    submit.addEventListener("click", () => actions.submitSet());
    root.append(el("div", { class: "actions" }, [submit]));

    root.append(gauge(view.report, actions));

    const toResults = el("button", { id: "to-results" }, ["See results"]);
    if (!view.allSubmitted) {
        toResults.setAttribute("disabled", "disabled");
    }
    toResults.addEventListener("click", () => actions.showResults());
    root.append(el("div", { class: "actions" }, [toResults]));

    if (view.error) {
        root.append(el("div", { id: "wizard-error", class: "error" }, [view.error]));
    }
    if (view.conflict) {
        const reload = el("button", { id: "reload-model" }, ["Reload model"]);
        reload.addEventListener("click", () => actions.reloadModel());
        root.append(el("div", { class: "actions" }, [reload]));
    }
}
