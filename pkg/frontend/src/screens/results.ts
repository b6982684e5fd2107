/**
 * Results screen: global weight table, alternative scores, and the
 * sensitivity explorer.
 *
 * Every figure is rendered with the exact token the backend serialized
 * (see wireNumber); the screen does no arithmetic beyond sizing the
 * score bars. The sensitivity strip colors each swept grid point by its
 * winning alternative and marks the weights where the top spot flips.
 */

import { wireNumber } from "../api.js";
import { el, clear } from "../dom.js";
import type { SensitivityResponse, SynthesisResponse } from "../types.js";

export interface ResultsActions {
    runSensitivity(node: string, steps: number): void;
    backToWizard(): void;
}

export interface ResultsView {
    synthesis: SynthesisResponse;
    /** Display names for alternative ids. */
    alternativeNames: Map<string, string>;
    /** Nodes offered in the sensitivity selector (all with 2+ siblings). */
    sweepNodes: string[];
    sweep: SensitivityResponse | null;
    error: string | null;
}

const BAR_COLORS = ["#3b82f6", "#f59e0b", "#10b981", "#ef4444", "#8b5cf6", "#14b8a6"];

function weightsTable(synthesis: SynthesisResponse): HTMLElement {
    const table = el("table", { id: "weights-table" });
    table.append(el("tr", {}, [
        el("th", {}, ["Criterion"]),
        el("th", {}, ["Sub-criterion"]),
        el("th", {}, ["Global weight"]),
    ]));
    for (const row of synthesis.global_weights) {
        table.append(el("tr", { class: "weight-row", "data-leaf": row.leaf_id }, [
            el("td", {}, [row.criterion]),
            el("td", {}, [row.sub_criterion]),
            el("td", { class: "weight-value" }, [wireNumber(row.global_weight)]),
        ]));
    }
    return table;
}

function scoreBars(view: ResultsView): HTMLElement {
    const { synthesis } = view;
    const tiedWithTop = new Set(
        synthesis.ties.filter((group) => group.includes(synthesis.ranking[0])).flat(),
    );
    const list = el("div", { id: "score-list" });
    synthesis.ranking.forEach((altId, position) => {
        const score = synthesis.scores[altId];
        const name = view.alternativeNames.get(altId) ?? altId;
        const bar = el("div", {
            class: "score-bar",
            style: `width: ${(score * 100).toFixed(2)}%; background: ${
                BAR_COLORS[position % BAR_COLORS.length]}`,
        });
        const labels: (HTMLElement | string)[] = [
            el("span", { class: "score-name" }, [name]),
            el("span", { class: "score-value" }, [wireNumber(score)]),
        ];
        if (position === 0 && !tiedWithTop.has(altId)) {
            labels.push(el("span", { id: "most-suitable", class: "badge" }, ["most suitable"]));
        }
        if (tiedWithTop.has(altId)) {
            labels.push(el("span", { class: "badge tied" }, ["tied"]));
        }
        list.append(el("div", { class: "score-row", "data-alt": altId }, [
            el("div", { class: "score-labels" }, labels),
            bar,
        ]));
    });
    return list;
}

function sensitivityStrip(view: ResultsView): HTMLElement {
    const wrap = el("div", { id: "sensitivity-view" });
    if (view.sweep === null) {
        wrap.append(el("p", {}, ["pick a criterion to sweep"]));
        return wrap;
    }
    const sweep = view.sweep;
    const altOrder = view.synthesis.ranking;
    const strip = el("div", { id: "sensitivity-strip" });
    for (const point of sweep.points) {
        const top = point.ranking[0];
        const color = BAR_COLORS[Math.max(0, altOrder.indexOf(top)) % BAR_COLORS.length];
        const cell = el("span", {
            class: "sweep-cell",
            style: `background: ${color}`,
            title: `weight ${wireNumber(point.weight)}: ${point.ranking.join(" > ")}`,
            "data-top": top,
        });
        strip.append(cell);
    }
    wrap.append(strip);

    // draggable what-if slider over the swept grid, reversal weights
    // marked as ticks on the track; dragging re-renders the ranking at
    // the selected point (all figures straight from the sweep response)
    const reversalIndices = sweep.reversals.map((weight) =>
        sweep.points.findIndex((point) => point.weight === weight));
    const ticks = el("datalist", { id: "reversal-ticks" });
    for (const index of reversalIndices) {
        if (index >= 0) {
            ticks.append(el("option", { value: String(index) }));
        }
    }
    const slider = el("input", {
        id: "sweep-slider",
        type: "range",
        min: "0",
        max: String(sweep.points.length - 1),
        value: String(Math.floor(sweep.points.length / 2)),
        list: "reversal-ticks",
    });
    const readout = el("div", { id: "sweep-readout" });
    const showPoint = () => {
        const point = sweep.points[Number(slider.value)];
        const top = point.ranking[0];
        clear(readout);
        readout.append(
            el("span", {}, [`at weight `]),
            el("span", { class: "sweep-weight" }, [wireNumber(point.weight)]),
            el("span", {}, [`: `]),
            el("span", { id: "sweep-top", "data-alt": top }, [
                view.alternativeNames.get(top) ?? top,
            ]),
            el("span", {}, [` leads (${point.ranking.join(" > ")})`]),
        );
    };
    slider.addEventListener("input", showPoint);
    showPoint();
    wrap.append(slider, ticks, readout);

    const markers = el("ul", { id: "reversal-list" });
    if (sweep.reversals.length === 0) {
        markers.append(el("li", {}, ["no rank reversals across the sweep"]));
    }
    for (const weight of sweep.reversals) {
        markers.append(el("li", { class: "reversal-marker" }, [
            `top alternative changes near weight ${wireNumber(weight)}`,
        ]));
    }
    wrap.append(markers);
    return wrap;
}

export function renderResults(root: HTMLElement, view: ResultsView, actions: ResultsActions): void {
    clear(root);
    root.append(el("h2", {}, ["3. Results"]));

    if (view.synthesis.warning) {
        root.append(el("div", { id: "warning-banner", class: "warning" }, [
            `${view.synthesis.warning.message} (${view.synthesis.warning.nodes.join(", ")})`,
        ]));
    }

    root.append(el("h3", {}, ["Global weights"]), weightsTable(view.synthesis));
    root.append(el("h3", {}, ["Alternative scores"]), scoreBars(view));

    root.append(el("h3", {}, ["Sensitivity"]));
    const select = el("select", { id: "sensitivity-node" });
    for (const node of view.sweepNodes) {
        const option = el("option", { value: node }, [node]);
        if (view.sweep !== null && view.sweep.target_node === node) {
            option.setAttribute("selected", "selected");
        }
        select.append(option);
    }
    const steps = el("input", {
        id: "sensitivity-steps",
        type: "number",
        min: "2",
        value: view.sweep ? String(view.sweep.points.length) : "100",
    });
    const run = el("button", { id: "run-sensitivity" }, ["Sweep"]);
    run.addEventListener("click", () => {
        actions.runSensitivity(select.value, Number(steps.value));
    });
    root.append(el("div", { class: "sweep-controls" }, [select, steps, run]));
    root.append(sensitivityStrip(view));

    const back = el("button", { id: "back-to-wizard" }, ["Back to comparisons"]);
    back.addEventListener("click", () => actions.backToWizard());
    root.append(el("div", { class: "actions" }, [back]));

    if (view.error) {
        root.append(el("div", { id: "results-error", class: "error" }, [view.error]));
    }
}
