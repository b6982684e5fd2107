/**
 * Hierarchy builder screen.
 *
 * Shows the goal, the criteria tree, and the alternatives as editable
 * rows, seeded from the canonical template. Structural edits happen
 * client-side; pressing "Start comparisons" posts the document to the
 * backend, which is the sole validator — any defects it reports are
 * displayed verbatim.
 */

import { el, clear } from "../dom.js";
import type { CriterionWire, ModelDocumentWire } from "../types.js";

export interface BuilderActions {
    /** POST the document and move on to the wizard. */
    createModel(): void;
    /** Re-render after a structural edit. */
    refresh(): void;
}

let idCounter = 0;

/** Derive a unique id slug from a display name. */
export function slugify(name: string, taken: Set<string>): string {
    const base = name.trim().toLowerCase().replace(/[^a-z0-9]+/g, "_")
        .replace(/^_+|_+$/g, "") || "node";
    let slug = base;
    while (taken.has(slug)) {
        idCounter += 1;
        slug = `${base}_${idCounter}`;
    }
    return slug;
}

function allIds(doc: ModelDocumentWire): Set<string> {
    const ids = new Set<string>(["goal"]);
    const walk = (nodes: CriterionWire[]) => {
        for (const n of nodes) {
            ids.add(n.id);
            walk(n.children);
        }
    };
    walk(doc.criteria);
    for (const alt of doc.alternatives) {
        ids.add(alt.id);
    }
    return ids;
}

function criterionRow(
    doc: ModelDocumentWire,
    siblings: CriterionWire[],
    index: number,
    depth: number,
    actions: BuilderActions,
): HTMLElement {
    const criterion = siblings[index];
    const nameInput = el("input", {
        class: "name-input",
        value: criterion.name,
        "data-node": criterion.id,
    });
    nameInput.addEventListener("change", () => {
        criterion.name = nameInput.value;
    });
    const addChild = el("button", { class: "add-child" }, ["+ sub-criterion"]);
    addChild.addEventListener("click", () => {
        const name = `New criterion ${criterion.children.length + 1}`;
        criterion.children.push({ id: slugify(name, allIds(doc)), name, children: [] });
        actions.refresh();
    });
    const remove = el("button", { class: "remove-node" }, ["remove"]);
    remove.addEventListener("click", () => {
        siblings.splice(index, 1);
        actions.refresh();
    });
    const row = el("div", {
        class: "criterion-row",
        style: `margin-left: ${depth * 24}px`,
        "data-node": criterion.id,
    }, [nameInput, addChild, remove]);
    const block = el("div", {}, [row]);
    criterion.children.forEach((_, childIndex) => {
        block.append(criterionRow(doc, criterion.children, childIndex, depth + 1, actions));
    });
    return block;
}

export function renderBuilder(
    root: HTMLElement,
    doc: ModelDocumentWire,
    actions: BuilderActions,
    error: string | null,
): void {
    clear(root);
    const goalInput = el("input", { id: "goal-input", value: doc.goal });
    goalInput.addEventListener("change", () => {
        doc.goal = goalInput.value;
    });
    root.append(el("h2", {}, ["1. Structure the decision"]));
    root.append(el("label", {}, ["Goal: ", goalInput]));

    const tree = el("div", { id: "criteria-tree" });
    doc.criteria.forEach((_, index) => {
        tree.append(criterionRow(doc, doc.criteria, index, 0, actions));
    });
    const addTop = el("button", { id: "add-criterion" }, ["+ criterion"]);
    addTop.addEventListener("click", () => {
        const name = `New criterion ${doc.criteria.length + 1}`;
        doc.criteria.push({ id: slugify(name, allIds(doc)), name, children: [] });
        actions.refresh();
    });
    root.append(el("h3", {}, ["Criteria"]), tree, addTop);

    const altList = el("div", { id: "alternative-list" });
    doc.alternatives.forEach((alt, index) => {
        const input = el("input", { class: "alt-input", value: alt.name });
        input.addEventListener("change", () => {
            alt.name = input.value;
        });
        const remove = el("button", { class: "remove-alt" }, ["remove"]);
        remove.addEventListener("click", () => {
            doc.alternatives.splice(index, 1);
            actions.refresh();
        });
        altList.append(el("div", { class: "alt-row", "data-alt": alt.id }, [input, remove]));
    });
    const addAlt = el("button", { id: "add-alternative" }, ["+ alternative"]);
    addAlt.addEventListener("click", () => {
        const name = `Option ${doc.alternatives.length + 1}`;
        doc.alternatives.push({ id: slugify(name, allIds(doc)), name });
        actions.refresh();
    });
    root.append(el("h3", {}, ["Alternatives"]), altList, addAlt);

    const start = el("button", { id: "create-model" }, ["Start comparisons"]);
    start.addEventListener("click", () => actions.createModel());
    root.append(el("div", { class: "actions" }, [start]));

    if (error) {
        root.append(el("div", { id: "builder-error", class: "error" }, [error]));
    }
}
