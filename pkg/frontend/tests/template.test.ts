import { describe, expect, it } from "vitest";

import { comparisonSets, templateDocument } from "../src/template.js";
import type { CriterionWire } from "../src/types.js";

function collectIds(nodes: CriterionWire[], into: string[] = []): string[] {
    for (const node of nodes) {
        into.push(node.id);
        collectIds(node.children, into);
    }
    return into;
}

describe("starter template", () => {
    it("is a three-branch tree with thirteen leaves and three alternatives", () => {
        const doc = templateDocument();
        expect(doc.criteria).toHaveLength(3);
        expect(doc.criteria.map((c) => c.id)).toEqual([
            "functionality", "governance", "accessibility",
        ]);
        const leaves = collectIds(doc.criteria).filter((id) =>
            !["functionality", "governance", "accessibility"].includes(id));
        expect(leaves).toHaveLength(13);
        expect(doc.alternatives.map((a) => a.id)).toEqual(["csp1", "csp2", "csp3"]);
        expect(doc.judgments).toEqual({});
    });

    it("has globally unique ids", () => {
        const doc = templateDocument();
        const ids = collectIds(doc.criteria).concat(doc.alternatives.map((a) => a.id));
        expect(new Set(ids).size).toBe(ids.length);
    });

    it("returns an independent copy on every call", () => {
        const first = templateDocument();
        first.criteria[0].children.pop();
        first.goal = "changed";
        const second = templateDocument();
        expect(second.criteria[0].children).toHaveLength(5);
        expect(second.goal).toBe("Select a cloud service provider");
    });
});

describe("comparison set enumeration", () => {
    it("walks goal first, then criteria top-down, leaves comparing alternatives", () => {
        const sets = comparisonSets(templateDocument());
        expect(sets).toHaveLength(17);
        expect(sets[0]).toMatchObject({
            nodeId: "goal",
            memberIds: ["functionality", "governance", "accessibility"],
            alternatives: false,
        });
        expect(sets[1].nodeId).toBe("functionality");
        expect(sets[1].memberIds).toEqual([
            "automation", "error_handling", "fault_tolerance",
            "performance_quality", "unit_testing",
        ]);
        expect(sets[2]).toMatchObject({ nodeId: "automation", alternatives: true });
        expect(sets[2].memberIds).toEqual(["csp1", "csp2", "csp3"]);
        const nodeOrder = sets.map((s) => s.nodeId);
        expect(nodeOrder.indexOf("governance")).toBeGreaterThan(nodeOrder.indexOf("unit_testing"));
        expect(nodeOrder.indexOf("accessibility")).toBeGreaterThan(
            nodeOrder.indexOf("role_based_access"));
    });

    it("marks exactly the leaf sets as alternative comparisons", () => {
        const sets = comparisonSets(templateDocument());
        const altSets = sets.filter((s) => s.alternatives);
        expect(altSets).toHaveLength(13);
        for (const set of altSets) {
            expect(set.memberNames).toEqual(["CSP1", "CSP2", "CSP3"]);
        }
    });
});
