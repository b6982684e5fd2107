/**
 * Canonical starter template for the hierarchy builder.
 *
 * A three-branch criteria tree for choosing between three cloud service
 * providers, matching the example model bundled with the backend. The
 * template ships without judgments: the builder seeds the structure and
 * the wizard collects the pairwise comparisons.
 */

import type { CriterionWire, ModelDocumentWire } from "./types.js";

export const DEFAULT_SETTINGS = {
    method: "eigenvector" as const,
    tolerance: 1e-12,
    max_iterations: 10000,
    cr_threshold: 0.1,
};

function node(id: string, name: string, children: CriterionWire[] = []): CriterionWire {
    return { id, name, children };
}

/** Fresh copy of the template document; callers may mutate it freely. */
export function templateDocument(): ModelDocumentWire {
    return {
        version: 1,
        goal: "Select a cloud service provider",
        criteria: [
            node("functionality", "Functionality", [
                node("automation", "Automation"),
                node("error_handling", "Error Handling"),
                node("fault_tolerance", "Fault Tolerance"),
                node("performance_quality", "Performance Quality"),
                node("unit_testing", "Unit Testing"),
            ]),
            node("governance", "Governance", [
                node("data_encryption", "Data Encryption"),
                node("monitoring", "Monitoring"),
                node("security", "Security"),
                node("role_based_access", "Role Based Access"),
            ]),
            node("accessibility", "Accessibility", [
                node("availability", "Availability"),
                node("ease_of_use", "Ease of Use"),
                node("integration", "Integration"),
                node("interoperability", "Interoperability"),
            ]),
        ],
        alternatives: [
            { id: "csp1", name: "CSP1" },
            { id: "csp2", name: "CSP2" },
            { id: "csp3", name: "CSP3" },
        ],
        judgments: {},
        settings: { ...DEFAULT_SETTINGS },
    };
}

/** All comparison sets of a document, root first, then top-down. */
export interface ComparisonSetInfo {
    nodeId: string;
    /** Display names of the compared members, in index order. */
    memberNames: string[];
    /** Ids of the compared members (criterion ids or alternative ids). */
    memberIds: string[];
    /** True when the members are the alternatives (leaf-level set). */
    alternatives: boolean;
}

/**
 * Enumerate the document's comparison sets the same way the backend does:
 * the goal node compares the root criteria, every inner criterion compares
 * its children, and every leaf criterion compares the alternatives.
 */
export function comparisonSets(doc: ModelDocumentWire): ComparisonSetInfo[] {
    const sets: ComparisonSetInfo[] = [{
        nodeId: "goal",
        memberNames: doc.criteria.map((c) => c.name),
        memberIds: doc.criteria.map((c) => c.id),
        alternatives: false,
    }];
    const walk = (nodes: CriterionWire[]) => {
        for (const criterion of nodes) {
            if (criterion.children.length > 0) {
                sets.push({
                    nodeId: criterion.id,
                    memberNames: criterion.children.map((c) => c.name),
                    memberIds: criterion.children.map((c) => c.id),
                    alternatives: false,
                });
                walk(criterion.children);
            } else {
                sets.push({
                    nodeId: criterion.id,
                    memberNames: doc.alternatives.map((a) => a.name),
                    memberIds: doc.alternatives.map((a) => a.id),
                    alternatives: true,
                });
            }
        }
    };
    walk(doc.criteria);
    return sets;
}
