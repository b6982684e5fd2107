"""Ready-made example models.

`cloud_platform_*` is the bundled walkthrough model: a three-branch criteria
tree for choosing between three cloud service providers, with a complete set
of judgments. `crossover_document` is a minimal two-criterion model whose
top alternative flips exactly at weight 0.5, handy for sensitivity demos.

Run `python -m ahpkit.fixtures OUTDIR` to write the bundled model files.
"""

import sys

from ahpkit.model import Alternative, CriterionNode, DecisionHierarchy, JudgmentSet
from ahpkit.store import ModelDocument, write_model


def cloud_platform_hierarchy() -> DecisionHierarchy:
    criteria = (
        CriterionNode(
            "functionality",
            "Functionality",
            (
                CriterionNode("automation", "Automation"),
                CriterionNode("error_handling", "Error Handling"),
                CriterionNode("fault_tolerance", "Fault Tolerance"),
                CriterionNode("performance_quality", "Performance Quality"),
                CriterionNode("unit_testing", "Unit Testing"),
            ),
        ),
        CriterionNode(
            "governance",
            "Governance",
            (
                CriterionNode("data_encryption", "Data Encryption"),
                CriterionNode("monitoring", "Monitoring"),
                CriterionNode("security", "Security"),
                CriterionNode("role_based_access", "Role Based Access"),
            ),
        ),
        CriterionNode(
            "accessibility",
            "Accessibility",
            (
                CriterionNode("availability", "Availability"),
                CriterionNode("ease_of_use", "Ease of Use"),
                CriterionNode("integration", "Integration"),
                CriterionNode("interoperability", "Interoperability"),
            ),
        ),
    )
    alternatives = (
        Alternative("csp1", "CSP1"),
        Alternative("csp2", "CSP2"),
        Alternative("csp3", "CSP3"),
    )
    return DecisionHierarchy("Select a cloud service provider", criteria, alternatives)


_CRITERIA_JUDGMENTS = {
    "goal": [(0, 1, 4), (0, 2, 2), (1, 2, "1/3")],
    "functionality": [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, "1/2"),
        (1, 2, 4), (1, 3, 1), (1, 4, "1/4"),
        (2, 3, "1/2"), (2, 4, "1/9"),
        (3, 4, "1/7"),
    ],
    "governance": [
        (0, 1, "1/4"), (0, 2, 3), (0, 3, "1/2"),
        (1, 2, 8), (1, 3, 2),
        (2, 3, "1/2"),
    ],
    "accessibility": [
        (0, 1, "1/9"), (0, 2, "1/2"), (0, 3, "1/4"),
        (1, 2, 4), (1, 3, 2),
        (2, 3, "1/2"),
    ],
}

_ALTERNATIVE_JUDGMENTS = [(0, 1, 2), (0, 2, "1/2"), (1, 2, "1/3")]


def cloud_platform_document() -> ModelDocument:
    hierarchy = cloud_platform_hierarchy()
    judgments = {
        node_id: JudgmentSet.of(node_id, pairs)
        for node_id, pairs in _CRITERIA_JUDGMENTS.items()
    }
    for leaf in hierarchy.leaves():
        judgments[leaf.id] = JudgmentSet.of(leaf.id, _ALTERNATIVE_JUDGMENTS)
    return ModelDocument(hierarchy=hierarchy, judgments=judgments)


def crossover_document() -> ModelDocument:
    hierarchy = DecisionHierarchy(
        "Pick a plan",
        (CriterionNode("cost", "Cost"), CriterionNode("reach", "Reach")),
        (Alternative("a1", "Plan A"), Alternative("a2", "Plan B")),
    )
    judgments = {
        "goal": JudgmentSet.of("goal", [(0, 1, 1)]),
        "cost": JudgmentSet.of("cost", [(0, 1, 4)]),
        "reach": JudgmentSet.of("reach", [(0, 1, "1/4")]),
    }
    return ModelDocument(hierarchy=hierarchy, judgments=judgments)


def main(argv=None) -> int:
    args = sys.argv[1:] if argv is None else argv
    if len(args) != 1:
        print("usage: python -m ahpkit.fixtures OUTDIR", file=sys.stderr)
        return 2
    outdir = args[0]
    write_model(cloud_platform_document(), f"{outdir}/cloud-platform.ahp.json")
    write_model(crossover_document(), f"{outdir}/crossover.ahp.json")
    return 0


if __name__ == "__main__":
    sys.exit(main())
