"""End-to-end evaluation of a model document: derive every local priority
vector, check consistency per comparison set, and synthesize global results.
"""

from dataclasses import dataclass

from ahpkit.consistency import ConsistencyReport, check_consistency
from ahpkit.errors import ValidationError
from ahpkit.model import JudgmentMatrix, JudgmentSet, build_matrix
from ahpkit.priority import PriorityVector, derive
from ahpkit.store import ModelDocument
from ahpkit.synthesis import (
    SensitivityQuery,
    SensitivityResult,
    SynthesisResult,
    WeightedModel,
    score_alternatives,
    sensitivity_scan,
)


@dataclass(frozen=True)
class Evaluation:
    """Everything computed from a complete document in one pass."""

    document: ModelDocument
    matrices: dict[str, JudgmentMatrix]
    local: dict[str, PriorityVector]
    reports: dict[str, ConsistencyReport]
    weighted: WeightedModel
    synthesis: SynthesisResult

    def inconsistent_nodes(self) -> list[str]:
        return [node_id for node_id, report in self.reports.items() if not report.consistent]

    @property
    def consistent(self) -> bool:
        return not self.inconsistent_nodes()


def _stored_judgments(doc: ModelDocument, node_id: str) -> JudgmentSet:
    """The node's judgment set, or an empty one; single-member sets need no
    judgments at all, so absence is not an error there."""
    judgment_set = doc.judgments.get(node_id)
    return judgment_set if judgment_set is not None else JudgmentSet(node_id, ())


def node_matrix(doc: ModelDocument, node_id: str) -> JudgmentMatrix:
    """Reconstruct the full pairwise matrix for one comparison set."""
    sizes = {cs.node_id: cs.size for cs in doc.hierarchy.comparison_sets()}
    if node_id not in sizes:
        raise ValidationError(f"no comparison set for node {node_id!r}")
    judgment_set = doc.judgments.get(node_id)
    if judgment_set is None and sizes[node_id] > 1:
        raise ValidationError(f"no judgments recorded for node {node_id!r}")
    return build_matrix(_stored_judgments(doc, node_id), sizes[node_id])


def evaluate(doc: ModelDocument) -> Evaluation:
    """Evaluate a complete document.

    Raises ValidationError naming the first unjudged comparison set if any
    pairs are missing. Inconsistency does not raise; each node's report says
    whether it cleared the threshold.
    """
    incomplete = doc.incomplete_nodes()
    if incomplete:
        node_id, missing = incomplete[0]
        raise ValidationError(
            f"comparison set {node_id!r} is missing {len(missing)} judgment(s), "
            f"first missing pair {missing[0]}"
        )
    matrices: dict[str, JudgmentMatrix] = {}
    local: dict[str, PriorityVector] = {}
    reports: dict[str, ConsistencyReport] = {}
    for cs in doc.hierarchy.comparison_sets():
        matrix = build_matrix(_stored_judgments(doc, cs.node_id), cs.size)
        vector, _ = derive(matrix, doc.settings)
        matrices[cs.node_id] = matrix
        local[cs.node_id] = vector
        reports[cs.node_id] = check_consistency(matrix, doc.settings, doc.cr_threshold)
    weighted = WeightedModel(doc.hierarchy, local, doc.settings)
    synthesis = score_alternatives(weighted)
    return Evaluation(doc, matrices, local, reports, weighted, synthesis)


def partial_reports(doc: ModelDocument) -> dict[str, ConsistencyReport]:
    """Consistency reports for every comparison set that is already fully
    judged; incomplete sets are simply absent. Works on partial documents."""
    reports: dict[str, ConsistencyReport] = {}
    for cs in doc.hierarchy.comparison_sets():
        judgment_set = _stored_judgments(doc, cs.node_id)
        if judgment_set.is_complete(cs.size):
            matrix = build_matrix(judgment_set, cs.size)
            reports[cs.node_id] = check_consistency(matrix, doc.settings, doc.cr_threshold)
    return reports


def sweep_from_current(ev: Evaluation, node_id: str, steps: int) -> SensitivityResult:
    """Sweep node_id's local weight across a grid that includes its current
    derived value, so the baseline ranking appears among the points."""
    hierarchy = ev.document.hierarchy
    parent = hierarchy.parent_id(node_id)
    cs = next(c for c in hierarchy.comparison_sets() if c.node_id == parent)
    if cs.size < 2:
        raise ValidationError(
            f"node {node_id!r} has no siblings; its weight is pinned at 1"
        )
    current = ev.local[parent][cs.member_ids.index(node_id)]
    return sensitivity_scan(ev.weighted, SensitivityQuery(node_id, current), steps)
