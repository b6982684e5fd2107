"""Persistence and wire formats: .ahp.json model documents, CSV/JSON result
exports, and the JSON shapes shared by the CLI and the HTTP service.

Model files are deliberately git-friendly: stable key order, indented JSON,
and judgment values written as exact rational strings ("1/5", never 0.2),
so identical documents always serialize to identical bytes.
"""

import json
from dataclasses import dataclass, field
from typing import IO, Union

from ahpkit.consistency import DEFAULT_CR_THRESHOLD, ConsistencyReport
from ahpkit.errors import SchemaError, ValidationError
from ahpkit.model import (
    Alternative,
    CriterionNode,
    DecisionHierarchy,
    JudgmentSet,
    validate_hierarchy,
)
from ahpkit.priority import METHODS, DerivationSettings
from ahpkit.synthesis import SensitivityResult, SynthesisResult

CURRENT_VERSION = 1
MODEL_SUFFIX = ".ahp.json"


@dataclass(frozen=True)
class ModelDocument:
    """Everything needed to evaluate one decision: the hierarchy, the
    judgments gathered so far, and the derivation settings."""

    hierarchy: DecisionHierarchy
    judgments: dict[str, JudgmentSet] = field(default_factory=dict)
    settings: DerivationSettings = DerivationSettings()
    cr_threshold: float = DEFAULT_CR_THRESHOLD
    version: int = CURRENT_VERSION

    def incomplete_nodes(self) -> list[tuple[str, list[tuple[int, int]]]]:
        """(node_id, missing pairs) for every comparison set that is not yet
        fully judged, in canonical set order."""
        out = []
        for cs in self.hierarchy.comparison_sets():
            judgment_set = self.judgments.get(cs.node_id)
            if judgment_set is None:
                missing = [(i, j) for i in range(cs.size) for j in range(i + 1, cs.size)]
            else:
                missing = judgment_set.missing_pairs(cs.size)
            if missing:
                out.append((cs.node_id, missing))
        return out

    @property
    def complete(self) -> bool:
        return not self.incomplete_nodes()


def _require(condition: bool, message: str, path: str):
    if not condition:
        raise SchemaError(message, path=path)


def _parse_node(raw, path: str) -> CriterionNode:
    _require(isinstance(raw, dict), "criterion must be an object", path)
    _require(isinstance(raw.get("id"), str), "criterion id must be a string", path + ".id")
    _require(isinstance(raw.get("name"), str), "criterion name must be a string", path + ".name")
    children_raw = raw.get("children", [])
    _require(isinstance(children_raw, list), "children must be a list", path + ".children")
    children = tuple(
        _parse_node(child, f"{path}.children[{k}]") for k, child in enumerate(children_raw)
    )
    unknown = set(raw) - {"id", "name", "children"}
    _require(not unknown, f"unknown criterion fields {sorted(unknown)}", path)
    return CriterionNode(raw["id"], raw["name"], children)


def _parse_judgment_entries(node_id: str, raw, path: str) -> JudgmentSet:
    _require(isinstance(raw, list), "judgments for a node must be a list", path)
    triples = []
    for k, entry in enumerate(raw):
        entry_path = f"{path}[{k}]"
        _require(isinstance(entry, dict), "judgment entry must be an object", entry_path)
        _require(isinstance(entry.get("i"), int) and not isinstance(entry.get("i"), bool),
                 "judgment index i must be an integer", entry_path + ".i")
        _require(isinstance(entry.get("j"), int) and not isinstance(entry.get("j"), bool),
                 "judgment index j must be an integer", entry_path + ".j")
        _require("value" in entry, "judgment entry needs a value", entry_path + ".value")
        unknown = set(entry) - {"i", "j", "value"}
        _require(not unknown, f"unknown judgment fields {sorted(unknown)}", entry_path)
        triples.append((entry["i"], entry["j"], entry["value"]))
    try:
        return JudgmentSet.of(node_id, triples)
    except ValidationError as exc:
        raise SchemaError(str(exc), path=path) from exc


def load_model(source: Union[bytes, str, IO]) -> ModelDocument:
    """Parse and fully validate a model document.

    Raises SchemaError with line/column for syntax errors and with a field
    path for schema violations; hierarchy defects raise ValidationError with
    the full defect list attached.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        raw = json.loads(source)
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"not valid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}",
            line=exc.lineno,
            column=exc.colno,
        ) from exc

    _require(isinstance(raw, dict), "document must be a JSON object", "$")
    version = raw.get("version")
    _require(isinstance(version, int) and not isinstance(version, bool),
             "version must be an integer", "version")
    if version != CURRENT_VERSION:
        raise SchemaError(
            f"unknown document version {version}; this build reads version {CURRENT_VERSION}",
            path="version",
        )
    _require(isinstance(raw.get("goal"), str), "goal must be a string", "goal")
    _require(isinstance(raw.get("criteria"), list), "criteria must be a list", "criteria")
    _require(isinstance(raw.get("alternatives"), list), "alternatives must be a list", "alternatives")

    criteria = tuple(
        _parse_node(node, f"criteria[{k}]") for k, node in enumerate(raw["criteria"])
    )
    alternatives = []
    for k, alt in enumerate(raw["alternatives"]):
        path = f"alternatives[{k}]"
        _require(isinstance(alt, dict), "alternative must be an object", path)
        _require(isinstance(alt.get("id"), str), "alternative id must be a string", path + ".id")
        _require(isinstance(alt.get("name"), str), "alternative name must be a string", path + ".name")
        alternatives.append(Alternative(alt["id"], alt["name"]))

    hierarchy = DecisionHierarchy(raw["goal"], criteria, tuple(alternatives))
    defects = validate_hierarchy(hierarchy)
    if defects:
        listing = "; ".join(f"{d.code}({d.subject})" for d in defects)
        raise ValidationError(f"hierarchy is not well-formed: {listing}", defects=defects)

    sizes = {cs.node_id: cs.size for cs in hierarchy.comparison_sets()}
    judgments_raw = raw.get("judgments", {})
    _require(isinstance(judgments_raw, dict), "judgments must be an object", "judgments")
    judgments: dict[str, JudgmentSet] = {}
    for node_id, entries in judgments_raw.items():
        path = f"judgments.{node_id}"
        if node_id not in sizes:
            raise SchemaError(f"judgments refer to unknown node {node_id!r}", path=path)
        judgment_set = _parse_judgment_entries(node_id, entries, path)
        for entry in judgment_set.entries:
            if entry.j >= sizes[node_id]:
                raise SchemaError(
                    f"pair ({entry.i}, {entry.j}) out of range for node {node_id!r} "
                    f"of size {sizes[node_id]}",
                    path=path,
                )
        judgments[node_id] = judgment_set

    settings_raw = raw.get("settings", {})
    _require(isinstance(settings_raw, dict), "settings must be an object", "settings")
    unknown = set(settings_raw) - {"method", "tolerance", "max_iterations", "cr_threshold"}
    _require(not unknown, f"unknown settings fields {sorted(unknown)}", "settings")
    method = settings_raw.get("method", "eigenvector")
    _require(method in METHODS, f"method must be one of {METHODS}", "settings.method")
    tolerance = settings_raw.get("tolerance", 1e-12)
    max_iterations = settings_raw.get("max_iterations", 10_000)
    cr_threshold = settings_raw.get("cr_threshold", DEFAULT_CR_THRESHOLD)
    _require(isinstance(tolerance, (int, float)) and tolerance > 0,
             "tolerance must be a positive number", "settings.tolerance")
    _require(isinstance(max_iterations, int) and max_iterations >= 1,
             "max_iterations must be an integer >= 1", "settings.max_iterations")
    _require(isinstance(cr_threshold, (int, float)) and cr_threshold > 0,
             "cr_threshold must be a positive number", "settings.cr_threshold")

    unknown = set(raw) - {"version", "goal", "criteria", "alternatives", "judgments", "settings"}
    _require(not unknown, f"unknown document fields {sorted(unknown)}", "$")

    return ModelDocument(
        hierarchy=hierarchy,
        judgments=judgments,
        settings=DerivationSettings(method, float(tolerance), max_iterations),
        cr_threshold=float(cr_threshold),
        version=version,
    )


def _node_dict(node: CriterionNode) -> dict:
    out = {"id": node.id, "name": node.name}
    if node.children:
        out["children"] = [_node_dict(child) for child in node.children]
    else:
        out["children"] = []
    return out


def save_model(doc: ModelDocument) -> bytes:
    """Serialize deterministically: identical documents give identical bytes.

    Judgment sets are written in canonical comparison-set order with entries
    sorted by pair, values as exact rational strings.
    """
    judgments = {}
    for cs in doc.hierarchy.comparison_sets():
        judgment_set = doc.judgments.get(cs.node_id)
        if judgment_set is None:
            continue
        judgments[cs.node_id] = [
            {"i": e.i, "j": e.j, "value": str(e.value.value)} for e in judgment_set.entries
        ]
    payload = {
        "version": doc.version,
        "goal": doc.hierarchy.goal,
        "criteria": [_node_dict(node) for node in doc.hierarchy.root_criteria],
        "alternatives": [{"id": a.id, "name": a.name} for a in doc.hierarchy.alternatives],
        "judgments": judgments,
        "settings": {
            "method": doc.settings.method,
            "tolerance": doc.settings.tolerance,
            "max_iterations": doc.settings.max_iterations,
            "cr_threshold": doc.cr_threshold,
        },
    }
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def read_model(path) -> ModelDocument:
    with open(path, "rb") as handle:
        return load_model(handle.read())


def write_model(doc: ModelDocument, path):
    with open(path, "wb") as handle:
        handle.write(save_model(doc))


# --- result exports -----------------------------------------------------

def _leaf_rows(result: SynthesisResult, hierarchy: DecisionHierarchy) -> list[dict]:
    top_of: dict[str, str] = {}

    def mark(node, top_name):
        top_of[node.id] = top_name
        for child in node.children:
            mark(child, top_name)

    for root in hierarchy.root_criteria:
        mark(root, root.name)
    rows = []
    for leaf in hierarchy.leaves():
        rows.append(
            {
                "criterion": top_of[leaf.id],
                "sub_criterion": leaf.name,
                "leaf_id": leaf.id,
                "global_weight": result.global_leaf_weights[leaf.id],
            }
        )
    return rows


def _alternative_rows(result: SynthesisResult, hierarchy: DecisionHierarchy) -> list[dict]:
    names = {a.id: a.name for a in hierarchy.alternatives}
    return [
        {
            "id": alt_id,
            "name": names[alt_id],
            "score": result.alternative_scores[alt_id],
            "rank": position + 1,
        }
        for position, alt_id in enumerate(result.ranking)
    ]


def export_results(result: SynthesisResult, hierarchy: DecisionHierarchy, format: str = "csv") -> bytes:
    """Export global leaf weights and alternative scores.

    CSV holds both tables (blank-line separated) with full-precision numbers,
    comma separators, LF line endings, UTF-8 without BOM.
    """
    if format == "json":
        payload = {
            "global_weights": _leaf_rows(result, hierarchy),
            "alternatives": _alternative_rows(result, hierarchy),
            "ties": [list(group) for group in result.ties],
        }
        return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if format != "csv":
        raise ValidationError(f"unknown export format {format!r}; expected csv or json")
    lines = ["criterion,sub_criterion,global_weight"]
    for row in _leaf_rows(result, hierarchy):
        lines.append(f"{_csv_cell(row['criterion'])},{_csv_cell(row['sub_criterion'])},{row['global_weight']!r}")
    lines.append("")
    lines.append("alternative,score,rank")
    for row in _alternative_rows(result, hierarchy):
        lines.append(f"{_csv_cell(row['name'])},{row['score']!r},{row['rank']}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _csv_cell(text: str) -> str:
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


# --- wire shapes shared by cli and service ------------------------------

def report_to_dict(report: ConsistencyReport) -> dict:
    worst = None
    if report.worst_pair is not None:
        i, j, suggested = report.worst_pair
        worst = {"i": i, "j": j, "suggested_value": str(suggested.value)}
    return {
        "n": report.n,
        "lambda_max": report.lambda_max,
        "ci": report.ci,
        "ri": report.ri,
        "cr": report.cr,
        "threshold": report.threshold,
        "consistent": report.consistent,
        "worst_pair": worst,
    }


def result_to_dict(result: SynthesisResult, hierarchy: DecisionHierarchy) -> dict:
    return {
        "global_weights": _leaf_rows(result, hierarchy),
        "scores": result.alternative_scores,
        "ranking": list(result.ranking),
        "ties": [list(group) for group in result.ties],
    }


def sweep_to_dict(sweep: SensitivityResult) -> dict:
    return {
        "target_node": sweep.target_node,
        "points": [
            {"weight": p.weight, "scores": p.scores, "ranking": list(p.ranking)}
            for p in sweep.points
        ],
        "reversals": list(sweep.reversals),
    }
