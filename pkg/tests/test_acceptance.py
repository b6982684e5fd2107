"""Acceptance gate: one test per headline behavior of the decision engine.

Each test here states a contract a release must honor, at an explicit
tolerance, and prints as a single pass/fail line under pytest -v. Everything
runs against the library and CLI alone; no web UI is required.
"""

import dataclasses
import json

import jsonschema
import numpy as np
import pytest
from click.testing import CliRunner

from ahpkit.cli import main as cli_main
from ahpkit.consistency import RANDOM_INDEX, check_consistency, estimate_random_index
from ahpkit.engine import evaluate, sweep_from_current
from ahpkit.fixtures import (
    cloud_platform_document,
    cloud_platform_hierarchy,
    crossover_document,
)
from ahpkit.model import CANONICAL_VALUES, JudgmentMatrix, JudgmentSet, build_matrix
from ahpkit.priority import PriorityVector, derive_eigenvector, derive_geometric_mean
from ahpkit.store import load_model, save_model, write_model
from ahpkit.synthesis import WeightedModel, global_weights, score_alternatives

from helpers import (
    consistent_matrix,
    random_document,
    random_hierarchy,
    random_judgment_set,
    random_local,
    random_matrix,
    random_weights,
)

# Published global sub-criteria weights for the bundled cloud-provider study,
# keyed by leaf id, grouped under parents Functionality 0.55, Governance 0.13,
# Accessibility 0.31 (column sums).
PUBLISHED_GLOBALS = {
    "automation": 0.14,
    "error_handling": 0.07,
    "fault_tolerance": 0.02,
    "performance_quality": 0.04,
    "unit_testing": 0.28,
    "data_encryption": 0.02,
    "monitoring": 0.07,
    "security": 0.01,
    "role_based_access": 0.03,
    "availability": 0.02,
    "ease_of_use": 0.17,
    "integration": 0.04,
    "interoperability": 0.08,
}
PUBLISHED_PARENTS = {"functionality": 0.55, "governance": 0.13, "accessibility": 0.31}
PUBLISHED_SCORES = {"csp1": 0.28, "csp2": 0.19, "csp3": 0.53}


def published_local_weights():
    """Locals back-derived from the published table: goal weights are the
    normalized column sums, each child's local weight is global/parent."""
    h = cloud_platform_hierarchy()
    parent_total = sum(PUBLISHED_PARENTS.values())  # 0.99 as published
    local = {
        "goal": PriorityVector(tuple(
            PUBLISHED_PARENTS[c.id] / parent_total for c in h.root_criteria)),
    }
    for root in h.root_criteria:
        local[root.id] = PriorityVector(tuple(
            PUBLISHED_GLOBALS[child.id] / PUBLISHED_PARENTS[root.id]
            for child in root.children))
    return h, local


def test_published_global_weight_table_reproduced():
    """Back-derived locals reproduce all 13 published global weights within
    0.005 each, and the full-precision globals sum to 1 within 1e-9 even
    though the rounded published figures only sum to 0.99."""
    h, local = published_local_weights()
    computed = global_weights(WeightedModel(h, local))
    assert set(computed) == set(PUBLISHED_GLOBALS)
    for leaf_id, published in PUBLISHED_GLOBALS.items():
        assert computed[leaf_id] == pytest.approx(published, abs=0.005), leaf_id
    assert sum(computed.values()) == pytest.approx(1.0, abs=1e-9)


def test_published_alternative_ranking_reproduced():
    """Per-leaf alternative vectors fixed at the published scores make the
    ranking CSP3 > CSP1 > CSP2 with CSP3 alone on top, scores within 0.005
    and summing to 1 within 1e-9."""
    h, local = published_local_weights()
    for leaf in h.leaves():
        local[leaf.id] = PriorityVector(
            (PUBLISHED_SCORES["csp1"], PUBLISHED_SCORES["csp2"], PUBLISHED_SCORES["csp3"]))
    result = score_alternatives(WeightedModel(h, local))
    for alt, published in PUBLISHED_SCORES.items():
        assert result.alternative_scores[alt] == pytest.approx(published, abs=0.005), alt
    assert result.ranking == ("csp3", "csp1", "csp2")
    assert all(result.ranking[0] not in group for group in result.ties)  # sole winner
    assert sum(result.alternative_scores.values()) == pytest.approx(1.0, abs=1e-9)


def test_consistent_matrix_oracle():
    """1000 ratio matrices built from known weights: weights recovered within
    1e-6, lambda_max = n within 1e-8, cr = 0 within 1e-8, and the two
    derivation methods agree within 1e-8."""
    rng = np.random.default_rng(101)
    for _ in range(1000):
        n = int(rng.integers(3, 10))
        target = random_weights(rng, n)
        m = consistent_matrix(target)
        w, lam = derive_eigenvector(m)
        assert np.max(np.abs(w.as_array() - target)) <= 1e-6
        assert abs(lam - n) <= 1e-8
        assert abs(check_consistency(m).cr) <= 1e-8
        gm = derive_geometric_mean(m)
        assert np.max(np.abs(w.as_array() - gm.as_array())) <= 1e-8


def test_random_index_estimates_match_table():
    """Monte-Carlo random-index estimates at 100 000 samples stay within
    0.05 of the published table constants for every n in 3..9."""
    failures = []
    for n in range(3, 10):
        estimate = estimate_random_index(n, 100_000, 20240817)
        if abs(estimate - RANDOM_INDEX[n]) > 0.05:
            failures.append(
                f"n={n}: estimate {estimate:.4f} vs table {RANDOM_INDEX[n]:.2f} "
                f"(off by {abs(estimate - RANDOM_INDEX[n]):.4f})")
    assert not failures, "; ".join(failures)


def test_known_inconsistent_case():
    """The classic slightly-inconsistent 3x3 matrix gives the documented
    weights and cr, and clears the 0.10 threshold."""
    m = JudgmentMatrix.from_rows([[1, 2, 5], [1 / 2, 1, 3], [1 / 5, 1 / 3, 1]])
    w, _ = derive_eigenvector(m)
    assert np.allclose(tuple(w.weights), (0.582, 0.309, 0.109), atol=5e-4)
    report = check_consistency(m)
    assert report.cr == pytest.approx(0.003, abs=5e-4)
    assert report.consistent


def test_property_suites():
    """Seven structural properties, each over at least 1000 random cases:
    permutation equivariance, reciprocity by construction, global-weight and
    score normalization, dominance preservation, geometric-mean monotonicity,
    and persistence round-trip."""
    rng = np.random.default_rng(202)

    for _ in range(1000):  # permutation equivariance
        n = int(rng.integers(3, 6))
        m = random_matrix(rng, n)
        perm = rng.permutation(n)
        a = m.as_array()
        permuted = JudgmentMatrix.from_rows(a[np.ix_(perm, perm)])
        w, _ = derive_eigenvector(m)
        wp, _ = derive_eigenvector(permuted)
        assert np.max(np.abs(wp.as_array() - w.as_array()[perm])) <= 1e-8

    for _ in range(1000):  # reciprocity by construction
        n = int(rng.integers(2, 7))
        a = build_matrix(random_judgment_set(rng, "n", n), n).as_array()
        assert np.max(np.abs(a * a.T - 1.0)) <= 1e-12

    for _ in range(1000):  # global-weight and score normalization
        h = random_hierarchy(rng)
        wm = WeightedModel(h, random_local(rng, h))
        assert abs(sum(global_weights(wm).values()) - 1.0) <= 1e-9
        assert abs(sum(score_alternatives(wm).alternative_scores.values()) - 1.0) <= 1e-9

    for _ in range(1000):  # dominance preservation
        h = random_hierarchy(rng)
        local = random_local(rng, h)
        for leaf in h.leaves():
            w = np.array(local[leaf.id].weights)
            lo, hi = sorted((w[0], w[1]))
            w[0], w[1] = hi, lo
            local[leaf.id] = PriorityVector(tuple(w))
        scores = score_alternatives(WeightedModel(h, local)).alternative_scores
        first, second = (a.id for a in h.alternatives[:2])
        assert scores[first] >= scores[second] - 1e-12

    for _ in range(1000):  # geometric-mean monotonicity
        n = int(rng.integers(3, 6))
        js = random_judgment_set(rng, "n", n)
        entry = js.entries[int(rng.integers(0, len(js.entries)))]
        if entry.value.value >= 9:
            continue
        # raise the chosen judgment one canonical notch and compare ratios
        idx = CANONICAL_VALUES.index(entry.value.value)
        raised = CANONICAL_VALUES[idx + 1]
        pairs = [(e.i, e.j, raised if e is entry else e.value.value) for e in js.entries]
        before = derive_geometric_mean(build_matrix(js, n))
        after = derive_geometric_mean(build_matrix(JudgmentSet.of("n", pairs), n))
        assert after[entry.i] / after[entry.j] > before[entry.i] / before[entry.j]

    rng2 = np.random.default_rng(203)
    for _ in range(1000):  # persistence round-trip
        doc = random_document(rng2)
        data = save_model(doc)
        again = load_model(data)
        assert again == doc
        assert save_model(again) == data


def test_sensitivity_crossover():
    """The two-criterion crossover model reverses its top alternative at
    weight 0.5 within 1/steps for steps = 1000."""
    ev = evaluate(crossover_document())
    sweep = sweep_from_current(ev, "cost", 1000)
    assert len(sweep.reversals) >= 1
    assert abs(sweep.reversals[0] - 0.5) <= 1 / 1000


WEIGHTS_SCHEMA = {
    "type": "object",
    "required": ["local", "reports", "global", "consistent"],
    "properties": {
        "local": {"type": "object",
                  "additionalProperties": {"type": "object",
                                           "additionalProperties": {"type": "number"}}},
        "reports": {"type": "object", "additionalProperties": {
            "type": "object",
            "required": ["n", "lambda_max", "ci", "ri", "cr", "threshold", "consistent"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "lambda_max": {"type": "number"},
                "ci": {"type": "number"},
                "ri": {"type": "number"},
                "cr": {"type": "number"},
                "threshold": {"type": "number"},
                "consistent": {"type": "boolean"},
                "worst_pair": {"type": ["object", "null"]},
            },
        }},
        "global": {"type": "array", "items": {
            "type": "object",
            "required": ["criterion", "sub_criterion", "leaf_id", "global_weight"],
            "properties": {"global_weight": {"type": "number"}},
        }},
        "consistent": {"type": "boolean"},
    },
}

RANK_SCHEMA = {
    "type": "object",
    "required": ["scores", "ranking", "ties", "most_suitable", "consistent"],
    "properties": {
        "scores": {"type": "object", "additionalProperties": {"type": "number"}},
        "ranking": {"type": "array", "items": {"type": "string"}},
        "ties": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "most_suitable": {"type": ["string", "null"]},
        "consistent": {"type": "boolean"},
    },
}

SENSITIVITY_SCHEMA = {
    "type": "object",
    "required": ["target_node", "points", "reversals"],
    "properties": {
        "target_node": {"type": "string"},
        "points": {"type": "array", "items": {
            "type": "object",
            "required": ["weight", "scores", "ranking"],
            "properties": {"weight": {"type": "number", "exclusiveMinimum": 0,
                                      "exclusiveMaximum": 1}},
        }},
        "reversals": {"type": "array", "items": {"type": "number"}},
    },
}

RI_SCHEMA = {
    "type": "object",
    "required": ["n", "samples", "seed", "estimate", "table", "difference"],
    "properties": {
        "n": {"type": "integer"},
        "samples": {"type": "integer"},
        "seed": {"type": "integer"},
        "estimate": {"type": "number"},
        "table": {"type": "number"},
        "difference": {"type": "number"},
    },
}


def test_cli_contract(tmp_path):
    """Across a corpus of model files, exit codes hold the documented meaning
    (0 success, 1 domain defect, 2 usage/parse error, 3 inconsistency) and
    every machine-readable output validates against its schema."""
    runner = CliRunner()
    good = "fixtures/cloud-platform.ahp.json"
    cross = "fixtures/crossover.ahp.json"

    base = cloud_platform_document()
    wild_judgments = dict(base.judgments)
    wild_judgments["goal"] = JudgmentSet.of(
        "goal", [(0, 1, 9), (0, 2, "1/9"), (1, 2, 9)])
    wild = tmp_path / "wild.ahp.json"
    write_model(dataclasses.replace(base, judgments=wild_judgments), wild)

    partial_judgments = dict(base.judgments)
    del partial_judgments["monitoring"]
    partial = tmp_path / "partial.ahp.json"
    write_model(dataclasses.replace(base, judgments=partial_judgments), partial)

    broken = tmp_path / "broken.ahp.json"
    broken.write_text("definitely { not json")

    expectations = [
        (["validate", good], 0),
        (["weights", good], 0),
        (["rank", good], 0),
        (["check", good], 0),
        (["export", good], 0),
        (["sensitivity", cross, "--node", "cost", "--steps", "1000"], 0),
        (["ri", "--n", "5", "--samples", "2000", "--seed", "3"], 0),
        (["validate", str(partial)], 1),
        (["rank", str(partial)], 1),
        (["sensitivity", cross, "--node", "missing"], 1),
        (["validate", str(broken)], 2),
        (["weights", str(broken)], 2),
        (["sensitivity", cross, "--node", "cost", "--steps", "1"], 2),
        (["ri", "--n", "11"], 2),
        (["frobnicate"], 2),
        (["weights", str(wild)], 3),
        (["check", str(wild)], 3),
        (["rank", str(wild)], 3),
    ]
    for args, expected in expectations:
        result = runner.invoke(cli_main, args)
        assert result.exit_code == expected, f"{args}: got {result.exit_code}, want {expected}"

    checks = [
        (["weights", good, "--format", "json"], WEIGHTS_SCHEMA),
        (["weights", str(wild), "--format", "json"], WEIGHTS_SCHEMA),
        (["rank", good, "--format", "json"], RANK_SCHEMA),
        (["sensitivity", cross, "--node", "cost", "--steps", "50",
          "--format", "json"], SENSITIVITY_SCHEMA),
        (["ri", "--n", "4", "--samples", "2000", "--seed", "9",
          "--format", "json"], RI_SCHEMA),
    ]
    for args, schema in checks:
        result = runner.invoke(cli_main, args)
        jsonschema.validate(json.loads(result.stdout), schema)
