"""Decision hierarchy, judgment scale, and reciprocal judgment storage.

The hierarchy is a goal with a tree of criteria underneath and a flat list of
alternatives. Pairwise judgments are stored as upper-triangle pair lists only,
so reciprocity can never be violated by persisted state; full matrices are
built on demand.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from ahpkit.errors import ValidationError

# Reserved id for the goal node: judgments over the root criteria are keyed
# under this id, so no criterion or alternative may use it.
GOAL_ID = "goal"

# The 17 admissible judgment intensities: 1/9 .. 1/2, 1 .. 9, ascending.
CANONICAL_VALUES: tuple[Fraction, ...] = tuple(
    [Fraction(1, k) for k in range(9, 1, -1)] + [Fraction(k) for k in range(1, 10)]
)

SCALE_TABLE: dict[str, Fraction] = {
    "equal importance": Fraction(1),
    "intermediate between equal and moderate": Fraction(2),
    "moderate importance": Fraction(3),
    "intermediate between moderate and strong": Fraction(4),
    "strong importance": Fraction(5),
    "intermediate between strong and very strong": Fraction(6),
    "very strong importance": Fraction(7),
    "intermediate between very strong and extreme": Fraction(8),
    "extreme importance": Fraction(9),
}

MIN_VALUE = Fraction(1, 9)
MAX_VALUE = Fraction(9)


def canonical_value(raw) -> Fraction:
    """Coerce ``raw`` to one of the 17 canonical intensities.

    Accepts ints, Fractions, rational strings ("3", "1/5"), and floats/decimal
    strings; a float is matched to a canonical value only when within 1e-9 of
    it, anything else (2.5, 0.33, 12, ...) is rejected.
    """
    if isinstance(raw, bool):
        raise ValidationError(f"judgment value must be numeric, got {raw!r}")
    if isinstance(raw, (int, Fraction)):
        candidate = Fraction(raw)
        if candidate in CANONICAL_VALUES:
            return candidate
        raise ValidationError(
            f"{raw} is not an admissible judgment value (1..9 or a reciprocal)"
        )
    if isinstance(raw, str):
        try:
            candidate = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse judgment value {raw!r}") from exc
        if candidate in CANONICAL_VALUES:
            return candidate
        raw = float(candidate)  # fall through to the float tolerance path
    if isinstance(raw, float):
        for canon in CANONICAL_VALUES:
            if abs(raw - float(canon)) <= 1e-9:
                return canon
        raise ValidationError(
            f"{raw} is not within 1e-9 of an admissible judgment value "
            "(1..9 or a reciprocal)"
        )
    raise ValidationError(f"judgment value must be numeric, got {raw!r}")


@dataclass(frozen=True)
class SaatyJudgment:
    """One pairwise intensity on the 1-9 scale or its reciprocal.

    The linguistic label is display-only and ignored by equality.
    """

    value: Fraction
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.value not in CANONICAL_VALUES:
            raise ValidationError(
                f"{self.value} is not an admissible judgment value"
            )

    @classmethod
    def of(cls, raw, label: Optional[str] = None) -> "SaatyJudgment":
        return cls(canonical_value(raw), label)

    @property
    def reciprocal(self) -> "SaatyJudgment":
        return SaatyJudgment(1 / self.value, self.label)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return str(self.value)


def scale_lookup(label: str, inverted: bool = False) -> SaatyJudgment:
    """Map a linguistic importance label to its judgment intensity.

    ``inverted`` returns the reciprocal, for when the second member of the
    pair is the more important one.
    """
    key = label.strip().lower()
    if key not in SCALE_TABLE:
        known = ", ".join(repr(name) for name in SCALE_TABLE)
        raise ValidationError(f"unknown importance label {label!r}; expected one of: {known}")
    value = SCALE_TABLE[key]
    if inverted:
        value = 1 / value
    return SaatyJudgment(value, label=key)


@dataclass(frozen=True)
class Alternative:
    id: str
    name: str


@dataclass(frozen=True)
class CriterionNode:
    """A criterion or sub-criterion; an empty child list marks a leaf."""

    id: str
    name: str
    children: tuple["CriterionNode", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class ComparisonSet:
    """One sibling set to be compared pairwise: the children of ``node_id``,
    or the alternatives when ``node_id`` is a leaf criterion."""

    node_id: str
    kind: str  # "criteria" | "alternatives"
    member_ids: tuple[str, ...]
    member_names: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.member_ids)


@dataclass(frozen=True)
class DecisionHierarchy:
    goal: str
    root_criteria: tuple[CriterionNode, ...]
    alternatives: tuple[Alternative, ...]

    def __post_init__(self):
        object.__setattr__(self, "root_criteria", tuple(self.root_criteria))
        object.__setattr__(self, "alternatives", tuple(self.alternatives))

    def all_nodes(self) -> Iterator[CriterionNode]:
        """Pre-order traversal of the criterion tree."""
        stack = list(reversed(self.root_criteria))
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def node(self, node_id: str) -> CriterionNode:
        for node in self.all_nodes():
            if node.id == node_id:
                return node
        raise ValidationError(f"unknown criterion node {node_id!r}")

    def has_node(self, node_id: str) -> bool:
        return any(node.id == node_id for node in self.all_nodes())

    def leaves(self) -> tuple[CriterionNode, ...]:
        return tuple(node for node in self.all_nodes() if node.is_leaf)

    def parent_id(self, node_id: str) -> str:
        """Id of the node whose sibling set contains ``node_id`` (GOAL_ID for
        root criteria)."""
        if any(node.id == node_id for node in self.root_criteria):
            return GOAL_ID
        for node in self.all_nodes():
            if any(child.id == node_id for child in node.children):
                return node.id
        raise ValidationError(f"unknown criterion node {node_id!r}")

    def comparison_sets(self) -> tuple[ComparisonSet, ...]:
        """Every sibling set needing judgments, in canonical order: the goal's
        criteria first, then each node's children / each leaf's alternatives
        in pre-order."""
        sets = [
            ComparisonSet(
                GOAL_ID,
                "criteria",
                tuple(c.id for c in self.root_criteria),
                tuple(c.name for c in self.root_criteria),
            )
        ]
        alt_ids = tuple(a.id for a in self.alternatives)
        alt_names = tuple(a.name for a in self.alternatives)
        for node in self.all_nodes():
            if node.is_leaf:
                sets.append(ComparisonSet(node.id, "alternatives", alt_ids, alt_names))
            else:
                sets.append(
                    ComparisonSet(
                        node.id,
                        "criteria",
                        tuple(c.id for c in node.children),
                        tuple(c.name for c in node.children),
                    )
                )
        return tuple(sets)

    def comparison_size(self, node_id: str) -> int:
        for cs in self.comparison_sets():
            if cs.node_id == node_id:
                return cs.size
        raise ValidationError(f"no comparison set for node {node_id!r}")


@dataclass(frozen=True)
class Defect:
    """One structural problem found in a hierarchy."""

    code: str
    subject: str
    message: str


def validate_hierarchy(h: DecisionHierarchy) -> list[Defect]:
    """Check structural well-formedness; returns defects instead of raising.

    The defect list is deterministic: nodes are visited in pre-order and
    defects appended in discovery order.
    """
    defects: list[Defect] = []
    seen: dict[str, str] = {}

    def register(kind: str, ident: str):
        if not ident:
            defects.append(Defect("empty-id", ident, f"{kind} has an empty id"))
            return
        if ident == GOAL_ID:
            defects.append(
                Defect("reserved-id", ident, f"{kind} uses the reserved id {GOAL_ID!r}")
            )
        if ident in seen:
            defects.append(
                Defect(
                    "duplicate-id",
                    ident,
                    f"id {ident!r} is used by both {seen[ident]} and {kind}",
                )
            )
        else:
            seen[ident] = kind

    def walk(node: CriterionNode, ancestors: tuple[int, ...]):
        if id(node) in ancestors:
            defects.append(
                Defect("cycle", node.id, f"node {node.id!r} is its own ancestor")
            )
            return
        register("criterion", node.id)
        for child in node.children:
            walk(child, ancestors + (id(node),))

    for root in h.root_criteria:
        walk(root, ())
    for alt in h.alternatives:
        register("alternative", alt.id)

    if not h.root_criteria:
        defects.append(
            Defect("no-leaves", GOAL_ID, "hierarchy has no criteria, so no leaf to score against")
        )
    if len(h.alternatives) < 2:
        defects.append(
            Defect(
                "too-few-alternatives",
                GOAL_ID,
                f"need at least 2 alternatives, got {len(h.alternatives)}",
            )
        )
    return defects


@dataclass(frozen=True)
class PairJudgment:
    """Judgment for the unordered pair (i, j), i < j, of one sibling set."""

    i: int
    j: int
    value: SaatyJudgment


@dataclass(frozen=True)
class JudgmentSet:
    """Upper-triangle judgments over the comparison set of ``node_id``.

    Entries are canonicalized to (i, j) order at construction, so two sets
    with the same judgments compare equal regardless of input order.
    """

    node_id: str
    entries: tuple[PairJudgment, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.entries, key=lambda e: (e.i, e.j)))
        object.__setattr__(self, "entries", ordered)
        seen = set()
        for entry in ordered:
            if entry.i < 0 or entry.j < 0:
                raise ValidationError(
                    f"negative index in pair ({entry.i}, {entry.j}) for node {self.node_id!r}"
                )
            if entry.i >= entry.j:
                raise ValidationError(
                    f"pair ({entry.i}, {entry.j}) for node {self.node_id!r} must have i < j"
                )
            if (entry.i, entry.j) in seen:
                raise ValidationError(
                    f"duplicate judgment for pair ({entry.i}, {entry.j}) of node {self.node_id!r}"
                )
            seen.add((entry.i, entry.j))

    @classmethod
    def of(cls, node_id: str, pairs) -> "JudgmentSet":
        """Build from an iterable of (i, j, value) with value in any accepted form."""
        return cls(
            node_id,
            tuple(PairJudgment(i, j, SaatyJudgment.of(v)) for i, j, v in pairs),
        )

    def pair_values(self) -> dict[tuple[int, int], Fraction]:
        return {(e.i, e.j): e.value.value for e in self.entries}

    def missing_pairs(self, n: int) -> list[tuple[int, int]]:
        have = {(e.i, e.j) for e in self.entries}
        return [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in have]

    def is_complete(self, n: int) -> bool:
        return not self.missing_pairs(n)


@dataclass(frozen=True)
class JudgmentMatrix:
    """Positive reciprocal pairwise-comparison matrix.

    Entries are floats: unit diagonal, reciprocity within 1e-12, all entries
    inside [1/9, 9]. Unlike judgment sets, entries are not required to be
    canonical scale values, so ratio matrices w_i/w_j are representable.
    """

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(float(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n < 1:
            raise ValidationError("judgment matrix must have dimension >= 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValidationError(f"row {i} has length {len(row)}, expected {n}")
        lo = float(MIN_VALUE) - 1e-12
        hi = float(MAX_VALUE) + 1e-12
        for i, row in enumerate(rows):
            if row[i] != 1.0:
                raise ValidationError(f"diagonal entry ({i},{i}) must be 1, got {row[i]}")
            for j, value in enumerate(row):
                if not (lo <= value <= hi):
                    raise ValidationError(
                        f"entry ({i},{j}) = {value} outside the admissible range [1/9, 9]"
                    )
                if abs(rows[i][j] * rows[j][i] - 1.0) > 1e-12:
                    raise ValidationError(
                        f"reciprocity violated at ({i},{j}): "
                        f"{rows[i][j]} * {rows[j][i]} != 1"
                    )

    @classmethod
    def from_rows(cls, rows) -> "JudgmentMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)


def build_matrix(judgments: JudgmentSet, n: int) -> JudgmentMatrix:
    """Expand a complete upper-triangle judgment set into a full matrix.

    The lower triangle is filled with exact reciprocals of the stored
    fractions, so reciprocity holds by construction.
    """
    for entry in judgments.entries:
        if entry.j >= n:
            raise ValidationError(
                f"pair ({entry.i}, {entry.j}) of node {judgments.node_id!r} "
                f"out of range for dimension {n}"
            )
    missing = judgments.missing_pairs(n)
    if missing:
        raise ValidationError(
            f"judgment set for node {judgments.node_id!r} is incomplete: "
            f"missing pair {missing[0]}"
            + (f" and {len(missing) - 1} more" if len(missing) > 1 else "")
        )
    rows = [[1.0] * n for _ in range(n)]
    for (i, j), value in judgments.pair_values().items():
        rows[i][j] = float(value)
        rows[j][i] = float(1 / value)
    return JudgmentMatrix.from_rows(rows)
