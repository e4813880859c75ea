"""Tree-property patterns and witness verification.

Each pattern names an index set plus two generated families: sets that a
witness must make consistent and sets it must make inconsistent. The exact
consistency family of a pattern is the subset closure of its maximal
forbidden-configuration-free sets; exhaustive verification checks the oracle
verdict against family membership on every nonempty index subset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Tuple

from .antichains import (DEFAULT_SUBSET_CAP, canonical_sets,
                         enumerate_antichains, maximal_antichains,
                         maximal_chain_free_binary, set_key)
from .errors import ResourceCapError
from .nodes import TreeDomain, is_prefix

ATP = "atp"
KATP = "katp"
SOP1 = "sop1"
SOP2 = "sop2"
TP = "tp"
TP2 = "tp2"

TREE_KINDS = (ATP, KATP, SOP1, SOP2, TP)


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    branching: int = 2
    depth: int = 0
    k: Optional[int] = None  # katp / tp arity of the inconsistency condition
    rows: int = 0  # tp2 only
    cols: int = 0

    def index_labels(self) -> Tuple:
        """Index set in canonical order: tree nodes lexicographically, or
        array cells row-major."""
        if self.kind == TP2:
            return tuple((i, j) for i in range(self.rows) for j in range(self.cols))
        return tuple(self.domain().nodes())

    def domain(self) -> TreeDomain:
        if self.kind == TP2:
            raise ValueError("tp2 is array-indexed")
        return TreeDomain(self.branching, self.depth)

    def to_json(self) -> dict:
        data = {"kind": self.kind}
        if self.kind == TP2:
            data.update(rows=self.rows, cols=self.cols)
        else:
            data.update(branching=self.branching, depth=self.depth)
        if self.k is not None:
            data["k"] = self.k
        return data

    @classmethod
    def from_json(cls, data: dict) -> "PatternSpec":
        return make_pattern(
            data["kind"],
            branching=data.get("branching", 2),
            depth=data.get("depth", 0),
            k=data.get("k"),
            rows=data.get("rows", 0),
            cols=data.get("cols", 0),
        )


def make_pattern(kind: str, branching: int = 2, depth: int = 0, k: int = None,
                 rows: int = 0, cols: int = 0) -> PatternSpec:
    kind = kind.lower()
    if kind == TP2:
        if rows < 1 or cols < 1:
            raise ValueError("tp2 needs rows >= 1 and cols >= 1")
        return PatternSpec(TP2, rows=rows, cols=cols)
    if kind not in TREE_KINDS:
        raise ValueError(f"unknown pattern kind {kind!r}")
    if depth < 1:
        raise ValueError(f"{kind} needs depth >= 1")
    if kind in (KATP, TP):
        if k is None or k < 2:
            raise ValueError(f"{kind} needs k >= 2")
    elif k is not None:
        raise ValueError(f"{kind} takes no k parameter")
    if kind in (ATP, KATP, SOP1, SOP2) and branching != 2:
        raise ValueError(f"{kind} is a binary-tree pattern")
    return PatternSpec(kind, branching=branching, depth=depth, k=k)


def _chains(domain: TreeDomain) -> List[FrozenSet]:
    """All nonempty chains: the nonempty subsets of root-to-node paths."""
    out = set()
    for node in domain.nodes():
        path = [node[:l] for l in range(len(node) + 1)]
        for r in range(1, len(path) + 1):
            for combo in itertools.combinations(path, r):
                out.add(frozenset(combo))
    return canonical_sets(out)


def required_consistent(p: PatternSpec) -> List[FrozenSet]:
    if p.kind in (ATP, KATP):
        return list(enumerate_antichains(p.domain()).items)
    if p.kind in (SOP1, SOP2, TP):
        return _chains(p.domain())
    if p.kind == TP2:
        out = []
        for r in range(1, p.rows + 1):
            for row_combo in itertools.combinations(range(p.rows), r):
                for cols in itertools.product(range(p.cols), repeat=r):
                    out.append(frozenset(zip(row_combo, cols)))
        return canonical_sets(out)
    raise ValueError(p.kind)


def required_inconsistent(p: PatternSpec) -> List[FrozenSet]:
    labels = p.index_labels()
    if p.kind == ATP:
        return canonical_sets(
            frozenset({a, b})
            for a, b in itertools.combinations(labels, 2)
            if is_prefix(a, b) or is_prefix(b, a)
        )
    if p.kind == KATP:
        return canonical_sets(
            frozenset(combo)
            for combo in itertools.combinations(labels, p.k)
            if all(
                is_prefix(a, b) or is_prefix(b, a)
                for a, b in itertools.combinations(combo, 2)
            )
        )
    if p.kind == SOP2:
        return canonical_sets(
            frozenset({a, b})
            for a, b in itertools.combinations(labels, 2)
            if not (is_prefix(a, b) or is_prefix(b, a))
        )
    if p.kind == SOP1:
        domain = p.domain()
        out = set()
        for eta in labels:
            left = eta + (1,)
            if not domain.contains(left):
                continue
            for nu in labels:
                right = eta + (0,) + nu
                if domain.contains(right):
                    out.add(frozenset({left, right}))
        return canonical_sets(out)
    if p.kind == TP:
        out = []
        for eta in labels:
            children = [eta + (i,) for i in range(p.branching)]
            if not p.domain().contains(children[0]):
                continue
            for combo in itertools.combinations(children, p.k):
                out.append(frozenset(combo))
        return canonical_sets(out)
    if p.kind == TP2:
        return canonical_sets(
            frozenset({(i, j1), (i, j2)})
            for i in range(p.rows)
            for j1, j2 in itertools.combinations(range(p.cols), 2)
        )
    raise ValueError(p.kind)


@dataclass(frozen=True)
class ConsistencyFamily:
    """A subset-closed family of nonempty index sets, stored by its maximal
    members in canonical order; membership is inclusion in some member."""

    labels: Tuple
    maximal: Tuple[FrozenSet, ...]

    def __post_init__(self):
        universe = set(self.labels)
        for m in self.maximal:
            if not m or not m <= universe:
                raise ValueError("maximal members must be nonempty subsets of the index set")
        for a, b in itertools.combinations(self.maximal, 2):
            if a <= b or b <= a:
                raise ValueError("maximal members must be pairwise incomparable")

    def contains(self, subset) -> bool:
        subset = frozenset(subset)
        if not subset:
            return False
        return any(subset <= m for m in self.maximal)

    @classmethod
    def from_members(cls, labels, members) -> "ConsistencyFamily":
        members = [frozenset(m) for m in members if m]
        maximal = [
            m for m in members
            if not any(m < other for other in members)
        ]
        seen, unique = set(), []
        for m in sorted(maximal, key=set_key):
            if m not in seen:
                seen.add(m)
                unique.append(m)
        return cls(tuple(labels), tuple(unique))


def _maximal_forbidden_free(labels, forbidden: List[FrozenSet],
                            cap: int) -> List[FrozenSet]:
    """Maximal subsets of the index set containing no forbidden set, by
    bitmask scan."""
    labels = list(labels)
    n = len(labels)
    if 1 << n > cap:
        raise ResourceCapError(f"subset scan over 2^{n} subsets", cap)
    index = {x: i for i, x in enumerate(labels)}
    bad_masks = []
    for s in forbidden:
        m = 0
        for x in s:
            m |= 1 << index[x]
        bad_masks.append(m)

    def ok(mask):
        return all(bm & mask != bm for bm in bad_masks)

    good = [mask for mask in range(1 << n) if ok(mask)]
    out = []
    for mask in good:
        if all(mask >> i & 1 or not ok(mask | 1 << i) for i in range(n)):
            out.append(frozenset(x for i, x in enumerate(labels) if mask >> i & 1))
    return out


def exact_family(p: PatternSpec, cap: int = DEFAULT_SUBSET_CAP) -> ConsistencyFamily:
    """Maximal members of the family of sets avoiding the pattern's
    forbidden configuration."""
    labels = p.index_labels()
    if p.kind == ATP and p.branching == 2:
        members = list(maximal_antichains(p.depth).items)
    elif p.kind == KATP:
        members = maximal_chain_free_binary(p.depth, p.k)
    elif p.kind == SOP2:
        domain = p.domain()
        members = [
            frozenset(leaf[:l] for l in range(len(leaf) + 1))
            for leaf in domain.level(domain.max_length())
        ]
    elif p.kind == TP2:
        members = [
            frozenset(enumerate(cols))
            for cols in itertools.product(range(p.cols), repeat=p.rows)
        ]
    else:
        members = _maximal_forbidden_free(labels, required_inconsistent(p), cap)
    return ConsistencyFamily.from_members(labels, members)


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    consistent_checked: int
    inconsistent_checked: int
    exhaustive: bool
    counterexample: Optional[tuple] = None  # (subset, expected, actual)

    def summary(self) -> str:
        verdict = "pass" if self.passed else "fail"
        scope = "exhaustive" if self.exhaustive else "pattern"
        line = (f"{verdict} ({scope}): {self.consistent_checked} consistent, "
                f"{self.inconsistent_checked} inconsistent")
        if self.counterexample:
            subset, expected, actual = self.counterexample
            line += (f"; counterexample {sorted(subset)}: "
                     f"expected {expected}, got {actual}")
        return line


def _nonempty_subsets(labels) -> Iterator[FrozenSet]:
    labels = list(labels)
    for mask in range(1, 1 << len(labels)):
        yield frozenset(x for i, x in enumerate(labels) if mask >> i & 1)


def verify(oracle, witness, p: PatternSpec, exhaustive: bool = False,
           cap: int = DEFAULT_SUBSET_CAP) -> VerificationReport:
    """Check the witness against the pattern through the oracle. Pattern mode
    checks the generated families; exhaustive mode additionally compares the
    oracle verdict with exact-family membership on every nonempty subset."""
    labels = p.index_labels()
    if set(witness.labels) != set(labels):
        raise ValueError("witness index set does not match the pattern")
    n_cons = n_incons = 0
    for subset in required_consistent(p):
        n_cons += 1
        if not oracle.consistent(subset):
            return VerificationReport(False, n_cons, n_incons, exhaustive,
                                      (subset, "consistent", "inconsistent"))
    for subset in required_inconsistent(p):
        n_incons += 1
        if oracle.consistent(subset):
            return VerificationReport(False, n_cons, n_incons, exhaustive,
                                      (subset, "inconsistent", "consistent"))
    if exhaustive:
        if 1 << len(labels) > cap:
            raise ResourceCapError(f"exhaustive mode over 2^{len(labels)} subsets", cap)
        family = exact_family(p, cap=cap)
        n_cons = n_incons = 0
        for subset in _nonempty_subsets(labels):
            expected = family.contains(subset)
            actual = oracle.consistent(subset)
            if expected:
                n_cons += 1
            else:
                n_incons += 1
            if expected != actual:
                want = "consistent" if expected else "inconsistent"
                got = "consistent" if actual else "inconsistent"
                return VerificationReport(False, n_cons, n_incons, True,
                                          (subset, want, got))
    return VerificationReport(True, n_cons, n_incons, exhaustive)
