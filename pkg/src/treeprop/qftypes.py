"""Canonical encodings of quantifier-free node-tuple types.

Two tuples are strongly isomorphic (sim0) when the prefix-order and
lexicographic relation patterns on their meet-closure tuples coincide
position by position; since the closure tuple is meet-closed, every
quantifier-free term in the tree language collapses to a closure position.

The four-place relation over an antichain holds of (a, b, c, d) when
meet(a, b) is a prefix of meet(c, d); sim_delta is equality of that tensor
together with the pairwise lexicographic pattern.

Encodings serialize to bytes (arity, then row-major relation bits) so that
type equality is byte equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Tuple

from .errors import ResourceCapError
from .nodes import Node, TreeDomain, closure, is_prefix, meet


def _pack_bits(bits) -> bytes:
    out = bytearray()
    acc = 0
    n = 0
    for bit in bits:
        acc = (acc << 1) | (1 if bit else 0)
        n += 1
        if n == 8:
            out.append(acc)
            acc = n = 0
    if n:
        out.append(acc << (8 - n))
    return bytes(out)


@dataclass(frozen=True)
class QfType0:
    """Prefix-order / lex pattern over the meet-closure of a node tuple."""

    arity: int
    below: Tuple[Tuple[bool, ...], ...]
    lex: Tuple[Tuple[bool, ...], ...]

    def encode(self) -> bytes:
        flat_below = (v for row in self.below for v in row)
        flat_lex = (v for row in self.lex for v in row)
        return (
            self.arity.to_bytes(4, "big")
            + _pack_bits(flat_below)
            + _pack_bits(flat_lex)
        )


@dataclass(frozen=True)
class DeltaType:
    """Meet-comparison tensor and lex pattern of a node tuple."""

    arity: int
    delta: Tuple[bool, ...]  # flattened over (i, j, k, l) quadruples
    lex: Tuple[Tuple[bool, ...], ...]

    def encode(self) -> bytes:
        flat_lex = (v for row in self.lex for v in row)
        return self.arity.to_bytes(4, "big") + _pack_bits(self.delta) + _pack_bits(flat_lex)


def qftype0(nodes: Tuple[Node, ...]) -> QfType0:
    cl = closure(tuple(nodes))
    below = tuple(tuple(is_prefix(a, b) for b in cl) for a in cl)
    lex = tuple(tuple(a < b for b in cl) for a in cl)
    return QfType0(len(nodes), below, lex)


def delta_type(nodes: Tuple[Node, ...]) -> DeltaType:
    t = tuple(nodes)
    if not t:
        raise ValueError("delta type of empty tuple")
    n = len(t)
    meets = [[meet(a, b) for b in t] for a in t]
    delta = tuple(
        is_prefix(meets[i][j], meets[k][l])
        for i in range(n)
        for j in range(n)
        for k in range(n)
        for l in range(n)
    )
    lex = tuple(tuple(a < b for b in t) for a in t)
    return DeltaType(n, delta, lex)


def sim0(t1, t2) -> bool:
    """Strong isomorphism of node tuples."""
    t1, t2 = tuple(t1), tuple(t2)
    if len(t1) != len(t2):
        return False
    return qftype0(t1).encode() == qftype0(t2).encode()


def atomic_pattern(nodes: Tuple[Node, ...]) -> bytes:
    """Prefix-order / lex pattern on the tuple entries themselves, without
    meet closure. Two tuples with equal patterns satisfy the same atomic
    relations among their entries; this is weaker than sim0, which also
    tracks how the entries sit relative to their pairwise meets."""
    t = tuple(nodes)
    below = (is_prefix(a, b) for a in t for b in t)
    lex = (a < b for a in t for b in t)
    return len(t).to_bytes(4, "big") + _pack_bits(below) + _pack_bits(lex)


def sim0_atomic(t1, t2) -> bool:
    t1, t2 = tuple(t1), tuple(t2)
    if len(t1) != len(t2):
        return False
    return atomic_pattern(t1) == atomic_pattern(t2)


def sim0_sets(x1, x2) -> bool:
    """Strong isomorphism of node sets, compared as lex-ordered tuples."""
    return sim0(tuple(sorted(x1)), tuple(sorted(x2)))


def sim_delta(t1, t2) -> bool:
    t1, t2 = tuple(t1), tuple(t2)
    if len(t1) != len(t2):
        return False
    return delta_type(t1).encode() == delta_type(t2).encode()


@dataclass(frozen=True)
class SsLlReport:
    passed: bool
    tuple_count: int
    pair_count: int
    counterexample: tuple | None  # (tuple1, tuple2, sim_delta, sim0_of_closures)


def verify_ss_ll(branching: int, leaf_depth: int, tuple_len: int,
                 pair_cap: int = 10_000_000) -> SsLlReport:
    """Exhaustive finite check that sim_delta on tuples of distinct leaves
    coincides with sim0 on their closure tuples."""
    if branching < 2 or leaf_depth < 1 or tuple_len < 1:
        raise ValueError("branching >= 2, leaf_depth >= 1, tuple_len >= 1 required")
    domain = TreeDomain(branching, leaf_depth, include_leaves=True)
    leaves = list(domain.level(leaf_depth))
    tuples = list(itertools.permutations(leaves, tuple_len))
    pair_count = len(tuples) ** 2
    if pair_count > pair_cap:
        raise ResourceCapError(
            f"ss-ll check needs {pair_count} pair comparisons", pair_cap
        )
    encodings = [
        (delta_type(t).encode(), qftype0(closure(t)).encode()) for t in tuples
    ]
    for (t1, (d1, c1)), (t2, (d2, c2)) in itertools.product(
        zip(tuples, encodings), repeat=2
    ):
        if (d1 == d2) != (c1 == c2):
            return SsLlReport(False, len(tuples), pair_count,
                              (t1, t2, d1 == d2, c1 == c2))
    return SsLlReport(True, len(tuples), pair_count, None)
