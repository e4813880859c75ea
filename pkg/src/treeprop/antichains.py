"""Antichain enumeration and construction.

Canonical orders used throughout:
  * a node set is canonically presented as its lex-sorted tuple of nodes;
  * a list of node sets is canonically ordered by comparing those tuples;
  * maximal-antichain catalogs built by the binary recursion keep recursion
    order instead (pairwise products in row-major order, then {root} last),
    because downstream constructions index into that exact order;
  * the enumeration X_0, X_1, ... of all finite nonempty binary antichains
    is by depth of first appearance, then canonical set order within a depth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Tuple

from .errors import ResourceCapError
from .nodes import (Node, TreeDomain, concat_set, is_antichain, is_prefix,
                    sorted_nodes)

NodeSet = FrozenSet[Node]

DEFAULT_SUBSET_CAP = 2 ** 20


def set_key(nodes) -> Tuple[Node, ...]:
    return tuple(sorted(nodes))


def canonical_sets(sets) -> List[NodeSet]:
    return sorted((frozenset(s) for s in sets), key=set_key)


@dataclass(frozen=True)
class AntichainCatalog:
    domain: TreeDomain
    items: Tuple[NodeSet, ...]
    maximal_only: bool = False

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def alpha(n: int) -> int:
    """Number of maximal antichains in the binary tree of depth n:
    alpha(0) = 0, alpha(n+1) = alpha(n)**2 + 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = 0
    for _ in range(n):
        a = a * a + 1
    return a


def count_antichains(branching: int, depth: int, nonempty: bool = True) -> int:
    """Antichain count by the product recursion c(d+1) = c(d)**b + 1,
    where c counts antichains including the empty one."""
    c = 1
    for _ in range(depth):
        c = c ** branching + 1
    return c - 1 if nonempty else c


def _subset_scan(nodes: List[Node], ok, cap: int) -> Iterator[int]:
    """Yield bitmasks of subsets passing the predicate ok(mask)."""
    n = len(nodes)
    if 1 << n > cap:
        raise ResourceCapError(f"subset scan over 2^{n} subsets", cap)
    for mask in range(1 << n):
        if ok(mask):
            yield mask


def _comparability_masks(nodes: List[Node]) -> List[int]:
    """masks[i] has bit j set iff node j is comparable with node i (j != i)."""
    masks = []
    for i, a in enumerate(nodes):
        m = 0
        for j, b in enumerate(nodes):
            if i != j and (is_prefix(a, b) or is_prefix(b, a)):
                m |= 1 << j
        masks.append(m)
    return masks


def _prefix_masks(nodes: List[Node]) -> List[int]:
    """masks[i] has bit j set iff node j is a prefix of node i (including i)."""
    index = {x: i for i, x in enumerate(nodes)}
    masks = []
    for x in nodes:
        m = 0
        for l in range(len(x) + 1):
            j = index.get(x[:l])
            if j is not None:
                m |= 1 << j
        masks.append(m)
    return masks


def _mask_set(nodes: List[Node], mask: int) -> NodeSet:
    return frozenset(x for i, x in enumerate(nodes) if mask >> i & 1)


def enumerate_antichains(domain: TreeDomain, nonempty: bool = True,
                         cap: int = DEFAULT_SUBSET_CAP) -> AntichainCatalog:
    nodes = list(domain.nodes())
    comp = _comparability_masks(nodes)
    bits = [1 << i for i in range(len(nodes))]

    def ok(mask):
        if mask == 0:
            return not nonempty
        return all(not (comp[i] & mask) for i in range(len(nodes)) if bits[i] & mask)

    items = [_mask_set(nodes, m) for m in _subset_scan(nodes, ok, cap)]
    return AntichainCatalog(domain, tuple(canonical_sets(items)))


def maximal_antichains(n: int, cap: int = alpha(6)) -> AntichainCatalog:
    """All maximal antichains of the binary tree of depth n, built by the
    recursion: products of 0-/1-prefixed depth-(n-1) catalogs row-major,
    then {root} appended."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if alpha(n) > cap:
        raise ResourceCapError(f"maximal antichain catalog of size alpha({n})", cap)
    items: List[NodeSet] = []
    for _ in range(n):
        items = [
            concat_set((0,), xi) | concat_set((1,), xj)
            for xi in items
            for xj in items
        ] + [frozenset({()})]
    domain = TreeDomain(2, max(n, 1))
    return AntichainCatalog(domain, tuple(items), maximal_only=True)


def _has_chain(members: NodeSet, length: int) -> bool:
    """Whether the set contains `length` pairwise comparable distinct nodes."""
    if length <= 0:
        return True
    for x in members:
        if sum(1 for l in range(len(x) + 1) if x[:l] in members) >= length:
            return True
    return False


def max_chain_bounded_sets(domain: TreeDomain, k: int,
                           cap: int = DEFAULT_SUBSET_CAP) -> List[NodeSet]:
    """All maximal subsets containing no k pairwise comparable elements,
    by brute-force scan; for k=2 these are the maximal antichains."""
    if k < 2:
        raise ValueError("k must be >= 2")
    nodes = list(domain.nodes())
    pref = _prefix_masks(nodes)

    def chain_free(mask):
        return all(
            bin(pref[i] & mask).count("1") < k
            for i in range(len(nodes))
            if mask >> i & 1
        )

    out = []
    for mask in _subset_scan(nodes, chain_free, cap):
        if all(
            mask >> i & 1 or not chain_free(mask | 1 << i)
            for i in range(len(nodes))
        ):
            out.append(_mask_set(nodes, mask))
    return canonical_sets(out)


def maximal_chain_free_binary(n: int, k: int) -> List[NodeSet]:
    """Maximal k-chain-free subsets of the binary tree of depth n by tree
    recursion (no subset scan): with the root, both subtree parts must be
    maximal (k-1)-chain-free; without it, both parts are maximal k-chain-free
    and their union must already contain a (k-1)-chain (else the root could
    be added)."""
    if k < 1:
        raise ValueError("k must be >= 1")

    @lru_cache(maxsize=None)
    def rec(depth: int, bound: int) -> Tuple[NodeSet, ...]:
        if depth == 0 or bound == 1:
            return (frozenset(),)
        out = []
        with_root = rec(depth - 1, bound - 1)
        for left in with_root:
            for right in with_root:
                out.append(
                    frozenset({()}) | concat_set((0,), left) | concat_set((1,), right)
                )
        without_root = rec(depth - 1, bound)
        for left in without_root:
            for right in without_root:
                s = concat_set((0,), left) | concat_set((1,), right)
                if _has_chain(s, bound - 1):
                    out.append(s)
        return tuple(out)

    return canonical_sets(rec(n, k))


def finite_antichain_stream() -> Iterator[NodeSet]:
    """The canonical enumeration X_0, X_1, ... of all finite nonempty binary
    antichains: by depth of first appearance, canonical set order within."""
    seen = set()
    depth = 1
    while True:
        catalog = enumerate_antichains(TreeDomain(2, depth))
        for item in catalog:
            if item not in seen:
                seen.add(item)
                yield item
        depth += 1


def universal_prefix(m: int) -> NodeSet:
    """Union of 1^i 0-prefixed copies of the first m canonical antichains;
    always an antichain."""
    out = set()
    for i, x in enumerate(itertools.islice(finite_antichain_stream(), m)):
        out |= concat_set((1,) * i + (0,), x)
    return frozenset(out)


def find_iso_copy(y: NodeSet, x: NodeSet):
    """First (in lex order over sorted combinations) strongly isomorphic copy
    of the antichain y inside the antichain x, as a lex-monotone mapping,
    or None."""
    from .qftypes import sim0

    y_tuple = sorted_nodes(y)
    pool = sorted_nodes(x)
    if len(y_tuple) > len(pool):
        return None
    for candidate in itertools.combinations(pool, len(y_tuple)):
        if sim0(y_tuple, candidate):
            return dict(zip(y_tuple, candidate))
    return None
