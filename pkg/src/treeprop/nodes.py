"""Finite tree index domain: digit-string nodes with prefix order, meet,
lexicographic order, concatenation and meet-closure.

A node is a plain tuple of small ints, so the same value can live in several
domains; a TreeDomain carries the (branching, depth) bounds separately.
Python's tuple comparison coincides with the tree's lexicographic order
(prefixes sort first, incomparable nodes compare at the digit after the meet),
so nodes can be sorted directly.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .errors import MalformedNodeError

Node = Tuple[int, ...]

ROOT: Node = ()


class Rel(enum.Enum):
    EQUAL = "equal"
    BELOW = "strictly-below"
    ABOVE = "strictly-above"
    INCOMPARABLE = "incomparable"


def parse_node(text: str, branching: int) -> Node:
    """Parse a node string: "" is the root, digits for branching <= 10,
    dot-separated digits for larger branchings."""
    if text == "":
        return ROOT
    if branching > 10 or "." in text:
        parts = text.split(".")
    else:
        parts = list(text)
    digits = []
    for part in parts:
        if not part.isdigit():
            raise MalformedNodeError(f"bad digit {part!r} in node {text!r}")
        d = int(part)
        if d >= branching:
            raise MalformedNodeError(f"digit {d} out of range for branching {branching}")
        digits.append(d)
    return tuple(digits)


def node_str(node: Node, branching: int = 2) -> str:
    if branching > 10:
        return ".".join(str(d) for d in node)
    return "".join(str(d) for d in node)


def length(node: Node) -> int:
    return len(node)


def is_prefix(eta: Node, nu: Node) -> bool:
    """The prefix order (non-strict): eta is an initial segment of nu."""
    return nu[: len(eta)] == eta


def compare(eta: Node, nu: Node) -> Rel:
    if eta == nu:
        return Rel.EQUAL
    if is_prefix(eta, nu):
        return Rel.BELOW
    if is_prefix(nu, eta):
        return Rel.ABOVE
    return Rel.INCOMPARABLE


def incomparable(eta: Node, nu: Node) -> bool:
    return not is_prefix(eta, nu) and not is_prefix(nu, eta)


def meet(eta: Node, nu: Node) -> Node:
    """Longest common prefix."""
    i = 0
    for a, b in zip(eta, nu):
        if a != b:
            break
        i += 1
    return eta[:i]


def lex_less(eta: Node, nu: Node) -> bool:
    """Strict lexicographic tree order; equals Python tuple comparison."""
    return eta < nu


def concat(eta: Node, nu: Node) -> Node:
    return eta + nu


def concat_set(eta: Node, nodes: Iterable[Node]) -> frozenset:
    """Pointwise prefixing of a node set."""
    return frozenset(eta + x for x in nodes)


def closure(nodes: Tuple[Node, ...]) -> Tuple[Node, ...]:
    """The (k+1)^2-tuple of pairwise meets in row-major order, duplicates kept."""
    if not nodes:
        raise ValueError("closure of empty tuple")
    return tuple(meet(a, b) for a in nodes for b in nodes)


def is_antichain(nodes: Iterable[Node]) -> bool:
    xs = list(nodes)
    return all(incomparable(a, b) for a, b in itertools.combinations(xs, 2))


def is_chain(nodes: Iterable[Node]) -> bool:
    xs = list(nodes)
    return all(not incomparable(a, b) for a, b in itertools.combinations(xs, 2))


@dataclass(frozen=True)
class TreeDomain:
    """All nodes of length < depth over digits < branching; with
    include_leaves, the length == depth level is part of the domain too."""

    branching: int
    depth: int
    include_leaves: bool = False

    def __post_init__(self):
        if self.branching < 2:
            raise ValueError("branching must be >= 2")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")

    def max_length(self) -> int:
        return self.depth if self.include_leaves else self.depth - 1

    def contains(self, node: Node) -> bool:
        return len(node) <= self.max_length() and all(0 <= d < self.branching for d in node)

    def node_count(self) -> int:
        b = self.branching
        return (b ** (self.max_length() + 1) - 1) // (b - 1)

    def nodes(self) -> Iterator[Node]:
        """All nodes in lexicographic order (depth-first, digit order)."""

        def walk(prefix: Node) -> Iterator[Node]:
            yield prefix
            if len(prefix) < self.max_length():
                for d in range(self.branching):
                    yield from walk(prefix + (d,))

        return walk(ROOT)

    def level(self, n: int) -> Iterator[Node]:
        return itertools.product(range(self.branching), repeat=n)


def enumerate_nodes(domain: TreeDomain) -> list:
    return list(domain.nodes())


def sorted_nodes(nodes: Iterable[Node]) -> Tuple[Node, ...]:
    """Canonical (lexicographic) enumeration of a node set."""
    return tuple(sorted(set(nodes)))
