import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treeprop import (MalformedNodeError, Rel, TreeDomain, closure, compare,
                      concat, concat_set, is_antichain, is_chain, lex_less,
                      meet, node_str, parse_node)
from treeprop.nodes import incomparable, is_prefix, sorted_nodes

nodes = st.lists(st.integers(0, 2), max_size=6).map(tuple)
binary_nodes = st.lists(st.integers(0, 1), max_size=6).map(tuple)


def test_parse_round_trip_small_branching():
    for text in ["", "0", "1", "010", "1101"]:
        assert node_str(parse_node(text, 2), 2) == text


def test_parse_round_trip_large_branching():
    assert parse_node("10.3.0", 12) == (10, 3, 0)
    assert node_str((10, 3, 0), 12) == "10.3.0"


def test_parse_rejects_out_of_range_digit():
    with pytest.raises(MalformedNodeError):
        parse_node("2", 2)
    with pytest.raises(MalformedNodeError):
        parse_node("0.x", 12)


def test_compare_cases():
    assert compare((), ()) is Rel.EQUAL
    assert compare((), (0,)) is Rel.BELOW
    assert compare((0, 1), (0,)) is Rel.ABOVE
    assert compare((0,), (1,)) is Rel.INCOMPARABLE


def test_meet_examples():
    assert meet((0, 1, 0), (0, 1, 1)) == (0, 1)
    assert meet((0,), (1,)) == ()
    assert meet((0, 1), (0, 1, 0)) == (0, 1)


def test_lex_prefixes_sort_first():
    assert lex_less((), (0,))
    assert lex_less((0,), (0, 1))
    assert lex_less((0, 1), (1,))
    assert not lex_less((1,), (0, 1))


@given(nodes, nodes)
def test_meet_commutative(a, b):
    assert meet(a, b) == meet(b, a)


@given(nodes, nodes, nodes)
def test_meet_associative(a, b, c):
    assert meet(meet(a, b), c) == meet(a, meet(b, c))


@given(nodes, nodes)
def test_meet_is_common_prefix(a, b):
    m = meet(a, b)
    assert is_prefix(m, a) and is_prefix(m, b)
    assert meet(a, a) == a


@given(nodes, nodes)
def test_lex_trichotomy(a, b):
    assert (lex_less(a, b), a == b, lex_less(b, a)).count(True) == 1


@given(nodes, nodes)
def test_prefix_implies_lex(a, b):
    if is_prefix(a, b) and a != b:
        assert lex_less(a, b)


@given(nodes, nodes)
def test_incomparable_iff_meet_proper(a, b):
    m = meet(a, b)
    assert incomparable(a, b) == (m != a and m != b)


@given(st.lists(nodes, min_size=1, max_size=4))
def test_closure_is_meet_closed(ts):
    t = tuple(ts)
    cl = closure(t)
    assert len(cl) == len(t) ** 2
    assert set(t) <= set(cl)
    for a, b in itertools.product(cl, repeat=2):
        assert meet(a, b) in cl


def test_closure_row_major_order():
    t = ((0,), (1,))
    assert closure(t) == ((0,), (), (), (1,))


def test_closure_empty_rejected():
    with pytest.raises(ValueError):
        closure(())


def test_concat():
    assert concat((0,), (1, 1)) == (0, 1, 1)
    assert concat_set((1,), [(), (0,)]) == {(1,), (1, 0)}


def test_antichain_and_chain_predicates():
    assert is_antichain([(0,), (1, 0), (1, 1)])
    assert not is_antichain([(0,), (0, 1)])
    assert is_chain([(), (0,), (0, 1)])
    assert not is_chain([(0,), (1,)])
    assert is_antichain([]) and is_chain([])


def test_domain_counts_and_membership():
    d = TreeDomain(2, 3)
    assert d.node_count() == 7
    assert list(d.nodes()) == sorted(d.nodes())
    assert d.contains((0, 1)) and not d.contains((0, 1, 0))
    assert not d.contains((2,))
    leaves = TreeDomain(2, 3, include_leaves=True)
    assert leaves.node_count() == 15
    assert len(list(leaves.level(3))) == 8


def test_domain_validation():
    with pytest.raises(ValueError):
        TreeDomain(1, 3)
    with pytest.raises(ValueError):
        TreeDomain(2, 0)


def test_sorted_nodes_dedups():
    assert sorted_nodes([(1,), (0,), (1,)]) == ((0,), (1,))
