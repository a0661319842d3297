from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from idslib import (
    ContractError,
    FormatError,
    Graph,
    LimitError,
    Profile,
    ValidProfileSet,
    complement_profile,
    enumerate_valid_profiles,
    is_valid_profile,
)

from conftest import graphs
from oracles import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    naive_is_valid,
    naive_valid_masks,
    path_graph,
    random_graph,
)


def P(text: str) -> Profile:
    return Profile.from_text(text)


def test_profile_text_round_trip():
    p = P("0110")
    assert p.bits == 0b0110 and p.size == 4
    assert p.to_text() == "0110"
    assert p.opinion(0) == 0 and p.opinion(1) == 1
    with pytest.raises(FormatError):
        P("01x")
    with pytest.raises(ContractError):
        Profile(4, 2)


def test_validity_frozen_examples():
    c4 = cycle_graph(4)
    assert is_valid_profile(c4, P("0011"))
    assert not is_valid_profile(c4, P("0001"))
    k2 = path_graph(2)
    assert is_valid_profile(k2, P("00")) and is_valid_profile(k2, P("11"))
    assert not is_valid_profile(k2, P("01"))


def test_validity_isolated_vertex_is_unconstrained():
    g = Graph.from_edges(["a"], [])
    assert is_valid_profile(g, P("0")) and is_valid_profile(g, P("1"))


def test_validity_size_mismatch():
    with pytest.raises(ContractError):
        is_valid_profile(path_graph(3), P("0011"))


@given(graphs(max_vertices=8), st.integers(min_value=0, max_value=255))
def test_validity_agrees_with_naive_counting(g, raw):
    bits = raw & ((1 << g.vertex_count) - 1)
    assert is_valid_profile(g, Profile(bits, g.vertex_count)) == naive_is_valid(g, bits)


@given(graphs(max_vertices=10))
def test_unanimous_profiles_are_always_valid(g):
    n = g.vertex_count
    assert is_valid_profile(g, Profile(0, n))
    assert is_valid_profile(g, Profile((1 << n) - 1, n))


def test_enumerate_frozen_small_cases():
    assert enumerate_valid_profiles(path_graph(2)).texts() == ["00", "11"]
    assert enumerate_valid_profiles(path_graph(3)).texts() == ["000", "111"]
    u = enumerate_valid_profiles(cycle_graph(4))
    assert u.texts() == ["0000", "1100", "0110", "1001", "0011", "1111"]
    assert u.complete and len(u) == 6
    # complete graphs only allow unanimity
    assert len(enumerate_valid_profiles(complete_graph(5))) == 2


def test_enumerate_empty_graph():
    u = enumerate_valid_profiles(Graph.from_edges([], []))
    assert u.masks == (0,) and u.complete


@given(graphs(max_vertices=9))
def test_enumerate_equals_naive_filter(g):
    assert enumerate_valid_profiles(g).masks == naive_valid_masks(g)


@given(graphs(max_vertices=9))
def test_enumerate_is_ascending(g):
    masks = enumerate_valid_profiles(g).masks
    assert list(masks) == sorted(set(masks))


def test_enumerate_cap_keeps_smallest_and_flags_incomplete():
    c4 = cycle_graph(4)
    u = enumerate_valid_profiles(c4, cap=3)
    assert u.masks == (0, 3, 6) and not u.complete
    assert enumerate_valid_profiles(c4, cap=6).complete
    assert enumerate_valid_profiles(c4, cap=100).complete
    assert enumerate_valid_profiles(c4, cap=0).masks == ()
    with pytest.raises(ContractError):
        enumerate_valid_profiles(c4, cap=-1)


def test_enumerate_vertex_limit():
    g = random_graph(random.Random(0), 12, 0.3)
    with pytest.raises(LimitError):
        enumerate_valid_profiles(g, limit=10)
    # override allows it
    assert enumerate_valid_profiles(g, limit=12).complete


@given(graphs(max_vertices=9))
def test_complement_symmetry(g):
    u = enumerate_valid_profiles(g)
    flipped = sorted(complement_profile(p).bits for p in u.profiles())
    assert tuple(flipped) == u.masks


def test_complement_of_empty_profile():
    p = Profile(0, 0)
    assert complement_profile(p) == p


@given(graphs(max_vertices=5), graphs(max_vertices=4))
def test_valid_set_of_disjoint_union_is_product(a, b):
    g = disjoint_union(a, b)
    ua = enumerate_valid_profiles(a).masks
    ub = enumerate_valid_profiles(b).masks
    combined = sorted(x | (y << a.vertex_count) for x in ua for y in ub)
    assert list(enumerate_valid_profiles(g).masks) == combined


def test_valid_profile_set_validation_and_helpers():
    with pytest.raises(ContractError):
        ValidProfileSet(2, (1, 1), True)
    with pytest.raises(ContractError):
        ValidProfileSet(2, (4,), True)
    u = enumerate_valid_profiles(cycle_graph(4))
    assert u.contains(0b0011) and not u.contains(0b0001)
    assert '"complete": true' in u.to_json()
