import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gndiag.connectivity import EXACT, NONEXISTENT, is_gn_faulty_set
from gndiag.diagnosability import (
    BOUND_ONLY,
    FORMULA,
    ORACLE,
    case_bound,
    product_bounds,
    t_g_exists,
    t_g_formula,
    t_g_oracle,
)
from gndiag.families import complete_graph, cycle_graph, family, path_graph
from gndiag.gc import gc_number
from gndiag.graph import Graph, GraphError
from gndiag.pmc import distinguishable_criterion

from .strategies import connected_graphs


@pytest.mark.parametrize("gg,t", [(0, 2), (1, 4), (2, 7)])
def test_formula_grid(gg, t):
    r = t_g_formula(family("grid 5 5"), gg)
    assert (r.status, r.method, r.value) == (EXACT, FORMULA, t)


def test_formula_f9():
    assert t_g_formula(family("F 9 3"), 3).value == 4


def test_formula_d4_path5():
    assert t_g_formula(family("D 4 * path 5"), 3, budget=10).value == 9


def test_formula_torus_g0():
    assert t_g_formula(family("torus 8 8"), 0).value == 4


def test_oracle_examples():
    assert t_g_oracle(path_graph(4), 0).value == 1
    r = t_g_oracle(family("F 7 2"), 2)
    assert (r.value, r.method) == (3, ORACLE)
    assert t_g_oracle(complete_graph(5), 3).status == NONEXISTENT


def test_oracle_cap():
    with pytest.raises(GraphError):
        t_g_oracle(family("grid 4 4"), 0)


def test_existence_examples():
    assert not t_g_exists(complete_graph(5), 3)
    assert t_g_exists(family("grid 5 5"), 2)
    assert t_g_exists(path_graph(7), 0)


def test_exists_without_a_cut():
    # K_4 has no cut, but two distinct faulty sets can cover V, so t^0 exists
    k4 = complete_graph(4)
    assert t_g_exists(k4, 0)
    r = t_g_formula(k4, 0)
    assert r.method == ORACLE and r.value == t_g_oracle(k4, 0).value


def test_bound_only_when_c_is_large():
    # c^1 of the 6-cycle is 4 > ceil(6/2)
    g = cycle_graph(6)
    assert gc_number(g, 1).value == 4
    r = t_g_formula(g, 1)
    assert r.status == BOUND_ONLY and r.value == min(4 - 1, 6 - 1 - 2)


def test_budget_exhaustion_is_bound_only():
    r = t_g_formula(family("grid 5 5"), 2, budget=6)
    assert r.status == BOUND_ONLY
    assert r.value == 25 - 2 - 2


def test_case_bounds():
    assert case_bound("i", 3, 0, 4, 1, 1, 1) == 9
    assert case_bound("ii", 3, 0, 4, 1, 1, 1) == 13
    assert case_bound("iii", 0, 3, 1, 4, 1, 1) == 13
    with pytest.raises(ValueError):
        case_bound("v", 0, 0, 0, 0, 0, 0)


def test_product_bounds_d4_path6():
    s = product_bounds(family("D 4"), family("path 6"), 3).split(3)
    assert (s.case, s.bound) == ("i", 9)
    assert (s.class_p, s.class_q) == ("G1", "G1")
    # the degree range condition does not hold for this split
    assert not s.degree_condition_ok and not s.hypotheses_ok


def test_product_bounds_d8_path12():
    rep = product_bounds(family("D 8"), family("path 12"), 3)
    s = rep.split(3)
    assert (s.case, s.bound) == ("ii", 13)
    assert rep.split(2).hypotheses_ok
    assert all(x.p + x.q == 3 for x in rep.splits)


def test_product_bounds_swapped_factors():
    s = product_bounds(family("path 12"), family("D 8"), 3).split(0)
    assert (s.case, s.bound) == ("iii", 13)


def test_product_bounds_rejects_complete_factor():
    with pytest.raises(GraphError):
        product_bounds(complete_graph(4), path_graph(4), 1)


def test_case_iv_flagged():
    rep = product_bounds(family("D 8"), family("D 8"), 6)
    s = rep.split(3)
    assert s.case == "iv"
    assert any("t^q(H)" in r for r in s.reasons)


@pytest.mark.parametrize("left,right,gg", [("path 3", "cycle 4", 1), ("path 3", "path 4", 0), ("cycle 4", "path 3", 0)])
def test_product_bound_soundness(left, right, gg):
    rep = product_bounds(family(left), family(right), gg)
    t = t_g_oracle(family(f"{left} * {right}"), gg)
    assert t.status == EXACT
    for s in rep.splits:
        if s.hypotheses_ok:
            assert t.value <= s.bound


def _witness_ok(g, gg, r):
    f1, f2 = r.witness
    assert f1 != f2
    assert is_gn_faulty_set(g, f1, gg) and is_gn_faulty_set(g, f2, gg)
    assert not distinguishable_criterion(g, f1, f2)
    assert max(len(f1), len(f2)) == r.value + 1


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=3, max_n=9), st.integers(0, 2))
def test_formula_matches_oracle(g, gg):
    c = gc_number(g, gg)
    o = t_g_oracle(g, gg)
    if o.status == EXACT:
        _witness_ok(g, gg, o)
    if c.status != EXACT:
        return
    assert o.value <= min(c.value - 1, g.n - gg - 2)
    f = t_g_formula(g, gg, gc=c)
    if f.status == EXACT:
        assert f.value == o.value
        _witness_ok(g, gg, f)


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=2, max_n=8), st.integers(0, 3))
def test_existence_matches_oracle(g, gg):
    assert t_g_exists(g, gg) == (t_g_oracle(g, gg).status != NONEXISTENT)


def test_oracle_witness_lexicographic():
    r = t_g_oracle(path_graph(4), 0)
    assert [w.to_list() for w in r.witness] == [[0, 1], [1]]


def test_disconnected_rejected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        t_g_formula(g, 0)
    with pytest.raises(GraphError):
        t_g_exists(g, 0)
