import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from coxan import classify
from coxan.graph import (
    CoxeterGraph,
    all_labels_at_least_3,
    induced_subgraph,
    is_complete,
    is_even,
    maximal_cliques,
)
from coxan.verdict import VerdictReport, analyze, check_theorem_A, check_theorem_B

from conftest import all_fixtures, fixture_graph, random_graph

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name", ["intro1", "intro2", "intro3"])
def test_golden_reports(name):
    report = analyze(fixture_graph(f"{name}.cox"))
    assert report.to_json() == (GOLDEN / f"{name}.json").read_text()


def test_finite_groups_fire_nothing():
    r = analyze(fixture_graph("gamma1.cox"))
    assert r.finite and r.order == 120
    assert r.theorem_A is None and r.theorem_B is None
    assert not (r.corollary_C_i or r.corollary_C_ii or r.corollary_C_iii)
    assert not r.no_conclusion and r.surjection_targets == ()


def test_finite_even_group():
    # I2(4) x I2(4): every vertex even, but the group is finite
    r = analyze(fixture_graph("even_complete.cox"))
    assert r.finite and r.order == 64
    assert r.theorem_A is None and r.theorem_B is None


def test_even_four_cycle_is_infinite():
    # the 4-cycle of label-4 edges with label-2 diagonals is affine ~C2
    # (diagram: a 4-cycle of 4-bonds is not of finite type), so the clique theorem fires
    g = CoxeterGraph(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2", 4), ("v2", "v3", 4), ("v3", "v4", 4), ("v4", "v1", 4), ("v1", "v3", 2), ("v2", "v4", 2)],
    )
    r = analyze(g)
    assert not r.finite
    assert r.theorem_A == ("v1", "v2", "v3", "v4") and r.theorem_B is None


def test_gamma3_virtually_abelian():
    r = analyze(fixture_graph("gamma3.cox"))
    assert not r.finite and r.virtually_abelian and not r.large
    assert r.theorem_A == ("v1", "v2", "v3", "v4")
    assert not r.large_aut and r.not_property_T


def test_large_aut_example():
    r = analyze(fixture_graph("path55.cox"))
    assert r.theorem_A is not None and r.large and r.large_aut


def test_no_conclusion_example():
    r = analyze(fixture_graph("even_complete_open.cox"))
    assert not r.finite and r.no_conclusion
    assert not r.not_property_T and r.surjection_targets == ()
    assert r.corollary_C_ii  # even, but C(ii) needs a non-adjacent pair or a centerless clique


def test_theorem_A_picks_first_clique_in_order():
    g = CoxeterGraph(["a", "b", "c", "d"], [("a", "b", 3), ("c", "d", 5)])
    assert check_theorem_A(g).vertices == ("a", "b")
    assert check_theorem_B(g) is None


def test_report_invariants_rejected():
    base = analyze(fixture_graph("intro1.cox"))
    fields = {k: getattr(base, k) for k in base.__dataclass_fields__}
    with pytest.raises(AssertionError):
        VerdictReport(**{**fields, "surjection_targets": ("W_Gamma", "Z2*Z2")})
    with pytest.raises(AssertionError):
        VerdictReport(**{**fields, "no_conclusion": True})
    with pytest.raises(AssertionError):
        VerdictReport(**{**fields, "large": False})


def test_json_key_order():
    d = json.loads(analyze(fixture_graph("intro2.cox")).to_json())
    assert list(d) == [
        "group_status", "theorem_A", "theorem_B", "corollaries",
        "surjection_targets", "aut_conclusions", "group_properties",
    ]


@pytest.mark.parametrize("name, g", all_fixtures())
def test_fixture_reports_consistent(name, g):
    r = analyze(g)
    assert r == analyze(g)
    if r.theorem_A is not None:
        assert classify.center(induced_subgraph(g, r.theorem_A)).trivial
        assert any(c.vertices == r.theorem_A for c in maximal_cliques(g))
    assert "theorem A" in r.to_text()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31))
def test_theorem_A_iff_some_centerless_maximal_clique(seed):
    g = random_graph(random.Random(seed), max_vertices=7)
    r = analyze(g)
    centerless = any(
        classify.center(induced_subgraph(g, c.vertices)).trivial for c in maximal_cliques(g)
    )
    assert (r.theorem_A is not None) == (centerless and not r.finite)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31))
def test_even_infinite_groups_get_a_conclusion(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_vertices=7, labels=(2, 4))
    g = CoxeterGraph(g.vertices, [(u, v, 2 * (m - 1)) for u, v, m in g.edges()])
    assert is_even(g)
    r = analyze(g)
    if r.finite:
        return
    if not is_complete(g):
        assert r.theorem_B is not None
    else:
        # the only maximal clique is the whole graph
        assert r.no_conclusion == (not classify.center(g).trivial)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31))
def test_labels_at_least_3_fail_only_on_small_even_cliques(seed):
    """Where the clique theorem misses a graph with labels >= 3, every maximal
    clique is a vertex or an even-labelled edge, and the even-pair theorem fires."""
    g = random_graph(random.Random(seed), max_vertices=8, labels=(3, 6))
    if not all_labels_at_least_3(g) or classify.is_finite(g):
        return
    r = analyze(g)
    if r.theorem_A is None:
        for c in maximal_cliques(g):
            assert len(c) == 1 or (len(c) == 2 and g.label(*c.vertices) % 2 == 0)
        assert r.theorem_B is not None
    # a maximal clique with 3 or more vertices always has trivial center here
    for c in maximal_cliques(g):
        if len(c) >= 3:
            assert classify.center(induced_subgraph(g, c.vertices)).trivial
