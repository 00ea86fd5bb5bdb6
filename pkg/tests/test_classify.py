import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coxan import classify
from coxan.classify import AFFINE, FINITE, OTHER, ComponentType, finite_type
from coxan.graph import CoxeterGraph, induced_subgraph
from coxan.oracles import CosetTable
from coxan.words import coxeter_group

from conftest import fixture_graph, random_graph


def gram(g: CoxeterGraph) -> np.ndarray:
    n = len(g)
    b = np.eye(n)
    for i, j in itertools.combinations(range(n), 2):
        m = g.label(g.vertices[i], g.vertices[j])
        b[i, j] = b[j, i] = -1.0 if m is None else -math.cos(math.pi / m)
    return b


def signature_kind(g: CoxeterGraph) -> str:
    """Finite iff the form is positive definite; affine iff (irreducible and) degenerate PSD."""
    ev = np.linalg.eigvalsh(gram(g))
    if ev[0] > 1e-9:
        return FINITE
    if ev[0] > -1e-9:
        return AFFINE
    return OTHER


# --- components and recognition ---------------------------------------------


def test_components_examples():
    assert classify.irreducible_components(fixture_graph("intro3.cox")) == [("v1",), ("v2", "v3", "v4")]
    assert classify.irreducible_components(fixture_graph("gamma1.cox")) == [("v1", "v2", "v3", "v4")]
    assert classify.irreducible_components(fixture_graph("z2cubed.cox")) == [("a",), ("b",), ("c",)]


@pytest.mark.parametrize(
    "name, expected",
    [
        ("gamma1.cox", "A4"),
        ("gamma2.cox", "B4"),
        ("gamma3.cox", "~A3"),
        ("i2_3.cox", "A2"),
        ("dihedral_inf.cox", "~A1"),
    ],
)
def test_recognize_fixtures(name, expected):
    g = fixture_graph(name)
    assert classify.recognize_component(g).name == expected


def test_recognize_dihedral_boundary():
    edge = lambda m: CoxeterGraph(["v", "w"], [("v", "w", m)])
    assert classify.recognize_component(edge(3)) == finite_type("A", 2)
    assert classify.recognize_component(edge(4)) == ComponentType(FINITE, "I2", 2, 4, 8)
    assert classify.recognize_component(edge(7)).name == "I2(7)"
    assert classify.recognize_component(CoxeterGraph(["v", "w"])).name == "~A1"


def test_recognize_rejects_reducible():
    with pytest.raises(ValueError):
        classify.recognize_component(fixture_graph("z2cubed.cox"))
    with pytest.raises(ValueError):
        classify.recognize_component(CoxeterGraph([]))


def test_other_infinite_examples():
    tri = CoxeterGraph(["a", "b", "c"])  # Z2 * Z2 * Z2
    assert classify.recognize_component(tri).kind == OTHER
    hyp = CoxeterGraph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3), ("a", "c", 4)])
    assert classify.recognize_component(hyp).kind == OTHER  # (3,3,4) triangle is hyperbolic


@pytest.mark.parametrize("t", classify.finite_irreducible_types(8), ids=lambda t: t.name)
def test_every_finite_type_round_trips(t):
    g = classify.graph_of_type(t)
    assert classify.recognize_component(g) == t
    assert signature_kind(g) == FINITE


@pytest.mark.parametrize(
    "family, rank",
    [("A", 1), ("A", 2), ("A", 5), ("B", 3), ("B", 6), ("C", 2), ("C", 5), ("D", 4), ("D", 7),
     ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)],
)
def test_every_affine_type_round_trips(family, rank):
    g = classify.type_graph(family, rank, affine=True)
    assert len(g) == rank + 1
    assert classify.recognize_component(g) == ComponentType(AFFINE, family, rank)
    assert signature_kind(g) == AFFINE


def test_root_counts_match_type_table():
    # number of reflections (positive roots) = n * h / 2
    for name, expected in [("E8", 240), ("H4", 120), ("F4", 48), ("E6", 72), ("D5", 40)]:
        t = next(t for t in classify.finite_irreducible_types(8) if t.name == name)
        assert len(coxeter_group(classify.graph_of_type(t)).root_system()) == expected


def test_random_irreducible_agrees_with_gram_signature():
    rng = random.Random(11)
    checked = 0
    while checked < 400:
        g = random_graph(rng, max_vertices=7, labels=(2, 6), p=0.6)
        for comp in classify.irreducible_components(g):
            sub = induced_subgraph(g, comp)
            assert classify.recognize_component(sub).kind == signature_kind(sub), sub
            checked += 1


def test_random_finite_orders_against_enumeration():
    rng = random.Random(5)
    seen = 0
    while seen < 40:
        g = random_graph(rng, max_vertices=5, labels=(2, 5), p=0.9)
        order = classify.group_order(g)
        if order is None or order > 2000:
            continue
        seen += 1
        assert len(coxeter_group(g).enumerate(2000)) == order
        assert CosetTable(g).order == order


# --- derived quantities ----------------------------------------------------


def test_orders_of_square_graphs():
    assert classify.group_order(fixture_graph("gamma1.cox")) == 120
    assert classify.group_order(fixture_graph("gamma2.cox")) == 384
    assert classify.group_order(fixture_graph("gamma3.cox")) is None


def test_center_examples():
    assert classify.center(fixture_graph("intro3.cox")).order == 2
    assert classify.center(fixture_graph("intro3.cox")).contributing_components == (("v1",),)
    assert classify.center(fixture_graph("gamma1.cox")).trivial
    assert classify.center(fixture_graph("gamma2.cox")).order == 2
    assert classify.center(fixture_graph("z2cubed.cox")).order == 8
    assert classify.center(fixture_graph("even_complete.cox")).order == 4


@pytest.mark.parametrize("name", ["i2_3.cox", "a2xa1.cox", "z2cubed.cox", "even_complete.cox", "gamma1.cox", "gamma2.cox"])
def test_center_against_exhaustive_search(name):
    g = fixture_graph(name)
    group = coxeter_group(g)
    order = classify.group_order(g)
    assert len(group.center_elements(order)) == classify.center(g).order
    # independent: central cosets of the Todd-Coxeter table
    tc = CosetTable(g)
    n = len(g)
    words = {tc.coset_of(e.word): e.word for e in group.enumerate(order)}
    central = [
        c for c, w in words.items()
        if all(tc.coset_of(w + (s,)) == tc.coset_of((s,) + w) for s in range(n))
    ]
    assert len(central) == classify.center(g).order


def test_group_properties_examples():
    g3 = fixture_graph("gamma3.cox")
    assert classify.is_virtually_abelian(g3) and not classify.is_large(g3)
    intro1 = fixture_graph("intro1.cox")
    assert classify.is_large(intro1)
    assert classify.has_property_FA(fixture_graph("gamma1.cox"))
    assert not classify.has_property_FA(intro1)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**31))
def test_exactly_one_of_virtually_abelian_or_large(seed):
    g = random_graph(random.Random(seed), max_vertices=6)
    assert classify.is_virtually_abelian(g) != classify.is_large(g)
    if classify.is_finite(g):
        assert classify.is_virtually_abelian(g)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**31), st.randoms(use_true_random=False))
def test_classification_invariant_under_renaming(seed, shuffler):
    g = random_graph(random.Random(seed), max_vertices=6)
    names = list(g.vertices)
    new = [f"n{k}" for k in range(len(names))]
    shuffler.shuffle(new)
    h = g.relabel(dict(zip(names, new)))
    key = lambda gr: sorted((t.name, len(c)) for c, t in classify.component_types(gr))
    assert key(g) == key(h)
    assert classify.group_order(g) == classify.group_order(h)
    assert classify.center(g).order == classify.center(h).order


def test_component_type_validation():
    with pytest.raises(ValueError):
        ComponentType(FINITE, "E", 5, order=1)
    with pytest.raises(ValueError):
        ComponentType(FINITE, "A", 3, order=25)
    with pytest.raises(ValueError):
        ComponentType(AFFINE, "A", 3, order=5)
    with pytest.raises(ValueError):
        classify.CenterDescriptor(3, ())
