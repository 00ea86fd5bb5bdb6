import itertools
import random

import pytest

from coxan.cli import fixture_names, fixture_path
from coxan.graph import CoxeterGraph, load_graph

import _acclog


def fixture_graph(name: str) -> CoxeterGraph:
    return load_graph(fixture_path(name))


@pytest.fixture
def fx():
    return fixture_graph


def all_fixtures():
    return [(n, fixture_graph(n)) for n in fixture_names()]


def random_graph(rng: random.Random, max_vertices=8, labels=(2, 6), p=0.5, min_vertices=1):
    n = rng.randint(min_vertices, max_vertices)
    vs = [f"v{i}" for i in range(1, n + 1)]
    edges = [
        (u, v, rng.randint(*labels)) for u, v in itertools.combinations(vs, 2) if rng.random() < p
    ]
    return CoxeterGraph(vs, edges)


def random_triangle_free_graph(rng: random.Random, max_vertices=8, labels=(2, 6), p=0.5):
    n = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(1, n + 1)]
    adj = {v: set() for v in vs}
    edges = []
    pairs = list(itertools.combinations(vs, 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() < p and not (adj[u] & adj[v]):
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v, rng.randint(*labels)))
    return CoxeterGraph(vs, edges)


def pytest_terminal_summary(terminalreporter):
    if _acclog.LINES:
        terminalreporter.section("acceptance criteria")
        for line in _acclog.LINES:
            terminalreporter.write_line(line)
