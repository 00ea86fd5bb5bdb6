"""Exact analysis of Coxeter graphs and the automorphism groups of their Coxeter groups."""

from coxan.graph import (
    Clique,
    CoxeterGraph,
    GraphParseError,
    induced_subgraph,
    load_graph,
    maximal_cliques,
    parse_graph,
    serialize_graph,
)
from coxan.classify import (
    CenterDescriptor,
    ComponentType,
    center,
    irreducible_components,
    recognize_component,
)
from coxan.verdict import VerdictReport, analyze

__all__ = [
    "CenterDescriptor",
    "Clique",
    "ComponentType",
    "CoxeterGraph",
    "GraphParseError",
    "VerdictReport",
    "analyze",
    "center",
    "induced_subgraph",
    "irreducible_components",
    "load_graph",
    "maximal_cliques",
    "parse_graph",
    "recognize_component",
    "serialize_graph",
]

__version__ = "0.1.0"
