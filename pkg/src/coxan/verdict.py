"""Decide when Aut(W_Gamma) virtually surjects onto an infinite Coxeter group.

Two sufficient conditions are checked on the graph:

* a maximal clique whose special subgroup has trivial center (with W_Gamma
  infinite) gives a virtual surjection of Aut(W_Gamma) onto W_Gamma;
* two non-adjacent even vertices give a virtual surjection onto Z2*Z2.

Either one rules out Kazhdan's property (T) for Aut(W_Gamma) and makes it
virtually indicable.  The first, for a large W_Gamma, makes Aut(W_Gamma)
large.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from coxan import classify
from coxan.graph import (
    Clique,
    CoxeterGraph,
    all_labels_at_least_3,
    induced_subgraph,
    is_even,
    is_even_vertex,
    is_triangle_free,
    maximal_cliques,
    non_adjacent_even_pair,
)

TARGET_W = "W_Gamma"
TARGET_DIHEDRAL = "Z2*Z2"


def check_theorem_A(g: CoxeterGraph) -> Clique | None:
    """First maximal clique with centerless special subgroup, for infinite W_Gamma."""
    if classify.is_finite(g):
        return None
    for clique in maximal_cliques(g):
        if classify.center(induced_subgraph(g, clique.vertices)).trivial:
            return clique
    return None


def check_theorem_B(g: CoxeterGraph) -> tuple[str, str] | None:
    return non_adjacent_even_pair(g)


@dataclass(frozen=True)
class VerdictReport:
    finite: bool
    order: int | None
    theorem_A: tuple[str, ...] | None
    theorem_B: tuple[str, str] | None
    corollary_C_i: bool
    corollary_C_ii: bool
    corollary_C_iii: bool
    surjection_targets: tuple[str, ...]
    not_property_T: bool
    virtually_indicable: bool
    large_aut: bool
    no_conclusion: bool
    virtually_abelian: bool
    large: bool
    FA: bool

    def __post_init__(self):
        fired = self.theorem_A is not None or self.theorem_B is not None
        if self.finite != (self.order is not None):
            raise AssertionError("finite groups carry an order, infinite ones do not")
        if self.theorem_A is not None and self.finite:
            raise AssertionError("clique theorem needs an infinite group")
        if self.theorem_B is not None and self.finite:
            raise AssertionError("a non-adjacent pair generates an infinite dihedral subgroup")
        if (TARGET_W in self.surjection_targets) != (self.theorem_A is not None):
            raise AssertionError("W_Gamma target iff the clique theorem fired")
        if (TARGET_DIHEDRAL in self.surjection_targets) != (self.theorem_B is not None):
            raise AssertionError("Z2*Z2 target iff the even-pair theorem fired")
        if self.not_property_T != fired or self.virtually_indicable != fired:
            raise AssertionError("(T) failure and virtual indicability follow either theorem")
        if self.large_aut != (self.theorem_A is not None and self.large):
            raise AssertionError("large Aut needs the clique theorem and a large group")
        if self.no_conclusion != (not self.finite and not fired):
            raise AssertionError("no_conclusion marks infinite groups where neither theorem fires")
        if self.large == self.virtually_abelian:
            raise AssertionError("a Coxeter group is exactly one of virtually abelian, large")

    def to_dict(self) -> dict:
        return {
            "group_status": {
                "kind": "finite" if self.finite else "infinite",
                "order": self.order,
            },
            "theorem_A": list(self.theorem_A) if self.theorem_A is not None else None,
            "theorem_B": list(self.theorem_B) if self.theorem_B is not None else None,
            "corollaries": {
                "C(i)": self.corollary_C_i,
                "C(ii)": self.corollary_C_ii,
                "C(iii)": self.corollary_C_iii,
            },
            "surjection_targets": list(self.surjection_targets),
            "aut_conclusions": {
                "not_property_T": self.not_property_T,
                "virtually_indicable": self.virtually_indicable,
                "large_aut": self.large_aut,
                "no_conclusion": self.no_conclusion,
            },
            "group_properties": {
                "virtually_abelian": self.virtually_abelian,
                "large": self.large,
                "FA": self.FA,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        lines.append(f"group: {'finite of order ' + str(self.order) if self.finite else 'infinite'}")
        lines.append(
            "theorem A: "
            + ("{" + ", ".join(self.theorem_A) + "}" if self.theorem_A is not None else "does not apply")
        )
        lines.append(
            "theorem B: "
            + (f"({self.theorem_B[0]}, {self.theorem_B[1]})" if self.theorem_B else "does not apply")
        )
        cors = [n for n, f in (("C(i)", self.corollary_C_i), ("C(ii)", self.corollary_C_ii),
                               ("C(iii)", self.corollary_C_iii)) if f]
        lines.append("corollaries: " + (", ".join(cors) if cors else "none"))
        lines.append(
            "Aut virtually surjects onto: "
            + (", ".join(self.surjection_targets) if self.surjection_targets else "-")
        )
        if self.not_property_T:
            lines.append("Aut(W) does not have property (T); Aut(W) is virtually indicable")
        if self.large_aut:
            lines.append("Aut(W) is large")
        if self.no_conclusion:
            lines.append("no conclusion: neither theorem applies")
        props = [
            "virtually abelian" if self.virtually_abelian else "large",
            "has property FA" if self.FA else "no property FA",
        ]
        lines.append("W: " + ", ".join(props))
        return "\n".join(lines) + "\n"


def analyze(g: CoxeterGraph) -> VerdictReport:
    order = classify.group_order(g)
    finite = order is not None
    clique = check_theorem_A(g)
    pair = check_theorem_B(g)
    if pair is not None:
        assert not g.adjacent(*pair) and all(is_even_vertex(g, x) for x in pair)
    targets = []
    if clique is not None:
        targets.append(TARGET_W)
    if pair is not None:
        targets.append(TARGET_DIHEDRAL)
    fired = clique is not None or pair is not None
    large = classify.is_large(g)
    return VerdictReport(
        finite=finite,
        order=order,
        theorem_A=clique.vertices if clique is not None else None,
        theorem_B=pair,
        corollary_C_i=not finite and is_triangle_free(g),
        corollary_C_ii=not finite and is_even(g),
        corollary_C_iii=not finite and all_labels_at_least_3(g),
        surjection_targets=tuple(targets),
        not_property_T=fired,
        virtually_indicable=fired,
        large_aut=clique is not None and large,
        no_conclusion=not finite and not fired,
        virtually_abelian=not large,
        large=large,
        FA=classify.has_property_FA(g),
    )
