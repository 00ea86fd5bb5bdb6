"""Irreducible decomposition and finite/affine type recognition.

Recognition works on the Coxeter diagram, which uses the opposite edge
convention to a Coxeter graph: a diagram bond joins u and v exactly when
they do NOT commute, carrying the label m >= 3, or infinity for a pair
that is not adjacent in the graph.  Irreducible components are the
connected components of the diagram.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from coxan.graph import CoxeterGraph, induced_subgraph, is_complete

INF = math.inf

FINITE, AFFINE, OTHER = "finite", "affine", "other"


@dataclass(frozen=True)
class ComponentType:
    """Type of an irreducible component.

    ``family`` is one of A B D E F H I2 for finite types and the same
    letters (A B C D E F G) for affine ones, printed with a tilde.  ``m``
    is the dihedral label for I2(m).  ``order`` is None when infinite.
    """

    kind: str
    family: str | None = None
    rank: int = 0
    m: int | None = None
    order: int | None = None

    def __post_init__(self):
        if self.kind == FINITE:
            ok = {
                "A": self.rank >= 1,
                "B": self.rank >= 3,
                "D": self.rank >= 4,
                "E": self.rank in (6, 7, 8),
                "F": self.rank == 4,
                "H": self.rank in (3, 4),
                "I2": self.rank == 2 and self.m is not None and self.m >= 4,
            }.get(self.family, False)
            if not ok or self.order != finite_order(self.family, self.rank, self.m):
                raise ValueError(f"invalid finite type {self.family}{self.rank} (m={self.m})")
        elif self.order is not None:
            raise ValueError("infinite types carry no order")

    @property
    def name(self) -> str:
        if self.kind == FINITE:
            return f"I2({self.m})" if self.family == "I2" else f"{self.family}{self.rank}"
        if self.kind == AFFINE:
            return f"~{self.family}{self.rank}"
        return "other-infinite"

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def has_central_longest_element(self) -> bool:
        """Center table: the longest element is -1 exactly for these types."""
        if self.kind != FINITE:
            return False
        f, n = self.family, self.rank
        if f == "A":
            return n == 1
        if f == "D":
            return n % 2 == 0
        if f == "E":
            return n in (7, 8)
        if f == "I2":
            return self.m % 2 == 0
        return f in ("B", "F", "H")


def finite_order(family: str, rank: int, m: int | None = None) -> int:
    n = rank
    if family == "A":
        return math.factorial(n + 1)
    if family == "B":
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if family == "F":
        return 1152
    if family == "H":
        return {3: 120, 4: 14400}[n]
    if family == "I2":
        return 2 * m
    raise ValueError(f"unknown finite family {family}")


def finite_type(family: str, rank: int, m: int | None = None) -> ComponentType:
    return ComponentType(FINITE, family, rank, m, finite_order(family, rank, m))


@dataclass(frozen=True)
class CenterDescriptor:
    order: int
    contributing_components: tuple[tuple[str, ...], ...] = field(default=())

    def __post_init__(self):
        if self.order != 2 ** len(self.contributing_components):
            raise ValueError("center order must be 2^(number of contributing components)")

    @property
    def trivial(self) -> bool:
        return self.order == 1


# --- decomposition ----------------------------------------------------------


def irreducible_components(g: CoxeterGraph) -> list[tuple[str, ...]]:
    """Classes of the relation "not joined by a label-2 edge", sorted."""
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in itertools.combinations(g.vertices, 2):
        if g.label(u, v) != 2:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    classes: dict[str, list[str]] = {}
    for v in g.vertices:
        classes.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(c)) for c in classes.values())


def diagram_bonds(g: CoxeterGraph) -> dict[tuple[str, str], float]:
    """Coxeter-diagram bonds: label m >= 3 kept, non-edges become infinity."""
    bonds = {}
    for u, v in itertools.combinations(g.vertices, 2):
        m = g.label(u, v)
        if m is None:
            bonds[(u, v)] = INF
        elif m >= 3:
            bonds[(u, v)] = m
    return bonds


def _path_order(nbrs, start):
    path, prev = [start], None
    while True:
        nxt = [w for w in nbrs[path[-1]] if w != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _legs(nbrs, bonds, center):
    """Each branch hanging off ``center`` as the list of bond labels outward."""
    legs = []
    for first in sorted(nbrs[center]):
        labels = [bonds[frozenset((center, first))]]
        prev, cur = center, first
        while True:
            nxt = [w for w in nbrs[cur] if w != prev]
            if len(nxt) != 1:
                if nxt:
                    return None
                break
            labels.append(bonds[frozenset((cur, nxt[0]))])
            prev, cur = cur, nxt[0]
        legs.append(labels)
    return legs


def _match_path(seq: list) -> ComponentType:
    n = len(seq) + 1
    for s in (seq, seq[::-1]):
        if all(x == 3 for x in s):
            return finite_type("A", n)
        if n == 2:
            return finite_type("I2", 2, int(s[0]))
        if n >= 3 and s[0] == 4 and all(x == 3 for x in s[1:]):
            return finite_type("B", n)
        if s == [3, 4, 3]:
            return finite_type("F", 4)
        if s == [5, 3]:
            return finite_type("H", 3)
        if s == [5, 3, 3]:
            return finite_type("H", 4)
        if n >= 3 and s[0] == 4 and s[-1] == 4 and all(x == 3 for x in s[1:-1]):
            return ComponentType(AFFINE, "C", n - 1)
        if s == [6, 3]:
            return ComponentType(AFFINE, "G", 2)
        if s == [3, 3, 4, 3]:
            return ComponentType(AFFINE, "F", 4)
    return ComponentType(OTHER)


def recognize_component(g: CoxeterGraph) -> ComponentType:
    """Finite or affine type of an irreducible Coxeter graph, else other-infinite."""
    if len(irreducible_components(g)) > 1:
        raise ValueError("recognize_component expects an irreducible graph")
    n = len(g)
    if n == 0:
        raise ValueError("empty graph has no component type")
    if n == 1:
        return finite_type("A", 1)
    raw = diagram_bonds(g)
    if any(m == INF for m in raw.values()):
        return ComponentType(AFFINE, "A", 1) if n == 2 else ComponentType(OTHER)
    bonds = {frozenset(k): m for k, m in raw.items()}
    nbrs = {v: set() for v in g.vertices}
    for u, v in raw:
        nbrs[u].add(v)
        nbrs[v].add(u)
    degree = {v: len(nbrs[v]) for v in g.vertices}
    labels = list(bonds.values())

    if len(bonds) == n:
        # a connected graph with n edges is unicyclic; only pure cycles qualify
        if all(d == 2 for d in degree.values()) and all(m == 3 for m in labels):
            return ComponentType(AFFINE, "A", n - 1)
        return ComponentType(OTHER)
    if len(bonds) != n - 1:
        return ComponentType(OTHER)

    branch = sorted(v for v in g.vertices if degree[v] >= 3)
    if not branch:
        ends = sorted(v for v in g.vertices if degree[v] == 1)
        path = _path_order(nbrs, ends[0])
        seq = [bonds[frozenset(p)] for p in zip(path, path[1:])]
        return _match_path(seq)

    if len(branch) == 1:
        c = branch[0]
        legs = _legs(nbrs, bonds, c)
        if legs is None:
            return ComponentType(OTHER)
        if degree[c] == 4:
            if all(leg == [3] for leg in legs):
                return ComponentType(AFFINE, "D", 4)
            return ComponentType(OTHER)
        if degree[c] != 3:
            return ComponentType(OTHER)
        if all(m == 3 for m in labels):
            shape = tuple(sorted(len(leg) for leg in legs))
            if shape[0] == 1 and shape[1] == 1:
                return finite_type("D", n)
            named = {
                (1, 2, 2): finite_type("E", 6),
                (1, 2, 3): finite_type("E", 7),
                (1, 2, 4): finite_type("E", 8),
                (2, 2, 2): ComponentType(AFFINE, "E", 6),
                (1, 3, 3): ComponentType(AFFINE, "E", 7),
                (1, 2, 5): ComponentType(AFFINE, "E", 8),
            }
            return named.get(shape, ComponentType(OTHER))
        # ~B_{n-1}: fork of two short legs, long leg ending in a 4-bond
        short = [leg for leg in legs if leg == [3]]
        long_ = [leg for leg in legs if leg != [3]]
        if len(short) == 2 and len(long_) == 1:
            tail = long_[0]
            if tail[-1] == 4 and all(x == 3 for x in tail[:-1]):
                return ComponentType(AFFINE, "B", n - 1)
        return ComponentType(OTHER)

    if len(branch) == 2 and all(m == 3 for m in labels):
        if all(degree[b] == 3 for b in branch):
            leaves_ok = all(
                sum(1 for w in nbrs[b] if degree[w] == 1) == 2 for b in branch
            )
            if leaves_ok and n >= 6:
                return ComponentType(AFFINE, "D", n - 1)
    return ComponentType(OTHER)


def component_types(g: CoxeterGraph) -> list[tuple[tuple[str, ...], ComponentType]]:
    return [(c, recognize_component(induced_subgraph(g, c))) for c in irreducible_components(g)]


def group_order(g: CoxeterGraph) -> int | None:
    """|W_Gamma|, or None when infinite."""
    order = 1
    for _, t in component_types(g):
        if not t.is_finite:
            return None
        order *= t.order
    return order


def is_finite(g: CoxeterGraph) -> bool:
    return group_order(g) is not None


def is_virtually_abelian(g: CoxeterGraph) -> bool:
    return all(t.kind in (FINITE, AFFINE) for _, t in component_types(g))


def is_large(g: CoxeterGraph) -> bool:
    # every Coxeter group is virtually abelian or large
    return not is_virtually_abelian(g)


def center(g: CoxeterGraph) -> CenterDescriptor:
    contributing = tuple(c for c, t in component_types(g) if t.has_central_longest_element())
    return CenterDescriptor(2 ** len(contributing), contributing)


def has_property_FA(g: CoxeterGraph) -> bool:
    return is_complete(g)


# --- standard graphs ------------------------------------------------------


def type_graph(family: str, rank: int, m: int | None = None, affine: bool = False) -> CoxeterGraph:
    """The Coxeter graph (commuting pairs labelled 2) of a named type.

    Vertices are ``s1 .. sn``.
    """
    names = [f"s{i}" for i in range(1, (rank + 1 if affine else rank) + 1)]
    bonds: dict[tuple[int, int], int] = {}

    def path(idx, labels):
        for (a, b), lab in zip(zip(idx, idx[1:]), labels):
            bonds[(a, b)] = lab

    n = len(names)
    if not affine:
        if family == "A":
            path(range(n), [3] * (n - 1))
        elif family == "B":
            path(range(n), [4] + [3] * (n - 2))
        elif family == "D":
            path(range(n - 1), [3] * (n - 2))
            bonds[(1, n - 1)] = 3
        elif family == "E":
            path(range(n - 1), [3] * (n - 2))
            bonds[(2, n - 1)] = 3
        elif family == "F":
            path(range(4), [3, 4, 3])
        elif family == "H":
            path(range(n), [5] + [3] * (n - 2))
        elif family == "I2":
            path(range(2), [m])
        else:
            raise ValueError(f"unknown finite family {family}")
    else:
        if family == "A":
            if rank == 1:
                return CoxeterGraph(names, [])
            path(range(n), [3] * (n - 1))
            bonds[(0, n - 1)] = 3
        elif family == "B":
            path(range(n - 1), [3] * (n - 3) + [4])
            bonds[(1, n - 1)] = 3
        elif family == "C":
            path(range(n), [4] + [3] * (n - 3) + [4])
        elif family == "D":
            path(range(n - 2), [3] * (n - 3))
            bonds[(1, n - 2)] = 3
            bonds[(n - 4, n - 1)] = 3
        elif family == "E":
            legs = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}[rank]
            nxt = 1
            for length in legs:
                prev = 0
                for _ in range(length):
                    bonds[(prev, nxt)] = 3
                    prev, nxt = nxt, nxt + 1
        elif family == "F":
            path(range(5), [3, 3, 4, 3])
        elif family == "G":
            path(range(3), [6, 3])
        else:
            raise ValueError(f"unknown affine family {family}")

    edges = []
    for i, j in itertools.combinations(range(n), 2):
        lab = bonds.get((i, j), bonds.get((j, i), 2))
        edges.append((names[i], names[j], lab))
    return CoxeterGraph(names, edges)


def finite_irreducible_types(rank_limit: int, max_dihedral: int = 12) -> list[ComponentType]:
    """Every finite irreducible type up to ``rank_limit`` (dihedral labels up to ``max_dihedral``)."""
    out = []
    for n in range(1, rank_limit + 1):
        out.append(finite_type("A", n))
        if n == 2:
            out.extend(finite_type("I2", 2, m) for m in range(4, max_dihedral + 1))
        if n >= 3:
            out.append(finite_type("B", n))
        if n >= 4:
            out.append(finite_type("D", n))
        if n in (6, 7, 8):
            out.append(finite_type("E", n))
        if n == 4:
            out.append(finite_type("F", 4))
        if n in (3, 4):
            out.append(finite_type("H", n))
    return out


def graph_of_type(t: ComponentType) -> CoxeterGraph:
    if t.kind == FINITE:
        return type_graph(t.family, t.rank, t.m)
    if t.kind == AFFINE:
        return type_graph(t.family, t.rank, affine=True)
    raise ValueError("other-infinite has no standard graph")
