"""Coxeter graphs: parsing, serialization and graph-theoretic predicates.

Convention (the one used throughout the package): an edge {u, v} with
label m >= 2 imposes (uv)^m = 1, and a missing edge means uv has
infinite order.  Label 2 therefore means "u and v commute".
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path


class GraphParseError(ValueError):
    """Malformed graph input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u < v else (v, u)


class CoxeterGraph:
    """A finite simplicial graph with integer edge labels >= 2.

    Vertices are kept in sorted order; edges are stored under the sorted
    pair of their endpoints.  Instances are immutable and hashable.
    """

    __slots__ = ("_vertices", "_labels", "_adj", "_hash")

    def __init__(self, vertices, edges=()):
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            dup = sorted(v for v in set(verts) if verts.count(v) > 1)
            raise ValueError(f"duplicate vertex: {dup[0]}")
        for v in verts:
            if not isinstance(v, str) or not v or any(ch.isspace() for ch in v):
                raise ValueError(f"invalid vertex name: {v!r}")
        self._vertices = tuple(sorted(verts))
        vset = set(verts)
        labels: dict[tuple[str, str], int] = {}
        if isinstance(edges, dict):
            items = [(u, v, m) for (u, v), m in edges.items()]
        else:
            items = [tuple(e) if len(e) == 3 else (e[0], e[1], 2) for e in edges]
        for u, v, m in items:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            for x in (u, v):
                if x not in vset:
                    raise ValueError(f"edge references undeclared vertex {x}")
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise ValueError(f"edge {u} {v}: label must be an integer >= 2, got {m!r}")
            key = _pair(u, v)
            if labels.get(key, m) != m:
                raise ValueError(f"edge {u} {v}: conflicting labels {labels[key]} and {m}")
            labels[key] = m
        self._labels = dict(sorted(labels.items()))
        adj: dict[str, set[str]] = {v: set() for v in self._vertices}
        for u, v in self._labels:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._hash = None

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def edges(self):
        """Iterate ``(u, v, m)`` with ``u < v`` in canonical order."""
        for (u, v), m in self._labels.items():
            yield u, v, m

    @property
    def num_edges(self) -> int:
        return len(self._labels)

    def label(self, u: str, v: str) -> int | None:
        """Edge label, or None when u and v are not adjacent."""
        return self._labels.get(_pair(u, v))

    def adjacent(self, u: str, v: str) -> bool:
        return _pair(u, v) in self._labels

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    def __eq__(self, other):
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._labels == other._labels

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, tuple(self._labels.items())))
        return self._hash

    def __repr__(self):
        edges = ", ".join(f"{u}-{v}:{m}" for u, v, m in self.edges())
        return f"CoxeterGraph([{', '.join(self._vertices)}]; {{{edges}}})"

    def relabel(self, mapping: dict[str, str]) -> "CoxeterGraph":
        """Rename vertices; ``mapping`` must be injective on the vertex set."""
        return CoxeterGraph(
            [mapping[v] for v in self._vertices],
            [(mapping[u], mapping[v], m) for u, v, m in self.edges()],
        )


@dataclass(frozen=True, order=True)
class Clique:
    vertices: tuple[str, ...]
    maximal: bool = False

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


# --- input / output --------------------------------------------------------


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the line-oriented ``.cox`` format.

    ``vertex <name>`` declares a vertex, ``edge <u> <v> [<label>]`` an edge
    (label defaults to 2), and ``#`` starts a comment.  Declarations may
    appear in any order.
    """
    vertices: list[str] = []
    seen: dict[str, int] = {}
    edges: list[tuple[str, str, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "vertex":
            if len(parts) != 2:
                raise GraphParseError("expected 'vertex <name>'", lineno)
            name = parts[1]
            if name in seen:
                raise GraphParseError(f"duplicate vertex {name} (first declared on line {seen[name]})", lineno)
            seen[name] = lineno
            vertices.append(name)
        elif kind == "edge":
            if len(parts) not in (3, 4):
                raise GraphParseError("expected 'edge <u> <v> [<label>]'", lineno)
            label = 2
            if len(parts) == 4:
                try:
                    label = int(parts[3])
                except ValueError:
                    raise GraphParseError(f"edge label must be an integer, got {parts[3]!r}", lineno) from None
            if label < 2:
                raise GraphParseError(f"edge label must be >= 2, got {label}", lineno)
            edges.append((parts[1], parts[2], label, lineno))
        else:
            raise GraphParseError(f"unknown declaration {kind!r}", lineno)

    labels: dict[tuple[str, str], tuple[int, int]] = {}
    for u, v, m, lineno in edges:
        if u == v:
            raise GraphParseError(f"self-loop at {u}", lineno)
        for x in (u, v):
            if x not in seen:
                raise GraphParseError(f"edge references undeclared vertex {x}", lineno)
        key = _pair(u, v)
        if key in labels and labels[key][0] != m:
            raise GraphParseError(
                f"edge {u} {v} redeclared with label {m} (label {labels[key][0]} on line {labels[key][1]})",
                lineno,
            )
        labels.setdefault(key, (m, lineno))
    return CoxeterGraph(vertices, [(u, v, m) for (u, v), (m, _) in labels.items()])


def parse_graph_json(text: str) -> CoxeterGraph:
    """Parse ``{"vertices": [...], "edges": [{"u":..,"v":..,"m":..}]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise GraphParseError("expected an object with a 'vertices' list")
    edges = []
    for e in doc.get("edges", []):
        if not isinstance(e, dict) or "u" not in e or "v" not in e:
            raise GraphParseError(f"malformed edge entry {e!r}")
        m = e.get("m", 2)
        if isinstance(m, bool) or not isinstance(m, int):
            raise GraphParseError(f"edge {e['u']} {e['v']}: label must be an integer, got {m!r}")
        edges.append((e["u"], e["v"], m))
    try:
        return CoxeterGraph(doc["vertices"], edges)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from None


def serialize_graph(g: CoxeterGraph) -> str:
    """Canonical ``.cox`` text; every edge is written with its label."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {u} {v} {m}" for u, v, m in g.edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(g: CoxeterGraph) -> str:
    doc = {
        "vertices": list(g.vertices),
        "edges": [{"u": u, "v": v, "m": m} for u, v, m in g.edges()],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_graph(path) -> CoxeterGraph:
    """Read a ``.cox`` or ``.json`` file, chosen by extension."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return parse_graph_json(text)
    return parse_graph(text)


# --- subgraphs and cliques -------------------------------------------------


def induced_subgraph(g: CoxeterGraph, subset) -> CoxeterGraph:
    """The full subgraph generated by ``subset``, labels preserved."""
    s = set(subset)
    unknown = s.difference(g.vertices)
    if unknown:
        raise ValueError(f"unknown vertex: {sorted(unknown)[0]}")
    return CoxeterGraph(s, [(u, v, m) for u, v, m in g.edges() if u in s and v in s])


def maximal_cliques(g: CoxeterGraph) -> list[Clique]:
    """All maximal cliques, each once, sorted by their vertex tuples.

    Bron-Kerbosch with Tomita pivoting.
    """
    found: list[tuple[str, ...]] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(p & g.neighbors(u)), u))
        for v in sorted(p - g.neighbors(pivot)):
            nv = g.neighbors(v)
            expand(r | {v}, p & nv, x & nv)
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return [Clique(c, maximal=True) for c in sorted(found)]


def is_clique(g: CoxeterGraph, subset) -> bool:
    return all(g.adjacent(u, v) for u, v in itertools.combinations(subset, 2))


def is_complete(g: CoxeterGraph) -> bool:
    n = len(g)
    return g.num_edges == n * (n - 1) // 2


def is_triangle_free(g: CoxeterGraph) -> bool:
    for u, v, _ in g.edges():
        if g.neighbors(u) & g.neighbors(v):
            return False
    return True


def is_even(g: CoxeterGraph) -> bool:
    return all(m % 2 == 0 for _, _, m in g.edges())


def is_right_angled(g: CoxeterGraph) -> bool:
    return all(m == 2 for _, _, m in g.edges())


def all_labels_at_least_3(g: CoxeterGraph) -> bool:
    """True when the graph has at least one edge and every label is >= 3.

    Edgeless graphs are excluded: their maximal cliques are single
    vertices, whose special subgroups Z_2 have nontrivial center.
    """
    return g.num_edges > 0 and all(m >= 3 for _, _, m in g.edges())


def is_even_vertex(g: CoxeterGraph, v: str) -> bool:
    return all(g.label(v, w) % 2 == 0 for w in g.neighbors(v))


def even_vertices(g: CoxeterGraph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if is_even_vertex(g, v))


def non_adjacent_even_pair(g: CoxeterGraph) -> tuple[str, str] | None:
    """Lexicographically least pair of distinct non-adjacent even vertices."""
    evens = sorted(even_vertices(g))
    for u, v in itertools.combinations(evens, 2):
        if not g.adjacent(u, v):
            return u, v
    return None
