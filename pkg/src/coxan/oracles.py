"""Brute-force checks of structural facts about special subgroups.

Each check returns a VerificationOutcome.  Finite groups are examined
exhaustively; statements about infinite groups are only checked on
bounded balls, and the outcome says so.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from coxan import classify
from coxan.graph import CoxeterGraph, induced_subgraph, maximal_cliques
from coxan.words import (
    CapExceeded,
    CoxeterGroup,
    check_retraction_hypothesis,
    coxeter_group,
    retract_word,
)

DEFAULT_CAP = 10000
DEFAULT_RADIUS = 8

VERIFIED, REFUTED, SKIPPED = "verified", "refuted", "skipped"


def default_cap() -> int:
    env = os.environ.get("COXAN_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class VerificationOutcome:
    property: str
    instance: str
    status: str
    elements_examined: int = 0
    witness: str | None = None
    reason: str | None = None

    def __post_init__(self):
        if self.status not in (VERIFIED, REFUTED, SKIPPED):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == REFUTED and not self.witness:
            raise ValueError("a refutation must carry a witness")
        if self.status == SKIPPED and not self.reason:
            raise ValueError("a skip must carry a reason")

    @property
    def ok(self) -> bool:
        return self.status != REFUTED

    def line(self) -> str:
        out = f"{self.status:<9} {self.property} [{self.instance}] examined={self.elements_examined}"
        if self.witness:
            out += f" witness: {self.witness}"
        if self.reason:
            out += f" ({self.reason})"
        return out


def describe(g: CoxeterGraph) -> str:
    edges = " ".join(f"{u}{v}:{m}" for u, v, m in g.edges())
    return f"V={{{','.join(g.vertices)}}} E={{{edges}}}"


# --- Todd-Coxeter ---------------------------------------------------------


class CosetTable:
    """Regular permutation action of W_Gamma built from its presentation.

    Coset enumeration over the trivial subgroup using only the relators
    v^2 and (uv)^m, independent of any linear representation.  Coset 0 is
    the identity.
    """

    def __init__(self, g: CoxeterGraph, max_cosets: int = 200000):
        names = list(g.vertices)
        idx = {v: i for i, v in enumerate(names)}
        ngens = len(names)
        rels = [(i, i) for i in range(ngens)]
        rels += [(idx[u], idx[v]) * m for u, v, m in g.edges()]

        ident: list[int] = []
        nbr: list[list[int | None]] = []

        def find(c):
            while ident[c] != c:
                ident[c] = ident[ident[c]]
                c = ident[c]
            return c

        def new():
            c = len(ident)
            if c >= max_cosets:
                raise CapExceeded(f"coset enumeration exceeded {max_cosets} cosets")
            ident.append(c)
            nbr.append([None] * ngens)
            return c

        def unify(a, b):
            pending = [(a, b)]
            while pending:
                a, b = pending.pop()
                a, b = find(a), find(b)
                if a == b:
                    continue
                a, b = min(a, b), max(a, b)
                ident[b] = a
                for d in range(ngens):
                    nb = nbr[b][d]
                    if nb is None:
                        continue
                    na = nbr[a][d]
                    if na is None:
                        nbr[a][d] = nb
                    else:
                        pending.append((na, nb))

        def follow(c, d):
            c = find(c)
            nxt = nbr[c][d]
            if nxt is None:
                nxt = new()
                nbr[c][d] = nxt
                nbr[nxt][d] = c
            return find(nxt)

        new()
        i = 0
        while i < len(ident):
            if find(i) == i:
                for rel in rels:
                    c = i
                    for d in rel:
                        c = follow(c, d)
                    unify(c, i)
                    if find(i) != i:
                        break
            i += 1

        live = [c for c in range(len(ident)) if find(c) == c]
        pos = {c: k for k, c in enumerate(live)}
        self.names = names
        self.index = idx
        self.order = len(live)
        self.table = [[pos[find(nbr[c][d])] for d in range(ngens)] for c in live]

    def coset_of(self, word) -> int:
        c = 0
        for letter in word:
            c = self.table[c][self.index[letter] if isinstance(letter, str) else letter]
        return c


# --- special subgroups --------------------------------------------------


def verify_special_subgroup(g: CoxeterGraph, subset, cap: int | None = None) -> VerificationOutcome:
    """|<S>| inside W_Gamma equals the order of the abstract group W_<S>."""
    cap = default_cap() if cap is None else cap
    s = tuple(sorted(subset))
    name = f"{describe(g)} S={{{','.join(s)}}}"
    group = coxeter_group(g)
    try:
        total = group.enumerate(cap)
    except CapExceeded as exc:
        return VerificationOutcome("special-subgroup", name, SKIPPED, reason=str(exc))
    expected = classify.group_order(induced_subgraph(g, s))
    if expected is None:
        return VerificationOutcome(
            "special-subgroup", name, REFUTED, len(total),
            witness=f"<S> lies in a finite group but W_<S> is classified infinite",
        )
    sub = group.subgroup(s, cap)
    if len(sub) != expected:
        return VerificationOutcome(
            "special-subgroup", name, REFUTED, len(total),
            witness=f"|<S>| = {len(sub)} but |W_<S>| = {expected}",
        )
    return VerificationOutcome("special-subgroup", name, VERIFIED, len(total))


def _subgroup_set(group: CoxeterGroup, subset, cap):
    return frozenset(group.subgroup(subset, cap))


def verify_clique_normalizer(g: CoxeterGraph, cap: int | None = None) -> VerificationOutcome:
    """Nor(W_D) = W_D and Z_W(W_D) = Z(W_D) for every maximal clique D."""
    cap = default_cap() if cap is None else cap
    name = describe(g)
    group = coxeter_group(g)
    try:
        elements = group.enumerate(cap)
    except CapExceeded as exc:
        return VerificationOutcome("normalizer", name, SKIPPED, reason=f"infinite or over cap: {exc}")
    examined = 0
    for clique in maximal_cliques(g):
        gens = [group.index[v] for v in clique.vertices]
        w_delta = _subgroup_set(group, clique.vertices, cap)
        normalizer, centralizer = set(), set()
        for a in elements:
            examined += 1
            a_inv = group.inverse(a)
            if all(
                group.multiply(group.right_mul(a, s), a_inv) in w_delta for s in gens
            ):
                normalizer.add(a)
            if all(group.commutes(a, s) for s in gens):
                centralizer.add(a)
        inner_center = {a for a in w_delta if all(group.commutes(a, s) for s in gens)}
        label = "{" + ",".join(clique.vertices) + "}"
        if normalizer != w_delta:
            extra = sorted((a for a in normalizer - w_delta), key=lambda a: a.word)
            return VerificationOutcome(
                "normalizer", name, REFUTED, examined,
                witness=f"Nor(W_{label}) has {len(normalizer)} elements, W_{label} has {len(w_delta)};"
                f" extra element word {[group.names[i] for i in extra[0].word] if extra else []}",
            )
        if centralizer != inner_center:
            return VerificationOutcome(
                "normalizer", name, REFUTED, examined,
                witness=f"Z_W(W_{label}) has {len(centralizer)} elements, Z(W_{label}) has {len(inner_center)}",
            )
    return VerificationOutcome("normalizer", name, VERIFIED, examined)


def _conjugates_onto(group: CoxeterGroup, a, src, dst) -> bool:
    """Whether a W_src a^-1 = W_dst, using root supports.

    a s a^-1 is the reflection in the root a(alpha_s); a reflection lies in
    W_dst exactly when its root is supported on dst.
    """
    dst_idx = {group.index[v] for v in dst}
    src_idx = {group.index[v] for v in src}
    for v in src:
        col = a.column(group.index[v])
        if any(not x.is_zero() for k, x in enumerate(col) if k not in dst_idx):
            return False
    a_inv = group.inverse(a)
    for v in dst:
        col = a_inv.column(group.index[v])
        if any(not x.is_zero() for k, x in enumerate(col) if k not in src_idx):
            return False
    return True


def verify_clique_conjugacy_separation(
    g: CoxeterGraph, cap: int | None = None, radius: int = DEFAULT_RADIUS
) -> VerificationOutcome:
    """Distinct maximal cliques never have conjugate special subgroups.

    Exhaustive over all conjugators when W_Gamma is finite; otherwise over
    the ball of the given radius, which only rules out short
    counterexamples.
    """
    cap = default_cap() if cap is None else cap
    name = describe(g)
    group = coxeter_group(g)
    cliques = maximal_cliques(g)
    order = classify.group_order(g)
    if order is not None and order <= cap:
        conjugators = group.enumerate(cap)
        scope = "all elements"
    else:
        conjugators = group.ball(radius)
        scope = f"ball of radius {radius}"
    pairs = [(d, l) for d, l in itertools.permutations(cliques, 2)]
    if not pairs:
        return VerificationOutcome(
            "conjugacy", name, VERIFIED, 0, reason="single maximal clique; vacuous"
        )
    examined = 0
    for a in conjugators:
        examined += 1
        for d, l in pairs:
            if len(d) != len(l):
                continue
            if _conjugates_onto(group, a, d.vertices, l.vertices):
                word = [group.names[i] for i in a.word]
                return VerificationOutcome(
                    "conjugacy", name, REFUTED, examined,
                    witness=f"a={word} conjugates W_{{{','.join(d)}}} onto W_{{{','.join(l)}}}",
                )
    return VerificationOutcome(
        "conjugacy", name, VERIFIED, examined,
        reason=None if scope == "all elements" else f"no counterexample in the {scope}",
    )


# --- retraction ------------------------------------------------------


def verify_retraction(
    g: CoxeterGraph,
    v: str,
    w: str,
    relator_sweep: bool = True,
    ball_radius: int = 3,
    enforce_hypothesis: bool = True,
) -> VerificationOutcome:
    """Check the retraction W_Gamma -> <v> * <w> that kills every other generator.

    (a) every defining relator maps to the empty word, (b) v and w map to
    themselves, (c) conjugates u x u^-1 of generators x outside {v, w} by
    words u of length <= ``ball_radius`` map to the empty word.  Equality
    of the kernel with the normal closure is not checked.

    With ``enforce_hypothesis=False`` the checks run even when v, w are
    not non-adjacent even vertices, which is how failures are exhibited.
    """
    if enforce_hypothesis:
        check_retraction_hypothesis(g, v, w)
    name = f"{describe(g)} v={v} w={w}"
    group = coxeter_group(g)
    examined = 0
    if relator_sweep:
        for rel_name, rel in group.relators():
            examined += 1
            image = retract_word(rel, v, w)
            if image:
                return VerificationOutcome(
                    "retraction", name, REFUTED, examined,
                    witness=f"relator {rel_name} maps to {' '.join(image)}",
                )
    for x in (v, w):
        examined += 1
        if retract_word((x,), v, w) != (x,):
            return VerificationOutcome(
                "retraction", name, REFUTED, examined, witness=f"{x} is not fixed"
            )
    others = [x for x in g.vertices if x not in (v, w)]
    for length in range(ball_radius + 1):
        for u in itertools.product(g.vertices, repeat=length):
            if any(a == b for a, b in zip(u, u[1:])):
                continue
            for x in others:
                examined += 1
                word = u + (x,) + tuple(reversed(u))
                image = retract_word(word, v, w)
                if image:
                    return VerificationOutcome(
                        "retraction", name, REFUTED, examined,
                        witness=f"kernel generator {' '.join(word)} maps to {' '.join(image)}",
                    )
    return VerificationOutcome(
        "retraction", name, VERIFIED, examined,
        reason="kernel checked for inclusion only; equality with the normal closure not decided",
    )


# --- center table ---------------------------------------------------------


def center_table_outcomes(rank_limit: int, exhaustive_limit: int = 400) -> list[VerificationOutcome]:
    """One outcome per finite irreducible type (plus A1^k products)."""
    if rank_limit > 8:
        raise ValueError("center table is validated up to rank 8")
    out = []
    instances = [(t.name, classify.graph_of_type(t)) for t in classify.finite_irreducible_types(rank_limit)]
    for k in range(2, min(rank_limit, 3) + 1):
        gk = CoxeterGraph(
            [f"s{i}" for i in range(1, k + 1)],
            [(f"s{i}", f"s{j}", 2) for i, j in itertools.combinations(range(1, k + 1), 2)],
        )
        instances.append(("A1^" + str(k), gk))
    for name, gr in instances:
        table = classify.center(gr).order
        group = coxeter_group(gr)
        # reducible instances: w0 = -1 iff every factor has w0 = -1
        oracle = 2 if group.minus_identity_test() else 1
        comps = classify.irreducible_components(gr)
        if len(comps) > 1:
            oracle = 1
            for c in comps:
                oracle *= 2 if coxeter_group(induced_subgraph(gr, c)).minus_identity_test() else 1
        examined = len(group.root_system())
        if oracle != table:
            out.append(VerificationOutcome(
                "center-table", name, REFUTED, examined,
                witness=f"table says |Z|={table}, longest-element test says {oracle}",
            ))
            continue
        order = classify.group_order(gr)
        if order <= exhaustive_limit:
            true_center = group.center_elements(order)
            examined += order
            if len(true_center) != table:
                out.append(VerificationOutcome(
                    "center-table", name, REFUTED, examined,
                    witness=f"table says |Z|={table}, exhaustive center has {len(true_center)}",
                ))
                continue
            w0 = group.longest_element()
            if table == 2 and set(true_center) != {group.identity, w0}:
                out.append(VerificationOutcome(
                    "center-table", name, REFUTED, examined,
                    witness="nontrivial center is not {1, w0}",
                ))
                continue
            out.append(VerificationOutcome("center-table", name, VERIFIED, examined))
        else:
            out.append(VerificationOutcome(
                "center-table", name, VERIFIED, examined,
                reason=f"|W|={order} > {exhaustive_limit}: root-system oracle only",
            ))
    return out


def verify_center_table(rank_limit: int = 8, exhaustive_limit: int = 400) -> VerificationOutcome:
    outcomes = center_table_outcomes(rank_limit, exhaustive_limit)
    examined = sum(o.elements_examined for o in outcomes)
    bad = [o for o in outcomes if o.status == REFUTED]
    name = f"finite irreducible types of rank <= {rank_limit}"
    if bad:
        return VerificationOutcome(
            "center-table", name, REFUTED, examined, witness=f"{bad[0].instance}: {bad[0].witness}"
        )
    return VerificationOutcome("center-table", name, VERIFIED, examined)
