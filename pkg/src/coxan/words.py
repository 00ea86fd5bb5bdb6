"""Concrete realization of W_Gamma through its geometric representation.

Every generator s acts on the space spanned by simple roots alpha_v by
x -> x - 2 B(alpha_s, x) alpha_s with B(alpha_u, alpha_v) = -cos(pi/m) on
an edge of label m and -1 on non-adjacent pairs.  All numbers live in one
cyclotomic field Q(zeta_N), N = lcm(4, 2m over all labels), so equality
of group elements is exact matrix equality.  The representation is
faithful, which makes that equality a decision procedure for the word
problem.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from coxan.cyclotomic import CycloNumber, cyclotomic_field
from coxan.graph import CoxeterGraph


class CapExceeded(RuntimeError):
    """Enumeration grew past its cap: the group is infinite or the cap too small."""


class NotFiniteType(RuntimeError):
    pass


class HypothesisViolated(ValueError):
    pass


class GroupElement:
    """A group element: its exact matrix plus one word that produces it.

    Two elements are equal iff their matrices are; the witness word takes
    no part in equality.
    """

    __slots__ = ("matrix", "word", "_hash")

    def __init__(self, matrix: tuple[tuple[CycloNumber, ...], ...], word: tuple[int, ...]):
        self.matrix = matrix
        self.word = word
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.matrix)
        return self._hash

    def __repr__(self):
        return f"GroupElement(word={self.word})"

    def column(self, j: int) -> tuple[CycloNumber, ...]:
        return tuple(row[j] for row in self.matrix)


def vector_sign(vec) -> int:
    """+1 if all entries are >= 0 (one strictly), -1 if all <= 0, 0 for the zero vector.

    Raises ValueError on mixed signs, which no root can have.
    """
    pos = neg = False
    for x in vec:
        s = x.sign()
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
        if pos and neg:
            raise ValueError(f"vector has mixed signs: {vec!r}")
    return 1 if pos else (-1 if neg else 0)


@dataclass(frozen=True)
class Root:
    coords: tuple[CycloNumber, ...]
    positive: bool

    def __post_init__(self):
        sign = vector_sign(self.coords)
        if sign == 0 or (sign > 0) != self.positive:
            raise ValueError(f"inconsistent root {self.coords!r}")


class CoxeterGroup:
    """W_Gamma for a Coxeter graph, with exact matrices in Q(zeta_N)."""

    def __init__(self, graph: CoxeterGraph):
        self.graph = graph
        self.names = graph.vertices
        self.index = {v: i for i, v in enumerate(self.names)}
        n = self.rank = len(self.names)
        self.conductor = math.lcm(4, *(2 * m for _, _, m in graph.edges()))
        field = self.field = cyclotomic_field(self.conductor)

        form = [[field.zero] * n for _ in range(n)]
        for i in range(n):
            form[i][i] = field.one
            for j in range(i + 1, n):
                m = graph.label(self.names[i], self.names[j])
                b = field.from_rational(-1) if m is None else -field.cos_pi_over(m)
                form[i][j] = form[j][i] = b
        self.form = tuple(tuple(r) for r in form)
        # coefficient rows -2B(alpha_s, alpha_k); these are algebraic integers
        self._coef = tuple(tuple(b * -2 for b in row) for row in self.form)
        self._support = tuple(tuple(k for k in range(n) if self._coef[s][k]) for s in range(n))

        identity = tuple(
            tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
        )
        self.identity = GroupElement(identity, ())
        self.generators = tuple(self.right_mul(self.identity, s) for s in range(n))
        self._elements: tuple[GroupElement, ...] | None = None
        self._roots: tuple[Root, ...] | None = None

    def __repr__(self):
        return f"CoxeterGroup({self.graph!r})"

    # --- elementary products -------------------------------------------

    def _index_of(self, letter) -> int:
        if isinstance(letter, str):
            try:
                return self.index[letter]
            except KeyError:
                raise ValueError(f"unknown generator {letter!r}") from None
        if not 0 <= letter < self.rank:
            raise ValueError(f"generator index {letter} out of range")
        return letter

    def right_mul(self, a: GroupElement, s: int) -> GroupElement:
        """a * s.  Column k picks up c[s][k] times column s."""
        coef, supp = self._coef[s], self._support[s]
        rows = []
        for row in a.matrix:
            x = row[s]
            if x.is_zero():
                rows.append(row)
                continue
            new = list(row)
            for k in supp:
                new[k] = row[k] + x * coef[k]
            rows.append(tuple(new))
        return GroupElement(tuple(rows), a.word + (s,))

    def left_mul(self, s: int, a: GroupElement) -> GroupElement:
        """s * a.  Only row s changes."""
        coef, supp = self._coef[s], self._support[s]
        m = a.matrix
        new_row = list(m[s])
        for k in supp:
            ck = coef[k]
            for j, y in enumerate(m[k]):
                if not y.is_zero():
                    new_row[j] = new_row[j] + ck * y
        rows = list(m)
        rows[s] = tuple(new_row)
        return GroupElement(tuple(rows), (s,) + a.word)

    def element_of(self, word) -> GroupElement:
        el = self.identity
        for letter in word:
            el = self.right_mul(el, self._index_of(letter))
        return el

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        el = a
        for s in b.word:
            el = self.right_mul(el, s)
        return el

    def inverse(self, a: GroupElement) -> GroupElement:
        return self.element_of(reversed(a.word))

    def conjugate(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """a * b * a^-1."""
        return self.multiply(self.multiply(a, b), self.inverse(a))

    def commutes(self, a: GroupElement, s: int) -> bool:
        return self.right_mul(a, s) == self.left_mul(s, a)

    # --- lengths and descents -------------------------------------------

    def is_positive_image(self, a: GroupElement, s: int) -> bool:
        """Whether a(alpha_s) is a positive root, i.e. l(a s) > l(a)."""
        return vector_sign(a.column(s)) > 0

    def is_reduced(self, word) -> bool:
        el = self.identity
        for letter in word:
            s = self._index_of(letter)
            if not self.is_positive_image(el, s):
                return False
            el = self.right_mul(el, s)
        return True

    def _descent_word(self, a: GroupElement) -> tuple[int, ...]:
        """A reduced word for ``a``, found by stripping right descents."""
        letters = []
        el = GroupElement(a.matrix, ())
        while True:
            for s in range(self.rank):
                if not self.is_positive_image(el, s):
                    el = self.right_mul(el, s)
                    letters.append(s)
                    break
            else:
                break
        if el != self.identity:
            raise AssertionError("descent did not reach the identity")
        return tuple(reversed(letters))

    def in_special_subgroup(self, a: GroupElement, subset) -> bool:
        """Membership in W_S: a reduced word only uses letters of S."""
        allowed = {self._index_of(v) for v in subset}
        return set(self._descent_word(a)) <= allowed

    # --- enumeration ----------------------------------------------------

    def enumerate(self, cap: int) -> tuple[GroupElement, ...]:
        """All elements in breadth-first order, or CapExceeded past ``cap``."""
        if cap < 1:
            raise ValueError("cap must be at least 1")
        if self._elements is not None:
            if len(self._elements) > cap:
                raise CapExceeded(f"group has {len(self._elements)} elements, above cap {cap}")
            return self._elements
        seen = {self.identity}
        order = [self.identity]
        queue = deque(order)
        while queue:
            a = queue.popleft()
            for s in range(self.rank):
                b = self.right_mul(a, s)
                if b not in seen:
                    seen.add(b)
                    order.append(b)
                    if len(order) > cap:
                        raise CapExceeded(f"group exceeds cap {cap} (infinite or raise the cap)")
                    queue.append(b)
        self._elements = tuple(order)
        return self._elements

    def subgroup(self, subset, cap: int) -> tuple[GroupElement, ...]:
        """Elements of the subgroup generated by ``subset``, breadth-first."""
        gens = sorted({self._index_of(v) for v in subset})
        seen = {self.identity}
        order = [self.identity]
        queue = deque(order)
        while queue:
            a = queue.popleft()
            for s in gens:
                b = self.right_mul(a, s)
                if b not in seen:
                    seen.add(b)
                    order.append(b)
                    if len(order) > cap:
                        raise CapExceeded(f"subgroup exceeds cap {cap}")
                    queue.append(b)
        return tuple(order)

    def ball(self, radius: int) -> tuple[GroupElement, ...]:
        """Distinct elements of word length <= radius, breadth-first."""
        seen = {self.identity}
        layer = [self.identity]
        order = [self.identity]
        for _ in range(radius):
            nxt = []
            for a in layer:
                for s in range(self.rank):
                    if a.word and a.word[-1] == s:
                        continue
                    b = self.right_mul(a, s)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            order.extend(nxt)
            layer = nxt
        return tuple(order)

    def cayley_table(self, elements) -> list[list[int]]:
        """``table[i][s]`` is the index of elements[i] * s."""
        pos = {el: i for i, el in enumerate(elements)}
        return [[pos[self.right_mul(a, s)] for s in range(self.rank)] for a in elements]

    def center_elements(self, cap: int) -> tuple[GroupElement, ...]:
        """Exhaustive center of a finite group."""
        return tuple(
            a for a in self.enumerate(cap) if all(self.commutes(a, s) for s in range(self.rank))
        )

    # --- roots ----------------------------------------------------------

    def reflect(self, s: int, vec):
        coef = self._coef[s]
        new = vec[s]
        for k in self._support[s]:
            new = new + coef[k] * vec[k]
        return vec[:s] + (new,) + vec[s + 1 :]

    def root_system(self) -> tuple[Root, ...]:
        if self._roots is not None:
            return self._roots
        n = self.rank
        bound = 10 * n * n
        field = self.field
        simple = [
            tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
        ]
        seen = set(simple)
        order = list(simple)
        queue = deque(simple)
        while queue:
            vec = queue.popleft()
            for s in range(n):
                w = self.reflect(s, vec)
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    if len(order) > bound:
                        raise NotFiniteType(f"more than {bound} roots; group is not of finite type")
                    queue.append(w)
        self._roots = tuple(Root(v, vector_sign(v) > 0) for v in order)
        return self._roots

    def longest_element(self) -> GroupElement:
        """Greedy ascent: keep multiplying by any s with l(ws) > l(w)."""
        npos = sum(r.positive for r in self.root_system())
        w = self.identity
        while True:
            for s in range(self.rank):
                if self.is_positive_image(w, s):
                    w = self.right_mul(w, s)
                    break
            else:
                return w
            if len(w.word) > npos:
                raise AssertionError("ascent exceeded the number of positive roots")

    def minus_identity_test(self) -> bool:
        """Whether the longest element acts as -identity."""
        w0 = self.longest_element()
        n = self.rank
        return all(
            w0.matrix[i][j] == (-1 if i == j else 0) for i in range(n) for j in range(n)
        )

    # --- presentation ---------------------------------------------------

    def relators(self) -> list[tuple[str, tuple[str, ...]]]:
        """The defining relators v^2 and (uv)^m, named for reporting."""
        rels = [(f"{v}^2", (v, v)) for v in self.names]
        rels += [(f"({u} {v})^{m}", (u, v) * m) for u, v, m in self.graph.edges()]
        return rels


@lru_cache(maxsize=256)
def coxeter_group(g: CoxeterGraph) -> CoxeterGroup:
    return CoxeterGroup(g)


def geometric_rep(g: CoxeterGraph) -> list[tuple[tuple[CycloNumber, ...], ...]]:
    """Generator matrices, in vertex order."""
    return [el.matrix for el in coxeter_group(g).generators]


def element_of(g: CoxeterGraph, word) -> GroupElement:
    return coxeter_group(g).element_of(word)


def equal(a: GroupElement, b: GroupElement) -> bool:
    return a.matrix == b.matrix


def is_reduced(g: CoxeterGraph, word) -> bool:
    return coxeter_group(g).is_reduced(word)


def enumerate_group(g: CoxeterGraph, cap: int) -> tuple[GroupElement, ...]:
    return coxeter_group(g).enumerate(cap)


def root_system(g: CoxeterGraph) -> tuple[Root, ...]:
    return coxeter_group(g).root_system()


def longest_element(g: CoxeterGraph) -> GroupElement:
    return coxeter_group(g).longest_element()


def minus_identity_test(g: CoxeterGraph) -> bool:
    return coxeter_group(g).minus_identity_test()


def element_order(group: CoxeterGroup, a: GroupElement, limit: int) -> int | None:
    """Multiplicative order of ``a`` if at most ``limit``, else None."""
    p = a
    for k in range(1, limit + 1):
        if p == group.identity:
            return k
        p = group.multiply(p, a)
    return None


# --- retraction onto <v> * <w> --------------------------------------------


def check_retraction_hypothesis(g: CoxeterGraph, v: str, w: str) -> None:
    from coxan.graph import is_even_vertex

    for x in (v, w):
        if x not in g:
            raise HypothesisViolated(f"unknown vertex {x}")
    if v == w:
        raise HypothesisViolated("retraction needs two distinct vertices")
    if g.adjacent(v, w):
        raise HypothesisViolated(f"{v} and {w} are adjacent")
    for x in (v, w):
        if not is_even_vertex(g, x):
            raise HypothesisViolated(f"{x} is not an even vertex")


def retract_word(word, v: str, w: str) -> tuple[str, ...]:
    """Kill letters outside {v, w}, then free-reduce in Z_2 * Z_2."""
    out: list[str] = []
    for x in word:
        if x != v and x != w:
            continue
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def retraction_image(g: CoxeterGraph, v: str, w: str, word) -> tuple[str, ...]:
    """Image of a word under the retraction W_Gamma -> <v> * <w>."""
    check_retraction_hypothesis(g, v, w)
    for x in word:
        if x not in g:
            raise ValueError(f"unknown generator {x!r}")
    return retract_word(word, v, w)


def parse_word(text: str) -> tuple[str, ...]:
    return tuple(text.split())
