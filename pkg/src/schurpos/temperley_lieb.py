"""The Temperley-Lieb algebra TL_n(xi) on noncrossing matchings.

Boundary labeling: vertices ``1..n`` run left to right along the bottom edge
and ``n+1..2n`` run right to left along the top edge, so the top vertex above
bottom vertex ``i`` is ``2n+1-i``.  In a product ``a*b`` the diagram of ``a``
sits below that of ``b``; a word ``t_{i1}...t_{il}`` therefore draws ``t_{i1}``
next to the bottom vertices.  With this labeling the strand of the wiring
diagram of ``w`` starting at top position ``i`` ends at bottom vertex ``w(i)``,
and ``t_1 t_3 t_2`` in TL_4 is the matching ``(1,2),(3,4),(5,8),(6,7)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import IndexSet


class Permutation(tuple):
    """One-line notation ``(w(1), ..., w(n))`` with values in ``1..n``.

    ``u * v`` is composition of functions: ``(u * v)(i) = u(v(i))``.
    """

    __slots__ = ()

    def __new__(cls, one_line: Iterable[int]):
        one_line = tuple(int(x) for x in one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"not a permutation of 1..{len(one_line)}: {one_line}")
        return super().__new__(cls, one_line)

    def __repr__(self):
        return f"Permutation({tuple(self)})"

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i <= n - 1:
            raise ValueError(f"s_{i} is not a generator of S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> Permutation:
        """``s_{i1} * s_{i2} * ... * s_{il}``."""
        w = list(range(1, n + 1))
        for i in word:
            if not 1 <= i <= n - 1:
                raise ValueError(f"generator index {i} out of range for S_{n}")
            # right multiplication by s_i swaps positions i, i+1
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(self[x - 1] for x in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        return sum(1 for i in range(len(self)) for j in range(i + 1, len(self)) if self[i] > self[j])

    def right_descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def left_multiply(self, i: int) -> Permutation:
        """``s_i * self``: swap the values ``i`` and ``i+1``."""
        return Permutation(i + 1 if x == i else i if x == i + 1 else x for x in self)

    def reduced_word(self) -> list[int]:
        """A reduced word, built by peeling off the smallest right descent."""
        w = list(self)
        word = []
        while True:
            for i in range(1, len(w)):
                if w[i - 1] > w[i]:
                    w[i - 1], w[i] = w[i], w[i - 1]
                    word.append(i)
                    break
            else:
                return word[::-1]

    def reduced_words(self) -> list[tuple[int, ...]]:
        return sorted(_reduced_words(self))

    def is_321_avoiding(self) -> bool:
        n = len(self)
        # w avoids 321 iff no middle entry has a larger entry before and a smaller one after
        for j in range(1, n - 1):
            if any(self[i] > self[j] for i in range(j)) and any(self[k] < self[j] for k in range(j + 1, n)):
                return False
        return True


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> frozenset[tuple[int, ...]]:
    descents = w.right_descents()
    if not descents:
        return frozenset({()})
    out = set()
    for i in descents:
        shorter = list(w)
        shorter[i - 1], shorter[i] = shorter[i], shorter[i - 1]
        out.update(word + (i,) for word in _reduced_words(Permutation(shorter)))
    return frozenset(out)


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def bruhat_le(x: Sequence[int], w: Sequence[int]) -> bool:
    """Bruhat order via the rank-matrix criterion."""
    n = len(w)
    for i in range(1, n + 1):
        xs = sorted(x[:i], reverse=True)
        ws = sorted(w[:i], reverse=True)
        if any(a > b for a, b in zip(xs, ws)):
            return False
    return True


# -- univariate integer polynomials --------------------------------------------

class Poly:
    """Integer polynomial in one variable, stored as a coefficient tuple (constant first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> Poly:
        return cls([0] * degree + [c])

    def __add__(self, other):
        other = _as_poly(other)
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (k - len(self.coeffs))
        b = other.coeffs + (0,) * (k - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def format(self, var: str = "xi") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            body = "" if d == 0 else var if d == 1 else f"{var}^{d}"
            if d and abs(c) == 1:
                term = body
            else:
                term = f"{abs(c)}*{body}" if body else str(abs(c))
            terms.append((c < 0, term))
        s = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, term in terms[1:]:
            s += (" - " if neg else " + ") + term
        return s

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


XiPolynomial = Poly


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


# -- matchings -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Matching:
    """Perfect noncrossing matching on ``[1, 2n]``; edges stored ``(small, large)`` and sorted."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        points = sorted(p for e in edges for p in e)
        if points != list(range(1, 2 * len(edges) + 1)):
            raise ValueError(f"not a perfect matching on [1, {2 * len(edges)}]: {edges}")
        for (a, c), (b, d) in itertools.combinations(edges, 2):
            if a < b < c < d or b < a < d < c:
                raise ValueError(f"edges {(a, c)} and {(b, d)} cross")

    @property
    def n(self) -> int:
        return len(self.edges)

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.edges:
            out[a] = b
            out[b] = a
        return out

    def __str__(self):
        return " ".join(f"({a},{b})" for a, b in self.edges)


NoncrossingMatching = Matching


def identity_matching(n: int) -> Matching:
    return Matching(tuple((i, 2 * n + 1 - i) for i in range(1, n + 1)))


def generator_matching(i: int, n: int) -> Matching:
    """Diagram of ``t_i``: caps joining positions ``i, i+1`` on both edges."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"t_{i} is not a generator of TL_{n}")
    edges = [(i, i + 1), (2 * n - i, 2 * n + 1 - i)]
    edges += [(j, 2 * n + 1 - j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return Matching(tuple(edges))


@lru_cache(maxsize=None)
def compose(lower: Matching, upper: Matching) -> tuple[Matching, int]:
    """Stack ``upper`` on top of ``lower``; return the matching and the number of closed loops."""
    n = lower.n
    if upper.n != n:
        raise ValueError("matchings live on different boundaries")
    lo, up = lower.partner(), upper.partner()
    # interface position p is lower's top vertex 2n+1-p and upper's bottom vertex p
    seen: set[int] = set()
    edges = []

    def walk(side: str, v: int) -> int:
        # follow a strand that has just entered `side` at vertex v; return the exit vertex
        while True:
            if side == "lower":
                w = lo[v]
                if w <= n:
                    return w
                p = 2 * n + 1 - w
                seen.add(p)
                side, v = "upper", p
            else:
                w = up[v]
                if w > n:
                    return w
                seen.add(w)
                side, v = "lower", 2 * n + 1 - w

    for v in range(1, n + 1):
        end = walk("lower", v)
        if v < end:
            edges.append((v, end))
    for v in range(n + 1, 2 * n + 1):
        end = walk("upper", v)
        if v < end and end > n:
            edges.append((v, end))
    loops = 0
    for p in range(1, n + 1):
        if p in seen:
            continue
        loops += 1
        q = p
        while True:
            seen.add(q)
            q = 2 * n + 1 - lo[2 * n + 1 - q]  # across the lower half
            seen.add(q)
            q = up[q]  # back across the upper half
            if q == p:
                break
    return Matching(tuple(edges)), loops


class TLElement:
    """Element of TL_n(xi): matchings with ``Poly`` coefficients in xi."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Matching, Poly] | None = None):
        self.n = n
        self.terms = {m: _as_poly(c) for m, c in (terms or {}).items() if _as_poly(c)}
        for m in self.terms:
            if m.n != n:
                raise ValueError(f"matching {m} does not belong to TL_{n}")

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls(n, {identity_matching(n): Poly([1])})

    @classmethod
    def generator(cls, i: int, n: int) -> TLElement:
        return cls(n, {generator_matching(i, n): Poly([1])})

    @classmethod
    def basis(cls, m: Matching) -> TLElement:
        return cls(m.n, {m: Poly([1])})

    def _check(self, other: TLElement):
        if self.n != other.n:
            raise ValueError(f"TL_{self.n} and TL_{other.n} elements cannot be combined")

    def __add__(self, other):
        if isinstance(other, int):
            other = TLElement.identity(self.n) * other
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Poly()) + c
        return TLElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return TLElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = TLElement.identity(self.n) * other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            return TLElement(self.n, {m: c * other for m, c in self.terms.items()})
        return tl_multiply(self, other)

    def __rmul__(self, other):
        return TLElement(self.n, {m: c * other for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TLElement) and self.n == other.n and self.terms == other.terms

    def evaluate(self, xi: int) -> dict[Matching, int]:
        out = {m: c(xi) for m, c in self.terms.items()}
        return {m: c for m, c in out.items() if c}

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c.format()})*[{m}]" for m, c in sorted(self.terms.items()))

    def __repr__(self):
        return f"TLElement({self.n}, {self.terms})"


def tl_multiply(a: TLElement, b: TLElement) -> TLElement:
    a._check(b)
    out: dict[Matching, Poly] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m, loops = compose(ma, mb)
            c = ca * cb * Poly.monomial(loops)
            out[m] = out.get(m, Poly()) + c
    return TLElement(a.n, out)


def tl_from_word(word: Sequence[int], n: int) -> TLElement:
    """The product ``t_{i1} ... t_{il}``, as a single matching times a power of xi."""
    m, loops = identity_matching(n), 0
    for i in word:
        m, extra = compose(m, generator_matching(i, n))
        loops += extra
    return TLElement(n, {m: Poly.monomial(loops)})


def catalan_basis(n: int) -> list[Matching]:
    """All noncrossing perfect matchings on ``[1, 2n]``, sorted."""
    return [Matching(edges) for edges in sorted(_noncrossing(1, 2 * n))]


@lru_cache(maxsize=None)
def _noncrossing(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if lo > hi:
        return ((),)
    out = []
    for j in range(lo + 1, hi + 1, 2):
        for inside in _noncrossing(lo + 1, j - 1):
            for outside in _noncrossing(j + 1, hi):
                out.append(((lo, j),) + inside + outside)
    return tuple(out)


def matching_of(w: Permutation) -> Matching:
    """Matching of the basis element ``t_w`` for a 321-avoiding ``w``."""
    if not w.is_321_avoiding():
        raise ValueError(f"{tuple(w)} is not 321-avoiding")
    (m,) = tl_from_word(w.reduced_word(), w.n).terms
    return m


@lru_cache(maxsize=None)
def _permutation_index(n: int) -> dict[Matching, Permutation]:
    return {matching_of(w): w for w in all_permutations(n) if w.is_321_avoiding()}


def permutation_of(m: Matching) -> Permutation:
    """The 321-avoiding permutation whose basis element has matching ``m``."""
    return _permutation_index(m.n)[m]


def theta_element(v: Permutation, word: Sequence[int] | None = None) -> TLElement:
    """``(t_{i1} - 1) ... (t_{il} - 1)`` in TL_n(xi) for a reduced word of ``v``."""
    word = v.reduced_word() if word is None else list(word)
    out = TLElement.identity(v.n)
    for i in word:
        out = out * (TLElement.generator(i, v.n) - 1)
    return out


def theta_expand(v: Permutation, word: Sequence[int] | None = None) -> dict[Matching, int]:
    """The coefficients ``f_w(v)`` of ``theta(T_v)`` in TL_n(2), keyed by matching."""
    if word is None:
        return dict(_theta_cached(Permutation(v)))
    if Permutation.from_word(word, len(v)) != v or len(word) != v.length():
        raise ValueError(f"{list(word)} is not a reduced word of {tuple(v)}")
    return theta_element(v, word).evaluate(2)


@lru_cache(maxsize=None)
def _theta_cached(v: Permutation) -> tuple[tuple[Matching, int], ...]:
    return tuple(sorted(theta_element(v).evaluate(2).items()))


def is_s_compatible(m: Matching, s: IndexSet | Iterable[int]) -> bool:
    """Every edge has exactly one endpoint in ``s``."""
    members = set(s)
    return all((a in members) != (b in members) for a, b in m.edges)


def theta_set(s: IndexSet | Iterable[int], n: int) -> list[Matching]:
    members = set(s)
    if len(members) != n:
        return []
    return [m for m in catalan_basis(n) if is_s_compatible(m, members)]


# -- Kazhdan-Lusztig polynomials (small-n cross-check only) --------------------

KL_MAX_N = 5


@dataclass
class KLTable:
    n: int
    polys: dict[tuple[Permutation, Permutation], Poly]

    def P(self, x: Sequence[int], w: Sequence[int]) -> Poly:
        return self.polys.get((Permutation(x), Permutation(w)), Poly())

    def Q(self, v: Sequence[int], w: Sequence[int]) -> Poly:
        """``Q_{v,w} = P_{w0 w, w0 v}``."""
        w0 = Permutation(range(self.n, 0, -1))
        return self.P(w0 * Permutation(w), w0 * Permutation(v))

    def mu(self, x: Sequence[int], w: Sequence[int]) -> int:
        d = Permutation(w).length() - Permutation(x).length()
        if d <= 0 or d % 2 == 0:
            return 0
        return self.P(x, w).coefficient((d - 1) // 2)


def kl_oracle(n: int) -> KLTable:
    """All Kazhdan-Lusztig polynomials ``P_{x,w}`` of S_n via the standard recursion."""
    if n > KL_MAX_N:
        raise ValueError(f"KL table is limited to n <= {KL_MAX_N}")
    perms = sorted(all_permutations(n), key=lambda p: (p.length(), p))
    lengths = {p: p.length() for p in perms}
    below = {w: [x for x in perms if bruhat_le(x, w)] for w in perms}
    table = KLTable(n, {})
    P = table.polys
    for w in perms:
        if lengths[w] == 0:
            P[(w, w)] = Poly([1])
            continue
        # a left descent s of w: s w < w iff i+1 precedes i in one-line notation
        pos = w.inverse()
        i = next(i for i in range(1, n) if pos[i - 1] > pos[i])
        v = w.left_multiply(i)
        mus = [(z, table.mu(z, v)) for z in below[v]
               if z != v and lengths[z.left_multiply(i)] < lengths[z]]
        mus = [(z, m) for z, m in mus if m]
        for x in below[w]:
            sx = x.left_multiply(i)
            c = 1 if lengths[sx] < lengths[x] else 0
            p = Poly.monomial(1 - c) * table.P(sx, v) + Poly.monomial(c) * table.P(x, v)
            for z, m in mus:
                pz = table.P(x, z)
                if pz:
                    p = p - Poly.monomial((lengths[w] - lengths[z]) // 2, m) * pz
            if p:
                P[(x, w)] = p
    return table
