"""Exact arithmetic in the Schur basis.

Skew Schur expansions come from enumerating Littlewood-Richardson fillings.
Two independent routes back it up: the Jacobi-Trudi determinant expanded
through Pieri's rule, and brute-force enumeration of semistandard tableaux
in finitely many variables.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import Partition, SkewShape, as_shape, format_partition


class SchurVector:
    """Sparse integer combination of Schur functions, keyed by ``Partition``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {lam: c for lam, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> SchurVector:
        v = cls.__new__(cls)
        v._terms = terms
        return v

    @classmethod
    def schur(cls, lam: Sequence[int] = ()) -> SchurVector:
        return cls._raw({Partition(lam): 1})

    @classmethod
    def zero(cls) -> SchurVector:
        return cls._raw({})

    @classmethod
    def one(cls) -> SchurVector:
        return cls.schur(())

    def __getitem__(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, SchurVector):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _combine(self, other: SchurVector, sign: int) -> SchurVector:
        out = dict(self._terms)
        for lam, c in other._terms.items():
            v = out.get(lam, 0) + sign * c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return SchurVector._raw(out)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return SchurVector._raw({lam: -c for lam, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SchurVector.zero()
            return SchurVector._raw({lam: other * c for lam, c in self._terms.items()})
        if isinstance(other, SchurVector):
            return schur_multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> SchurVector:
        out = SchurVector.one()
        for _ in range(e):
            out = out * self
        return out

    def degrees(self) -> set[int]:
        return {lam.size for lam in self._terms}

    def conjugate(self) -> SchurVector:
        """Apply the involution ``s_lam -> s_lam'`` termwise."""
        return SchurVector._raw({lam.conjugate(): c for lam, c in self._terms.items()})

    def min_term(self) -> tuple[Partition, int] | None:
        """Smallest coefficient and its partition (lexicographically least on ties)."""
        if not self._terms:
            return None
        return min(self._terms.items(), key=lambda kv: (kv[1], tuple(kv[0])))

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "coefficient": c} for lam, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> SchurVector:
        return cls((tuple(d["partition"]), d["coefficient"]) for d in data)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for lam in sorted(self._terms, reverse=True):
            c = self._terms[lam]
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}s[{format_partition(lam)}]"
            if not out:
                out.append(term if c > 0 else "-" + term)
            else:
                out.append(("+ " if c > 0 else "- ") + term)
        return " ".join(out)

    def __repr__(self):
        return f"SchurVector({dict(self.items())})"


# -- Littlewood-Richardson fillings --------------------------------------------

def _lr_fillings(outer: tuple[int, ...], inner: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Count LR fillings of ``outer/inner`` by content.

    Cells are visited in reading order (rows top to bottom, each row right to
    left), so the lattice condition can be enforced on every prefix.
    """
    k = len(outer)
    inner = inner + (0,) * (k - len(inner))
    cells = [(r, c) for r in range(k) for c in range(outer[r] - 1, inner[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(cells) + 1)
    result: dict[tuple[int, ...], int] = {}

    def rec(idx: int, used: int):
        if idx == len(cells):
            content = tuple(counts[:used])
            result[content] = result.get(content, 0) + 1
            return
        r, c = cells[idx]
        hi = filling[(r, c + 1)] if c + 1 < outer[r] else used + 1
        lo = filling[(r - 1, c)] + 1 if r > 0 and c >= inner[r - 1] else 1
        for x in range(lo, min(hi, used + 1) + 1):
            if x > 1 and counts[x - 2] <= counts[x - 1]:
                continue
            filling[(r, c)] = x
            counts[x - 1] += 1
            rec(idx + 1, max(used, x))
            counts[x - 1] -= 1
        filling.pop((r, c), None)

    rec(0, 0)
    return result


# keyed by normalized (outer, inner); concurrent inserts are idempotent
_SKEW_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[tuple[Partition, int], ...]] = {}


def _skew_expansion(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    key = (tuple(outer), tuple(inner))
    hit = _SKEW_CACHE.get(key)
    if hit is None:
        hit = tuple(sorted((Partition(nu), c) for nu, c in _lr_fillings(*key).items()))
        _SKEW_CACHE[key] = hit
    return hit


def export_lr_cache() -> list:
    """The skew expansion memo as JSON-friendly ``[outer, inner, [[nu, c], ...]]`` rows."""
    return [[list(o), list(i), [[list(nu), c] for nu, c in terms]]
            for (o, i), terms in sorted(_SKEW_CACHE.items())]


def import_lr_cache(rows: list) -> int:
    for outer, inner, terms in rows:
        _SKEW_CACHE.setdefault((tuple(outer), tuple(inner)),
                               tuple((Partition(nu), int(c)) for nu, c in terms))
    return len(rows)


def skew_schur_expand(s) -> SchurVector:
    """Schur expansion of ``s_{outer/inner}``; all coefficients are LR coefficients."""
    s = as_shape(s).normalized()
    return SchurVector._raw(dict(_skew_expansion(tuple(s.outer), tuple(s.inner))))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^lam_{mu,nu}``: the multiplicity of ``s_lam`` in ``s_mu s_nu``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not lam.contains(mu):
        return 0
    return skew_schur_expand(SkewShape(lam, mu))[nu]


@lru_cache(maxsize=None)
def _straight_product(a: Partition, b: Partition) -> tuple[tuple[Partition, int], ...]:
    # s_a s_b is the skew Schur function of b placed north-east of a
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    width = a[0]
    outer = tuple(x + width for x in b) + tuple(a)
    inner = (width,) * len(b)
    return _skew_expansion(outer, inner)


def schur_multiply(f: SchurVector, g: SchurVector) -> SchurVector:
    out: dict[Partition, int] = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            key = (a, b) if a <= b else (b, a)
            for lam, c in _straight_product(*key):
                out[lam] = out.get(lam, 0) + ca * cb * c
    return SchurVector._raw({lam: c for lam, c in out.items() if c})


def schur_product(shapes: Iterable) -> SchurVector:
    """Product of skew Schur functions of the given shapes."""
    key = tuple(sorted((s.outer, s.inner) for s in (as_shape(x).normalized() for x in shapes)))
    return SchurVector._raw(dict(_shape_product(key)))


@lru_cache(maxsize=200_000)
def _shape_product(key) -> tuple[tuple[Partition, int], ...]:
    out = SchurVector.one()
    for outer, inner in key:
        out = schur_multiply(out, SchurVector._raw(dict(_skew_expansion(outer, inner))))
    return tuple(out._terms.items())


def is_schur_nonneg(f: SchurVector) -> tuple[bool, tuple[Partition, int] | None]:
    """``(True, None)`` or ``(False, (lam, c))`` with the lexicographically least negative term."""
    negative = [(lam, c) for lam, c in f.items() if c < 0]
    if not negative:
        return True, None
    return False, negative[0]


# -- complete homogeneous functions --------------------------------------------

class HVector:
    """Sparse integer polynomial in ``h_1, h_2, ...``; monomials are sorted index tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self.terms: dict[tuple[int, ...], int] = {}
        for mono, c in (terms or {}).items():
            if any(i < 0 for i in mono):
                continue
            mono = tuple(sorted((i for i in mono if i), reverse=True))
            self.terms[mono] = self.terms.get(mono, 0) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def h(cls, k: int) -> HVector:
        """``h_k``; ``h_0 = 1`` and ``h_k = 0`` for negative ``k``."""
        return cls({(k,): 1})

    @classmethod
    def one(cls) -> HVector:
        return cls({(): 1})

    def __add__(self, other: HVector) -> HVector:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return HVector(out)

    def __sub__(self, other: HVector) -> HVector:
        return self + other * -1

    def __mul__(self, other) -> HVector:
        if isinstance(other, int):
            return HVector({m: c * other for m, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2, reverse=True))
                out[m] = out.get(m, 0) + c1 * c2
        return HVector(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, HVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"HVector({self.terms})"


@lru_cache(maxsize=None)
def _pieri_row(lam: Partition, k: int) -> tuple[Partition, ...]:
    """Partitions obtained from ``lam`` by adding a horizontal strip of ``k`` cells."""
    rows = list(lam) + [0]
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(rows):
            if left == 0:
                out.append(Partition(acc))
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for a in range(cap, -1, -1):
            rec(i + 1, left - a, acc + [rows[i] + a])

    rec(0, k, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _h_monomial(mono: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    current = {Partition(): 1}
    for k in mono:
        nxt: dict[Partition, int] = {}
        for lam, c in current.items():
            for mu in _pieri_row(lam, k):
                nxt[mu] = nxt.get(mu, 0) + c
        current = nxt
    return tuple(current.items())


def h_product_expand(hv: HVector) -> SchurVector:
    out: dict[Partition, int] = {}
    for mono, c in hv.terms.items():
        for lam, d in _h_monomial(mono):
            out[lam] = out.get(lam, 0) + c * d
    return SchurVector._raw({lam: c for lam, c in out.items() if c})


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def h_determinant(entries: Sequence[Sequence[int]]) -> HVector:
    """Leibniz expansion of the matrix ``(h_{entries[i][j]})``."""
    k = len(entries)
    out: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(k)):
        idx = [entries[i][perm[i]] for i in range(k)]
        if min(idx, default=0) < 0:
            continue
        mono = tuple(sorted((x for x in idx if x), reverse=True))
        out[mono] = out.get(mono, 0) + permutation_sign(perm)
    return HVector(out)


def jacobi_trudi_det(s) -> SchurVector:
    """``det(h_{lam_i - mu_j - i + j})`` expanded into Schur functions."""
    s = as_shape(s)
    k = len(s.outer)
    lam, mu = s.padded(k)
    return h_product_expand(h_determinant([[lam[i] - mu[j] - i + j for j in range(k)] for i in range(k)]))


# -- tableau oracle ------------------------------------------------------------

def tableau_monomial_oracle(s, m: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of ``s_{outer/inner}(x_1..x_m)`` by listing every SSYT.

    Keys are exponent vectors of length ``m``.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    s = as_shape(s)
    k = len(s.outer)
    outer, inner = s.padded(k)
    cells = [(r, c) for r in range(k) for c in range(inner[r], outer[r])]
    filling: dict[tuple[int, int], int] = {}
    weight = [0] * m
    poly: dict[tuple[int, ...], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            key = tuple(weight)
            poly[key] = poly.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if c > inner[r]:
            lo = filling[(r, c - 1)]
        if r > 0 and c < outer[r - 1] and c >= inner[r - 1]:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for x in range(lo, m + 1):
            filling[(r, c)] = x
            weight[x - 1] += 1
            rec(idx + 1)
            weight[x - 1] -= 1

    rec(0)
    return poly


def schur_decompose_polynomial(poly: Mapping[tuple[int, ...], int], m: int) -> SchurVector:
    """Write a symmetric polynomial in ``m`` variables as a sum of Schur polynomials.

    Repeatedly removes the Schur polynomial of the lex-leading monomial.
    """
    poly = {e: c for e, c in poly.items() if c}
    out: dict[Partition, int] = {}
    while poly:
        lead = max(poly)
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise ValueError(f"polynomial is not symmetric: leading exponent {lead}")
        c = poly[lead]
        lam = Partition(lead)
        out[lam] = c
        for e, d in tableau_monomial_oracle(SkewShape(lam), m).items():
            v = poly.get(e, 0) - c * d
            if v:
                poly[e] = v
            else:
                poly.pop(e, None)
    return SchurVector(out)
