"""Minors and Temperley-Lieb immanants of integer and Jacobi-Trudi matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .partitions import IndexSet, Partition
from .schur import HVector, SchurVector, h_product_expand, is_schur_nonneg, permutation_sign
from .temperley_lieb import Matching, Permutation, all_permutations, catalan_basis, theta_expand, theta_set


@dataclass(frozen=True)
class GenJacobiTrudi:
    """The ``n x n`` matrix ``(h_{mu_i - nu_j})``."""

    mu: tuple[int, ...]
    nu: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu).padded(self.n))
        object.__setattr__(self, "nu", Partition(self.nu).padded(self.n))

    @classmethod
    def standard(cls, n: int) -> GenJacobiTrudi:
        """``H = (h_{j-i})``, i.e. ``mu_i = nu_i = n - i``."""
        stair = tuple(range(n - 1, -1, -1))
        return cls(stair, stair, n)

    @classmethod
    def from_rows_cols(cls, rows: Sequence[int], cols: Sequence[int]) -> GenJacobiTrudi:
        """Submatrix of ``H`` on a (possibly repeating) weakly increasing row and column list.

        Skipping or duplicating rows and columns of ``H`` keeps the matrix in
        generalized Jacobi-Trudi form.
        """
        rows, cols = list(rows), list(cols)
        if len(rows) != len(cols) or rows != sorted(rows) or cols != sorted(cols):
            raise ValueError("need weakly increasing row and column lists of equal length")
        top = max(rows + cols, default=0)
        # h_{c - r} = h_{mu_i - nu_j} with mu_i = top - r_i, nu_j = top - c_j
        return cls(tuple(top - r for r in rows), tuple(top - c for c in cols), len(rows))

    def entry(self, i: int, j: int) -> int:
        """Index of the ``h`` at 1-based position ``(i, j)``; negative means zero."""
        return self.mu[i - 1] - self.nu[j - 1]


def as_int_matrix(x) -> tuple[tuple[int, ...], ...]:
    arr = np.asarray(x)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return tuple(tuple(int(v) for v in row) for row in arr.tolist())


def random_int_matrix(n: int, rng: np.random.Generator, low: int = -9, high: int = 9):
    return as_int_matrix(rng.integers(low, high + 1, size=(n, n)))


def _indices(s) -> tuple[int, ...]:
    return tuple(s.elements) if isinstance(s, IndexSet) else tuple(s)


def _h_term(x: GenJacobiTrudi, pairs) -> tuple[int, ...] | None:
    idx = [x.entry(i, j) for i, j in pairs]
    if any(k < 0 for k in idx):
        return None
    return tuple(sorted((k for k in idx if k), reverse=True))


def minor(x, rows, cols):
    """Determinant of the submatrix on ``rows`` x ``cols`` (1-based).

    Integer matrices give an ``int``; ``GenJacobiTrudi`` gives a ``SchurVector``.
    """
    rows, cols = _indices(rows), _indices(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column sets differ in size")
    if isinstance(x, GenJacobiTrudi):
        terms: dict[tuple[int, ...], int] = {}
        for perm in itertools.permutations(range(len(cols))):
            mono = _h_term(x, [(rows[a], cols[perm[a]]) for a in range(len(rows))])
            if mono is not None:
                terms[mono] = terms.get(mono, 0) + permutation_sign(perm)
        return h_product_expand(HVector(terms))
    m = as_int_matrix(x)
    total = 0
    for perm in itertools.permutations(range(len(cols))):
        prod = permutation_sign(perm)
        for a in range(len(rows)):
            prod *= m[rows[a] - 1][cols[perm[a]] - 1]
        total += prod
    return total


@lru_cache(maxsize=None)
def f_table(n: int) -> dict[Matching, tuple[tuple[Permutation, int], ...]]:
    """For every basis matching ``w``: the nonzero ``f_w(v)`` over all ``v`` in S_n."""
    table: dict[Matching, list] = {m: [] for m in catalan_basis(n)}
    for v in all_permutations(n):
        for m, c in theta_expand(v).items():
            table[m].append((v, c))
    return {m: tuple(vals) for m, vals in table.items()}


def tl_immanant(x, w: Matching):
    """``sum_v f_w(v) x_{1,v(1)} ... x_{n,v(n)}``."""
    if isinstance(x, GenJacobiTrudi):
        n = x.n
        if w.n != n:
            raise ValueError(f"matching on [{2 * w.n}] does not fit a {n}x{n} matrix")
        terms: dict[tuple[int, ...], int] = {}
        for v, c in f_table(n)[w]:
            mono = _h_term(x, [(i, v(i)) for i in range(1, n + 1)])
            if mono is not None:
                terms[mono] = terms.get(mono, 0) + c
        return h_product_expand(HVector(terms))
    m = as_int_matrix(x)
    n = len(m)
    if w.n != n:
        raise ValueError(f"matching on [{2 * w.n}] does not fit a {n}x{n} matrix")
    total = 0
    for v, c in f_table(n)[w]:
        prod = c
        for i in range(n):
            prod *= m[i][v[i] - 1]
        total += prod
    return total


@dataclass
class DecompositionReport:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    s: tuple[int, ...]
    theta: list[Matching]
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"I": list(self.rows), "J": list(self.cols), "S": list(self.s),
                "theta_size": len(self.theta), "lhs": self.lhs, "rhs": self.rhs,
                "equal": self.equal}


def compatible_set(rows: IndexSet, cols: IndexSet) -> IndexSet:
    """``S = J ∪ (complement of I)^`` inside ``[2n]``."""
    return IndexSet.of(set(cols.elements) | set(rows.complement().hat().elements), 2 * rows.ambient)


def minor_product_decomposition(x, rows, cols) -> DecompositionReport:
    """Compare ``Δ_{I,J} Δ_{Ī,J̄}`` with the sum of TL immanants over ``Θ(S)``."""
    m = as_int_matrix(x)
    n = len(m)
    rows = rows if isinstance(rows, IndexSet) else IndexSet.of(rows, n)
    cols = cols if isinstance(cols, IndexSet) else IndexSet.of(cols, n)
    if len(rows) != len(cols):
        raise ValueError("row and column sets differ in size")
    lhs = minor(m, rows, cols) * minor(m, rows.complement(), cols.complement())
    s = compatible_set(rows, cols)
    theta = theta_set(s, n)
    rhs = sum(tl_immanant(m, w) for w in theta)
    return DecompositionReport(rows.elements, cols.elements, s.elements, theta, lhs, rhs)


@dataclass
class HaimanReport:
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    n: int
    immanants: dict[Matching, SchurVector] = field(default_factory=dict)
    violations: list[tuple[Matching, Partition, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def haiman_positivity_check(mu, nu, n: int) -> HaimanReport:
    """Expand every TL immanant of ``(h_{mu_i - nu_j})`` and record negative coefficients."""
    x = GenJacobiTrudi(tuple(mu), tuple(nu), n)
    report = HaimanReport(x.mu, x.nu, n)
    for w in catalan_basis(n):
        imm = tl_immanant(x, w)
        report.immanants[w] = imm
        ok, witness = is_schur_nonneg(imm)
        if not ok:
            report.violations.append((w, *witness))
    return report
