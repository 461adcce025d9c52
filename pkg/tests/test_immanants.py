import itertools

import numpy as np
import pytest

from schurpos.immanants import (GenJacobiTrudi, compatible_set, f_table, haiman_positivity_check, minor,
                                minor_product_decomposition, random_int_matrix, tl_immanant)
from schurpos.partitions import IndexSet
from schurpos.schur import SchurVector, permutation_sign
from schurpos.temperley_lieb import all_permutations, catalan_basis, generator_matching, identity_matching

s = SchurVector.schur


def test_minor_examples():
    H = GenJacobiTrudi.standard(4)
    assert minor(H, [1, 2], [2, 4]) == s((2, 1))
    assert minor(H, [], []) == SchurVector.one()
    assert minor([[5, 1], [2, 3]], [1], [1]) == 5
    assert minor([[5, 1], [2, 3]], [], []) == 1
    with pytest.raises(ValueError):
        minor([[1]], [1], [])


def test_full_minor_of_jacobi_trudi_is_schur():
    # det(h_{lam_i - i + j}) = s_lam
    x = GenJacobiTrudi((4, 1), (1, 0), 2)  # [[h3, h4], [h0, h1]]
    assert minor(x, [1, 2], [1, 2]) == s((3, 1))


def test_from_rows_cols():
    x = GenJacobiTrudi.from_rows_cols([1, 1], [2, 3])
    assert [[x.entry(i, j) for j in (1, 2)] for i in (1, 2)] == [[1, 2], [1, 2]]
    with pytest.raises(ValueError):
        GenJacobiTrudi.from_rows_cols([2, 1], [1, 2])


def test_immanant_examples_numeric():
    x = [[2, 3], [5, 7]]
    assert tl_immanant(x, generator_matching(1, 2)) == 3 * 5
    assert tl_immanant(x, identity_matching(2)) == 2 * 7 - 3 * 5
    with pytest.raises(ValueError):
        tl_immanant(x, identity_matching(3))


def test_immanant_examples_jacobi_trudi():
    x = GenJacobiTrudi((3, 1), (1, 0), 2)  # [[h2, h3], [h0, h1]]
    assert tl_immanant(x, identity_matching(2)) == s((2, 1))
    assert tl_immanant(x, generator_matching(1, 2)) == s((3,))
    # [[h2, h2], [h1, h1]] has two equal columns
    y = GenJacobiTrudi((2, 1), (0, 0), 2)
    assert tl_immanant(y, identity_matching(2)) == SchurVector.zero()
    assert tl_immanant(y, generator_matching(1, 2)) == s((3,)) + s((2, 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_identity_coefficients_are_signs(n):
    table = dict(f_table(n)[identity_matching(n)])
    assert table == {v: (-1) ** v.length() for v in all_permutations(n)}


@pytest.mark.parametrize("n", range(1, 5))
def test_identity_immanant_is_determinant(n):
    rng = np.random.default_rng(n)
    for _ in range(5):
        x = random_int_matrix(n, rng)
        assert tl_immanant(x, identity_matching(n)) == round(np.linalg.det(np.array(x, dtype=float)))


def test_every_permutation_reaches_some_matching():
    for n in range(1, 5):
        covered = {v for vals in f_table(n).values() for v, _ in vals}
        assert covered == set(all_permutations(n))


def test_decomposition_examples():
    x = [[2, 3], [5, 7]]
    rep = minor_product_decomposition(x, [1], [1])
    assert rep.lhs == 2 * 7 and rep.equal
    assert rep.theta == catalan_basis(2)
    full = minor_product_decomposition(x, [1, 2], [1, 2])
    assert full.theta == [identity_matching(2)] and full.lhs == -1 and full.equal
    empty = minor_product_decomposition(x, [], [])
    assert empty.lhs == full.lhs and empty.equal
    with pytest.raises(ValueError):
        minor_product_decomposition(x, [1], [])


def test_compatible_set():
    s_ = compatible_set(IndexSet((1,), 2), IndexSet((1,), 2))
    assert s_.elements == (1, 3) and s_.ambient == 4


def _inversions(seq):
    return sum(1 for a, b in itertools.combinations(seq, 2) if a > b)


@pytest.mark.parametrize("n", range(1, 4))
def test_minor_product_monomials(n):
    ground = range(1, n + 1)
    for k in range(n + 1):
        for rows in itertools.combinations(ground, k):
            for cols in itertools.combinations(ground, k):
                rbar = [i for i in ground if i not in rows]
                cbar = [j for j in ground if j not in cols]
                # product of the two minors, collected by the permutation v of its monomial
                coeff = {}
                for p in itertools.permutations(range(k)):
                    for q in itertools.permutations(range(n - k)):
                        v = {}
                        v.update({rows[a]: cols[p[a]] for a in range(k)})
                        v.update({rbar[a]: cbar[q[a]] for a in range(n - k)})
                        key = tuple(v[i] for i in ground)
                        coeff[key] = coeff.get(key, 0) + permutation_sign(p) * permutation_sign(q)
                for v in all_permutations(n):
                    c = coeff.get(tuple(v), 0)
                    if {v(i) for i in rows} != set(cols):
                        assert c == 0
                    else:
                        sign = (-1) ** (_inversions([v(i) for i in rows]) + _inversions([v(i) for i in rbar]))
                        assert c == sign


def test_immanant_positivity_examples():
    rep = haiman_positivity_check((3, 1), (1, 0), 2)
    assert rep.ok
    assert rep.immanants[identity_matching(2)] == s((2, 1))
    assert rep.immanants[generator_matching(1, 2)] == s((3,))
    rep = haiman_positivity_check((2, 1), (0, 0), 2)
    assert rep.ok and rep.immanants[identity_matching(2)] == SchurVector.zero()
    rep = haiman_positivity_check((2, 1), (2, 1), 2)
    assert rep.ok
    assert rep.immanants == {identity_matching(2): SchurVector.one(),
                             generator_matching(1, 2): SchurVector.zero()}


def test_immanant_positivity_small_sweep_n3():
    for mu in [(2, 1, 0), (2, 2, 1), (3, 1, 0)]:
        for nu in [(0, 0, 0), (1, 0, 0), (1, 1, 0)]:
            assert haiman_positivity_check(mu, nu, 3).ok
