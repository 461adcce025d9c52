import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schurpos.immanants import GenJacobiTrudi
from schurpos.partitions import (Partition, ShapePair, SkewShape, conjugate, parse_shape,
                                 partitions_in_box, shape_to_subsets, skew_shapes_in_box)
from schurpos.positivity import (STATEMENTS, SweepBounds, check_cd_power, check_cell_transfer, check_fflp,
                                 check_haiman, check_identity, check_llt, check_log_concavity, check_midpoint,
                                 check_minors, check_okounkov, check_plus_decomp, check_sorted_tuple, evaluate,
                                 midpoint_reduction, okounkov_shapes, phi_op, psi_op, reduce_coordinates,
                                 sorting_chain, sweep, sweep_inputs)
from schurpos.schur import SchurVector, schur_product

s = SchurVector.schur
ZERO = SchurVector.zero()
S22 = s((2, 2))


def test_cell_transfer_examples():
    assert check_cell_transfer("2", "1,1").difference == S22
    assert check_cell_transfer("3,1/1", "3,1/1").difference == ZERO
    assert check_cell_transfer("3,2/1", "2,1/1").difference == ZERO  # nested


def test_okounkov_examples():
    case = check_okounkov("3", "1")
    assert case.difference == S22 and case.nonneg and case.ok
    assert check_okounkov("2,1/1", "2,1/1").difference == ZERO
    assert check_okounkov("2,2", "2").nonneg


def test_fflp_examples():
    assert check_fflp("2", "1,1").difference == S22
    assert check_fflp("3,1/1", "3,1/1").difference == ZERO
    assert check_fflp("2,1", "2").difference == ZERO


def test_sorted_tuple_examples():
    a, b = parse_shape("3,1/1"), parse_shape("2,2")
    assert check_sorted_tuple([a, b]).difference == check_fflp(a, b).difference
    case = check_sorted_tuple(["2", "1,1", "0"])
    assert case.nonneg and case.ok
    assert check_sorted_tuple(["3", "2", "1"]).difference == ZERO


def test_sorting_chain_decreases_ainv():
    case = check_sorted_tuple(["1", "2", "3,1"])
    chain = case.details["ainv_chain"]
    assert chain[-1] == 0 and all(a > b for a, b in zip(chain, chain[1:]))
    assert len(sorting_chain(["1", "2", "3,1"])) == len(chain)


def test_llt_examples():
    assert check_llt((3, 1), 2, 2).difference == ZERO
    assert check_llt((2, 2), 1, 2).difference == s((4,)) + s((3, 1))
    assert check_llt((1,), 1, 2).difference == ZERO
    with pytest.raises(ValueError):
        check_llt((1,), 3, 2)


def test_minors_examples():
    H = GenJacobiTrudi.standard(4)
    assert check_minors([1, 2], [2, 4], [1, 2], [2, 4], H).difference == ZERO
    assert check_minors([1, 3], [2, 4], [2, 3], [1, 4], H).nonneg


def test_minors_agree_with_cell_transfer():
    k, n = 3, 6
    x = GenJacobiTrudi.standard(n)
    shapes = skew_shapes_in_box(3, 3)
    for a, b in itertools.product(shapes[::7], repeat=2):
        i1, j1 = shape_to_subsets(a, k, n)
        i2, j2 = shape_to_subsets(b, k, n)
        assert check_minors(i1, j1, i2, j2, x).difference == check_cell_transfer(a, b).difference


def test_minors_named_instance():
    x = GenJacobiTrudi.standard(4)
    i1, j1 = shape_to_subsets(SkewShape((2,)), 2, 4)
    i2, j2 = shape_to_subsets(SkewShape((1, 1)), 2, 4)
    assert check_minors(i1, j1, i2, j2, x).difference == S22


def test_plus_decomp_examples():
    assert check_plus_decomp(["2,2", "2,2"]).difference == ZERO
    assert check_plus_decomp(["2", "1,1"]).nonneg
    assert check_plus_decomp(["3,1/1"]).difference == ZERO


def test_cd_power_examples():
    assert check_cd_power("3", "1", 1, 1).difference == S22
    assert check_cd_power("2,1/1", "2,1/1", 2, 1).difference == ZERO
    assert check_cd_power("3", "0", 2, 1).nonneg
    with pytest.raises(ValueError):
        check_cd_power("1", "1", 0, 1)


def test_cd_power_one_one_is_okounkov():
    for a, b in itertools.product(skew_shapes_in_box(2, 3), repeat=2):
        assert check_cd_power(a, b, 1, 1).difference == check_okounkov(a, b).difference


def test_log_concavity_examples():
    assert check_log_concavity((2, 1), (2, 1), 1, 2).difference == ZERO
    assert check_log_concavity((3,), (1,), 1, 1).difference == S22
    case = check_log_concavity((4,), (1,), 1, 2)
    assert case.nonneg
    assert case.difference == schur_product([SkewShape((2,))] * 3) - s((4,)) * s((1,)) * s((1,))
    with pytest.raises(ValueError):
        check_log_concavity((2,), (1,), 1, 1)


def test_witness_reported():
    case = evaluate("okounkov", {"a": "1", "b": "3"})
    assert case.nonneg
    # a hand-made negative case goes through the same record path
    case.difference = -S22
    rec = case.to_record()
    assert rec["ok"] is False and rec["witness"] == {"partition": [2, 2], "coefficient": -1}


def test_conjugation_duality_4x4_sample():
    def conj_vec(f):
        return SchurVector({conjugate(p): c for p, c in f.items()})

    box = skew_shapes_in_box(4, 4)
    rng = np.random.default_rng(11)
    for i, j in rng.integers(len(box), size=(3000, 2)):
        a, b = box[i], box[j]
        assert conj_vec(check_okounkov(a, b).difference) == check_fflp(a.conjugate(), b.conjugate()).difference


def test_conjugation_duality_3x3_exhaustive():
    def conj_vec(f):
        return SchurVector({conjugate(p): c for p, c in f.items()})

    for a, b in itertools.product(skew_shapes_in_box(3, 3), repeat=2):
        assert conj_vec(check_okounkov(a, b).difference) == check_fflp(a.conjugate(), b.conjugate()).difference


def test_okounkov_perfect_square_case():
    box = partitions_in_box(3, 3)
    for lam, nu in itertools.product(box, repeat=2):
        k = max(len(lam), len(nu), 1)
        total = [x + y for x, y in zip(lam.padded(k), nu.padded(k))]
        if any(x % 2 for x in total):
            continue
        half = SkewShape(Partition(x // 2 for x in total))
        lo, hi = okounkov_shapes(SkewShape(lam), SkewShape(nu))
        assert lo == hi == half


def test_midpoint_reduction_examples():
    pair = ShapePair(parse_shape("3"), parse_shape("1"))
    trace = midpoint_reduction(pair)
    assert trace[1] == ShapePair(parse_shape("2"), parse_shape("2"))
    assert trace[-1] == ShapePair(parse_shape("2"), parse_shape("2"))
    eq = ShapePair(parse_shape("2,1/1"), parse_shape("2,1/1"))
    assert midpoint_reduction(eq) == [eq, eq]


def test_phi_psi_coordinate_formulas():
    # one psi then phi step folds each gap d = lam_i - nu_i (and mu_i - rho_i) and keeps the sum
    def fold(d):
        d = d if d >= -1 else -2 - d
        return d if d <= 1 else 2 - d

    rng = np.random.default_rng(0)
    box = skew_shapes_in_box(4, 4)
    for _ in range(500):
        a, b = box[rng.integers(len(box))], box[rng.integers(len(box))]
        pair = ShapePair(a, b)
        k = pair.k
        before = pair.coordinates(k)
        after = phi_op(psi_op(pair, k), k).coordinates(k)
        for (x, y), (u, v) in [((0, 2), (0, 2)), ((1, 3), (1, 3))]:
            for p, q, p2, q2 in zip(before[x], before[y], after[u], after[v]):
                assert p2 + q2 == p + q and p2 - q2 == fold(p - q)


def test_vectorized_reduction_matches_shape_level():
    pairs = list(itertools.product(skew_shapes_in_box(3, 3), repeat=2))
    k = 3
    coords = np.array([ShapePair(a, b).coordinates(k) for a, b in pairs])
    o1, i1, o2, i2, steps, valid = reduce_coordinates(coords[:, 0], coords[:, 1], coords[:, 2], coords[:, 3])
    assert valid.all()
    for idx in range(0, len(pairs), 13):
        trace = midpoint_reduction(ShapePair(*pairs[idx]))
        final = trace[-1]
        assert final.first == SkewShape(Partition(o1[idx]), Partition(i1[idx]))
        assert final.second == SkewShape(Partition(o2[idx]), Partition(i2[idx]))
        assert len(trace) - 2 == steps[idx]


def test_check_midpoint_records_structure():
    case = check_midpoint("3,3/1", "1")
    assert case.ok and case.details["steps"] <= case.details["max_gap"]
    assert case.difference == check_okounkov("3,3/1", "1").difference


def test_identity_and_haiman_statements():
    case = check_identity([[1, 2], [3, 4]], [1], [2])
    assert case.ok and case.details["equal"]
    assert check_haiman((3, 1), (1, 0), 2).ok


def test_sweep_inputs_are_stable():
    bounds = SweepBounds(rows=2, cols=2)
    first = list(sweep_inputs("fflp", bounds))
    assert first == list(sweep_inputs("fflp", bounds))
    assert len(first) == len(skew_shapes_in_box(2, 2)) ** 2
    with pytest.raises(ValueError):
        list(sweep_inputs("nope", bounds))


@pytest.mark.parametrize("statement", STATEMENTS)
def test_small_sweeps_clean(statement):
    bounds = SweepBounds(rows=2, cols=2, tuple_len=2, tuple_cells=2, n=2, trials=2, max_cd=2)
    cases = list(sweep(statement, bounds))
    assert cases
    assert all(c.ok for c in cases)
    assert not any(c.skipped for c in cases)


skew = st.sampled_from(skew_shapes_in_box(3, 3))


@settings(max_examples=80, deadline=None)
@given(skew, skew)
def test_pair_statements_symmetric(a, b):
    for check in (check_cell_transfer, check_okounkov, check_fflp):
        assert check(a, b).difference == check(b, a).difference


def test_reduction_sweep_matches_per_pair_traces():
    from schurpos.positivity import reduction_sweep

    summary = reduction_sweep(2, 3)
    shapes = skew_shapes_in_box(2, 3)
    traces = [midpoint_reduction(ShapePair(a, b)) for a, b in itertools.product(shapes, repeat=2)]
    assert summary.ok and summary.pairs == len(traces)
    assert summary.steps == sum(len(t) - 1 for t in traces)
    assert summary.max_steps == max(len(t) - 2 for t in traces)
    for a, b in itertools.product(shapes, repeat=2):
        assert check_midpoint(a, b).ok
