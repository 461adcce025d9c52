"""Checkers for Schur-positivity inequalities between products of skew Schur functions.

Each ``check_*`` function builds ``LHS - RHS`` exactly as a ``SchurVector`` and
records whether it is Schur nonnegative.  ``sweep_inputs`` enumerates the
desk-scale families and ``evaluate`` runs one case from its JSON-friendly
inputs, so sweeps can be fanned out across processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .immanants import GenJacobiTrudi, haiman_positivity_check, minor, minor_product_decomposition, random_int_matrix
from .partitions import (IndexSet, Partition, ShapeError, ShapePair, SkewShape, add_partitions, ainv_shapes,
                         as_shape, brace_select, format_shape, merge_parts, midpoint, partitions_in_box,
                         partitions_of, scale_partition, shift, skew_shapes_in_box, stride_select, union_sort,
                         vee_wedge)
from .schur import SchurVector, is_schur_nonneg, schur_product, skew_schur_expand

STATEMENTS = ("cell_transfer", "okounkov", "fflp", "sorted_tuple", "llt", "minors", "plus_decomp",
              "cd_power", "log_concavity", "midpoint", "identity", "haiman")


@dataclass
class PositivityCase:
    statement: str
    inputs: dict
    difference: SchurVector | None = None
    skipped: str | None = None
    failure: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def nonneg(self) -> bool:
        return self.difference is None or is_schur_nonneg(self.difference)[0]

    @property
    def witness(self) -> tuple[Partition, int] | None:
        return None if self.difference is None else is_schur_nonneg(self.difference)[1]

    @property
    def ok(self) -> bool:
        return self.skipped is not None or (self.nonneg and self.failure is None)

    def to_record(self) -> dict:
        rec = {"statement": self.statement, "inputs": self.inputs, "ok": self.ok,
               "nonneg": self.nonneg, "skipped": self.skipped}
        if self.difference is not None:
            rec["difference"] = self.difference.to_json()
        w = self.witness
        rec["witness"] = None if w is None else {"partition": list(w[0]), "coefficient": w[1]}
        if self.failure:
            rec["failure"] = self.failure
        if self.details:
            rec["details"] = self.details
        return rec


def _shape_texts(shapes: Sequence[SkewShape]) -> list[str]:
    return [format_shape(s) for s in shapes]


def _difference_case(statement: str, inputs: dict, build: Callable[[], tuple[list, list]]) -> PositivityCase:
    try:
        lhs, rhs = build()
    except ShapeError as exc:
        return PositivityCase(statement, inputs, skipped=f"invalid-shape: {exc}")
    diff = schur_product(lhs) - schur_product(rhs)
    return PositivityCase(statement, inputs, diff, details={"lhs": _shape_texts(lhs)})


def _coords(a: SkewShape, b: SkewShape):
    return ShapePair(a, b).coordinates()


def check_cell_transfer(a, b) -> PositivityCase:
    a, b = as_shape(a), as_shape(b)

    def build():
        v, w = vee_wedge(a, b)
        return [v, w], [a, b]

    return _difference_case("cell_transfer", {"a": format_shape(a), "b": format_shape(b)}, build)


def okounkov_shapes(a: SkewShape, b: SkewShape) -> tuple[SkewShape, SkewShape]:
    """``(floor((lam+nu)/2) / floor((mu+rho)/2), ceil(...) / ceil(...))``."""
    lam, mu, nu, rho = _coords(a, b)
    outer_lo, outer_hi = midpoint(lam, nu)
    inner_lo, inner_hi = midpoint(mu, rho)
    return SkewShape(outer_lo, inner_lo), SkewShape(outer_hi, inner_hi)


def check_okounkov(a, b) -> PositivityCase:
    a, b = as_shape(a), as_shape(b)
    return _difference_case("okounkov", {"a": format_shape(a), "b": format_shape(b)},
                            lambda: (list(okounkov_shapes(a, b)), [a, b]))


def fflp_shapes(a: SkewShape, b: SkewShape) -> tuple[SkewShape, SkewShape]:
    _, outer1, outer2 = union_sort(a.outer, b.outer)
    _, inner1, inner2 = union_sort(a.inner, b.inner)
    return SkewShape(outer1, inner1), SkewShape(outer2, inner2)


def check_fflp(a, b) -> PositivityCase:
    a, b = as_shape(a), as_shape(b)
    return _difference_case("fflp", {"a": format_shape(a), "b": format_shape(b)},
                            lambda: (list(fflp_shapes(a, b)), [a, b]))


def stride_shapes(shapes: Sequence[SkewShape]) -> list[SkewShape]:
    n = len(shapes)
    lam = merge_parts(s.outer for s in shapes)
    mu = merge_parts(s.inner for s in shapes)
    return [SkewShape(stride_select(lam, i, n), stride_select(mu, i, n)) for i in range(1, n + 1)]


def sorting_chain(shapes: Sequence) -> list[list[SkewShape]]:
    """Pairwise sort_1/sort_2 replacements until no anti-inversions remain.

    Each step replaces the first pair ``k < l`` (lexicographically) whose two
    shapes carry an anti-inversion.  The last entry equals ``stride_shapes``.
    """
    current = [as_shape(s) for s in shapes]
    chain = [list(current)]
    while ainv_shapes(current):
        k, l = next((k, l) for k, l in itertools.combinations(range(len(current)), 2)
                    if ainv_shapes([current[k], current[l]]))
        current[k], current[l] = fflp_shapes(current[k], current[l])
        chain.append(list(current))
    return chain


def check_sorted_tuple(shapes: Sequence, statement: str = "sorted_tuple", inputs: dict | None = None) -> PositivityCase:
    shapes = [as_shape(s) for s in shapes]
    inputs = {"shapes": _shape_texts(shapes)} if inputs is None else inputs
    case = _difference_case(statement, inputs, lambda: (stride_shapes(shapes), shapes))
    if case.skipped:
        return case
    chain = sorting_chain(shapes)
    potentials = [ainv_shapes(step) for step in chain]
    case.details["ainv_chain"] = potentials
    if any(b >= a for a, b in zip(potentials, potentials[1:])):
        case.failure = "ainv did not strictly decrease along the sorting chain"
    elif chain[-1] != stride_shapes(shapes):
        case.failure = "sorting chain did not end at the stride quotients"
    return case


def llt_tuple(lam: Sequence[int], m: int, n: int) -> list[SkewShape]:
    """``(lam^[1,m], ..., lam^[m,m], ∅, ..., ∅)`` with ``n`` entries."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return ([SkewShape(stride_select(lam, i, m)) for i in range(1, m + 1)]
            + [SkewShape(Partition())] * (n - m))


def check_llt(lam, m: int, n: int) -> PositivityCase:
    lam = Partition(lam)
    inputs = {"lam": list(lam), "m": m, "n": n}
    return check_sorted_tuple(llt_tuple(lam, m, n), statement="llt", inputs=inputs)


def check_minors(i1, j1, i2, j2, x: GenJacobiTrudi) -> PositivityCase:
    i1, j1, i2, j2 = (s if isinstance(s, IndexSet) else IndexSet.of(s, x.n) for s in (i1, j1, i2, j2))
    if not len(i1) == len(j1) == len(i2) == len(j2):
        raise ValueError("all four index sets must have the same cardinality")
    iv, iw = vee_wedge(i1, i2)
    jv, jw = vee_wedge(j1, j2)
    diff = minor(x, iv, jv) * minor(x, iw, jw) - minor(x, i1, j1) * minor(x, i2, j2)
    inputs = {"I1": list(i1), "J1": list(j1), "I2": list(i2), "J2": list(j2),
              "mu": list(x.mu), "nu": list(x.nu), "n": x.n}
    return PositivityCase("minors", inputs, diff)


def brace_shapes(outer: Sequence[int], inner: Sequence[int], n: int) -> list[SkewShape]:
    return [SkewShape(brace_select(outer, i, n), brace_select(inner, i, n)) for i in range(1, n + 1)]


def check_plus_decomp(shapes: Sequence) -> PositivityCase:
    shapes = [as_shape(s) for s in shapes]

    def build():
        lam = add_partitions(*(s.outer for s in shapes))
        mu = add_partitions(*(s.inner for s in shapes))
        return brace_shapes(lam, mu, len(shapes)), shapes

    return _difference_case("plus_decomp", {"shapes": _shape_texts(shapes)}, build)


def check_cd_power(a, b, c: int, d: int) -> PositivityCase:
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive")
    a, b = as_shape(a), as_shape(b)

    def build():
        lam = add_partitions(scale_partition(a.outer, c), scale_partition(b.outer, d))
        mu = add_partitions(scale_partition(a.inner, c), scale_partition(b.inner, d))
        return brace_shapes(lam, mu, c + d), [a] * c + [b] * d

    inputs = {"a": format_shape(a), "b": format_shape(b), "c": c, "d": d}
    return _difference_case("cd_power", inputs, build)


def weighted_average(a: Sequence[int], b: Sequence[int], c: int, d: int) -> Partition | None:
    total = add_partitions(scale_partition(a, c), scale_partition(b, d))
    if any(x % (c + d) for x in total):
        return None
    return Partition(x // (c + d) for x in total)


def check_log_concavity(a, b, c: int, d: int) -> PositivityCase:
    a, b = Partition(a), Partition(b)
    avg = weighted_average(a, b, c, d)
    if avg is None:
        raise ValueError(f"({c}*{tuple(a)} + {d}*{tuple(b)})/{c + d} is not a partition")
    inputs = {"a": list(a), "b": list(b), "c": c, "d": d}
    lhs = [SkewShape(avg)] * (c + d)
    rhs = [SkewShape(a)] * c + [SkewShape(b)] * d
    return _difference_case("log_concavity", inputs, lambda: (lhs, rhs))


# -- the constructive midpoint reduction ---------------------------------------

def theta_op(pair: ShapePair) -> ShapePair:
    return ShapePair(*vee_wedge(pair.first, pair.second))


def phi_op(pair: ShapePair, k: int) -> ShapePair:
    right = shift(pair.second, "right", k)
    vee, wedge = vee_wedge(pair.first, right)
    return ShapePair(wedge, shift(vee, "left", k))


def psi_op(pair: ShapePair, k: int) -> ShapePair:
    right = shift(pair.first, "right", k)
    vee, wedge = vee_wedge(right, pair.second)
    return ShapePair(shift(vee, "left", k), wedge)


def phi_bar(x: int) -> int:
    return x if x <= 1 else 2 - x


def psi_bar(x: int) -> int:
    return x if x >= -1 else -2 - x


def max_gap(pair: ShapePair, k: int | None = None) -> int:
    lam, mu, nu, rho = pair.coordinates(k)
    return max([abs(x - y) for x, y in zip(lam, nu)] + [abs(x - y) for x, y in zip(mu, rho)] + [0])


def midpoint_reduction(pair: ShapePair) -> list[ShapePair]:
    """Trace ``pair, (phi∘psi)(pair), ..., theta(final)``.

    Every coordinate gap shrinks under ``phi∘psi`` once it is at least 2; the
    closing ``theta`` then lands on the ``(ceil, floor)`` midpoint pair.
    """
    k = pair.k
    trace = [pair]
    current = pair
    while max_gap(current, k) >= 2:
        current = phi_op(psi_op(current, k), k)
        trace.append(current)
    trace.append(theta_op(current))
    return trace


def _fold_step(lam, mu, nu, rho):
    """One ``phi∘psi`` application on coordinate arrays, plus a validity mask for both halves."""
    lam2, nu2 = np.maximum(lam + 1, nu) - 1, np.minimum(lam + 1, nu)
    mu2, rho2 = np.maximum(mu + 1, rho) - 1, np.minimum(mu + 1, rho)
    ok = _valid_pairs(lam2, mu2, nu2, rho2)
    lam3, nu3 = np.minimum(lam2, nu2 + 1), np.maximum(lam2, nu2 + 1) - 1
    mu3, rho3 = np.minimum(mu2, rho2 + 1), np.maximum(mu2, rho2 + 1) - 1
    return lam3, mu3, nu3, rho3, ok & _valid_pairs(lam3, mu3, nu3, rho3)


def _gap(lam, mu, nu, rho):
    return np.maximum(np.abs(lam - nu).max(axis=-1), np.abs(mu - rho).max(axis=-1))


def reduce_coordinates(lam, mu, nu, rho):
    """Batched ``(phi∘psi)^N`` then ``theta`` on padded coordinate arrays.

    All four arguments are integer arrays of shape ``(..., k)`` holding the
    pairs ``(lam/mu, nu/rho)``.  Returns ``(outer1, inner1, outer2, inner2,
    steps, valid)`` where ``steps`` counts ``phi∘psi`` applications per pair
    and ``valid`` is false for any pair that ever left the set of skew shapes.
    """
    lam, mu, nu, rho = (np.array(x, dtype=np.int64) for x in (lam, mu, nu, rho))
    steps = np.zeros(lam.shape[:-1], dtype=np.int64)
    valid = _valid_pairs(lam, mu, nu, rho)
    active = _gap(lam, mu, nu, rho) >= 2
    while active.any():
        sel = active[..., None]
        lam3, mu3, nu3, rho3, ok = _fold_step(lam, mu, nu, rho)
        valid &= ~active | ok
        lam, mu = np.where(sel, lam3, lam), np.where(sel, mu3, mu)
        nu, rho = np.where(sel, nu3, nu), np.where(sel, rho3, rho)
        steps += active
        active = _gap(lam, mu, nu, rho) >= 2
    return np.maximum(lam, nu), np.maximum(mu, rho), np.minimum(lam, nu), np.minimum(mu, rho), steps, valid


@dataclass
class ReductionSummary:
    rows: int
    cols: int
    pairs: int = 0
    steps: int = 0
    distinct_steps: int = 0
    products: int = 0
    max_steps: int = 0
    invalid: int = 0
    wrong_endpoint: int = 0
    over_gap: int = 0
    negative: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.invalid or self.wrong_endpoint or self.over_gap or self.negative)


def reduction_sweep(rows: int, cols: int, chunk: int = 128) -> ReductionSummary:
    """Run ``midpoint_reduction`` on every ordered pair of skew shapes with outer shape in the box.

    Traces are followed on coordinate arrays.  A step's difference
    ``s_A' s_B' - s_A s_B`` only depends on the Schur functions of the four
    shapes, so shapes are grouped by their exact expansion and each distinct
    step is expanded and checked once.
    """
    box = skew_shapes_in_box(rows, cols)
    k, base = rows, cols + 1
    coords = np.array([list(s.outer.padded(k)) + list(s.inner.padded(k)) for s in box], dtype=np.int64)
    weights = base ** np.arange(2 * k, dtype=np.int64)
    classes: dict[tuple, int] = {}
    reps: list[SchurVector] = []
    lookup = np.full(base ** (2 * k), -1, dtype=np.int64)
    for s, row in zip(box, coords):
        f = skew_schur_expand(s)
        cls = classes.setdefault(tuple(f.items()), len(classes))
        if cls == len(reps):
            reps.append(f)
        lookup[row @ weights] = cls

    def pair_class(lam, mu, nu, rho):
        a = lookup[np.concatenate([lam, mu], axis=-1) @ weights]
        b = lookup[np.concatenate([nu, rho], axis=-1) @ weights]
        return np.minimum(a, b), np.maximum(a, b)

    summary = ReductionSummary(rows, cols, pairs=len(box) ** 2)
    keys = []
    for start in range(0, len(box), chunk):
        ia, ib = np.divmod(np.arange(start * len(box), min(start + chunk, len(box)) * len(box)), len(box))
        lam, mu, nu, rho = coords[ia, :k], coords[ia, k:], coords[ib, :k], coords[ib, k:]
        gap0 = _gap(lam, mu, nu, rho)
        steps = np.zeros(len(ia), dtype=np.int64)
        cur = pair_class(lam, mu, nu, rho)
        active = gap0 >= 2
        while active.any():
            sel = active[:, None]
            lam3, mu3, nu3, rho3, ok = _fold_step(lam, mu, nu, rho)
            summary.invalid += int((active & ~ok).sum())
            lam, mu = np.where(sel, lam3, lam), np.where(sel, mu3, mu)
            nu, rho = np.where(sel, nu3, nu), np.where(sel, rho3, rho)
            nxt = pair_class(lam, mu, nu, rho)
            keys.append(np.stack([c[active] for c in (*cur, *nxt)], axis=1))
            cur, steps = nxt, steps + active
            active = _gap(lam, mu, nu, rho) >= 2
        # closing theta, compared with the floor/ceil midpoints of the starting pair
        first = np.concatenate([np.maximum(lam, nu), np.maximum(mu, rho)], axis=1)
        second = np.concatenate([np.minimum(lam, nu), np.minimum(mu, rho)], axis=1)
        lam0, mu0, nu0, rho0 = coords[ia, :k], coords[ia, k:], coords[ib, :k], coords[ib, k:]
        ceil = np.concatenate([-((-(lam0 + nu0)) // 2), -((-(mu0 + rho0)) // 2)], axis=1)
        floor = np.concatenate([(lam0 + nu0) // 2, (mu0 + rho0) // 2], axis=1)
        summary.wrong_endpoint += int(((first != ceil).any(axis=1) | (second != floor).any(axis=1)).sum())
        summary.over_gap += int((steps > gap0).sum())
        summary.max_steps = max(summary.max_steps, int(steps.max(initial=0)))
        fin = pair_class(first[:, :k], first[:, k:], second[:, :k], second[:, k:])
        keys.append(np.stack([*cur, *fin], axis=1))
        summary.steps += int(steps.sum()) + len(ia)
        keys = [np.unique(np.concatenate(keys), axis=0)]
    distinct = keys[0]
    distinct = distinct[(distinct[:, 0] != distinct[:, 2]) | (distinct[:, 1] != distinct[:, 3])]
    summary.distinct_steps = len(distinct)
    products: dict[tuple[int, int], SchurVector] = {}

    def product(a: int, b: int) -> SchurVector:
        hit = products.get((a, b))
        if hit is None:
            hit = products[(a, b)] = reps[a] * reps[b]
        return hit

    for a, b, c, d in distinct.tolist():
        ok, witness = is_schur_nonneg(product(c, d) - product(a, b))
        if not ok:
            summary.negative.append({"before": [a, b], "after": [c, d],
                                     "partition": list(witness[0]), "coefficient": witness[1]})
    summary.products = len(products)
    return summary


def _valid_pairs(lam, mu, nu, rho):
    ok = np.ones(lam.shape[:-1], dtype=bool)
    for p in (lam, mu, nu, rho):
        ok &= (p >= 0).all(axis=-1) & (np.diff(p, axis=-1) <= 0).all(axis=-1)
    return ok & (mu <= lam).all(axis=-1) & (rho <= nu).all(axis=-1)


def check_midpoint(a, b) -> PositivityCase:
    a, b = as_shape(a), as_shape(b)
    inputs = {"a": format_shape(a), "b": format_shape(b)}
    pair = ShapePair(a, b)
    trace = midpoint_reduction(pair)
    products = [schur_product([p.first, p.second]) for p in trace]
    case = PositivityCase("midpoint", inputs, products[-1] - products[0],
                          details={"steps": len(trace) - 2, "max_gap": max_gap(pair)})
    for prev, nxt in zip(products, products[1:]):
        ok, witness = is_schur_nonneg(nxt - prev)
        if not ok:
            case.failure = f"step difference negative at {list(witness[0])}: {witness[1]}"
            return case
    floor_shape, ceil_shape = okounkov_shapes(a, b)
    if (trace[-1].first, trace[-1].second) != (ceil_shape, floor_shape):
        case.failure = "reduction did not end at the (ceil, floor) pair"
    elif len(trace) - 2 > max_gap(pair):
        case.failure = "more phi∘psi iterations than the largest coordinate gap"
    return case


# -- immanant-level statements -------------------------------------------------

def check_identity(matrix, rows, cols) -> PositivityCase:
    report = minor_product_decomposition(matrix, rows, cols)
    inputs = {"matrix": [list(r) for r in np.asarray(matrix).tolist()], "I": list(rows), "J": list(cols)}
    case = PositivityCase("identity", inputs, details=report.to_json())
    if not report.equal:
        case.failure = f"minor product {report.lhs} != immanant sum {report.rhs}"
    return case


def check_haiman(mu, nu, n: int) -> PositivityCase:
    report = haiman_positivity_check(mu, nu, n)
    inputs = {"mu": list(report.mu), "nu": list(report.nu), "n": n}
    case = PositivityCase("haiman", inputs, details={"immanants": {
        str(w): imm.to_json() for w, imm in report.immanants.items()}})
    if not report.ok:
        w, lam, c = report.violations[0]
        case.failure = f"immanant of [{w}] has coefficient {c} at {list(lam)}"
    return case


# -- sweeps --------------------------------------------------------------------

@dataclass(frozen=True)
class SweepBounds:
    rows: int = 3
    cols: int = 3
    max_cells: int | None = None
    tuple_len: int = 3
    tuple_cells: int = 4
    n: int = 3
    trials: int = 20
    seed: int = 7
    max_cd: int = 2


def _pair_inputs(bounds: SweepBounds) -> Iterator[dict]:
    shapes = [format_shape(s) for s in skew_shapes_in_box(bounds.rows, bounds.cols, bounds.max_cells)]
    for a in shapes:
        for b in shapes:
            yield {"a": a, "b": b}


def _tuple_inputs(bounds: SweepBounds) -> Iterator[dict]:
    family = [format_shape(SkewShape(p)) for size in range(bounds.tuple_cells + 1)
              for p in sorted(partitions_of(size), key=tuple)]
    for length in range(1, bounds.tuple_len + 1):
        for combo in itertools.product(family, repeat=length):
            yield {"shapes": list(combo)}


def sweep_inputs(statement: str, bounds: SweepBounds) -> Iterator[dict]:
    """Inputs of every case in the family for ``statement``, in a stable order."""
    if statement in ("cell_transfer", "okounkov", "fflp", "midpoint"):
        yield from _pair_inputs(bounds)
    elif statement == "cd_power":
        for inputs in _pair_inputs(bounds):
            for c in range(1, bounds.max_cd + 1):
                for d in range(1, bounds.max_cd + 1):
                    yield {**inputs, "c": c, "d": d}
    elif statement == "log_concavity":
        box = partitions_in_box(bounds.rows, bounds.cols)
        for a in box:
            for b in box:
                for c in range(1, bounds.max_cd + 1):
                    for d in range(1, bounds.max_cd + 1):
                        if weighted_average(a, b, c, d) is not None:
                            yield {"a": list(a), "b": list(b), "c": c, "d": d}
    elif statement in ("sorted_tuple", "plus_decomp"):
        yield from _tuple_inputs(bounds)
    elif statement == "llt":
        for lam in partitions_in_box(bounds.rows, bounds.cols):
            for n in range(1, bounds.n + 1):
                for m in range(1, n + 1):
                    yield {"lam": list(lam), "m": m, "n": n}
    elif statement == "minors":
        x = GenJacobiTrudi.standard(bounds.n)
        ground = range(1, bounds.n + 1)
        for k in range(0, bounds.n + 1):
            subsets = [list(s) for s in itertools.combinations(ground, k)]
            for i1, j1, i2, j2 in itertools.product(subsets, repeat=4):
                yield {"I1": i1, "J1": j1, "I2": i2, "J2": j2, "mu": list(x.mu), "nu": list(x.nu), "n": x.n}
    elif statement == "identity":
        rng = np.random.default_rng(bounds.seed)
        for n in range(1, bounds.n + 1):
            for k in range(n + 1):
                for rows in itertools.combinations(range(1, n + 1), k):
                    for cols in itertools.combinations(range(1, n + 1), k):
                        for _ in range(bounds.trials):
                            matrix = random_int_matrix(n, rng)
                            yield {"matrix": [list(r) for r in matrix], "I": list(rows), "J": list(cols)}
    elif statement == "haiman":
        for n in range(1, bounds.n + 1):
            box = partitions_in_box(min(bounds.rows, n), bounds.cols)
            for mu in box:
                for nu in box:
                    yield {"mu": list(mu), "nu": list(nu), "n": n}
    else:
        raise ValueError(f"unknown statement {statement!r}; expected one of {', '.join(STATEMENTS)}")


def evaluate(statement: str, inputs: dict) -> PositivityCase:
    """Run a single case from its JSON-friendly inputs."""
    if statement == "cell_transfer":
        return check_cell_transfer(inputs["a"], inputs["b"])
    if statement == "okounkov":
        return check_okounkov(inputs["a"], inputs["b"])
    if statement == "fflp":
        return check_fflp(inputs["a"], inputs["b"])
    if statement == "midpoint":
        return check_midpoint(inputs["a"], inputs["b"])
    if statement == "cd_power":
        return check_cd_power(inputs["a"], inputs["b"], int(inputs["c"]), int(inputs["d"]))
    if statement == "log_concavity":
        return check_log_concavity(_partition_input(inputs["a"]), _partition_input(inputs["b"]),
                                   int(inputs["c"]), int(inputs["d"]))
    if statement == "sorted_tuple":
        return check_sorted_tuple(inputs["shapes"])
    if statement == "plus_decomp":
        return check_plus_decomp(inputs["shapes"])
    if statement == "llt":
        return check_llt(_partition_input(inputs["lam"]), int(inputs["m"]), int(inputs["n"]))
    if statement == "minors":
        n = int(inputs["n"])
        if "mu" in inputs:
            x = GenJacobiTrudi(tuple(inputs["mu"]), tuple(inputs.get("nu", inputs["mu"])), n)
        else:
            x = GenJacobiTrudi.standard(n)
        return check_minors(inputs["I1"], inputs["J1"], inputs["I2"], inputs["J2"], x)
    if statement == "identity":
        return check_identity(inputs["matrix"], inputs["I"], inputs["J"])
    if statement == "haiman":
        return check_haiman(inputs["mu"], inputs["nu"], int(inputs["n"]))
    raise ValueError(f"unknown statement {statement!r}; expected one of {', '.join(STATEMENTS)}")


def _partition_input(obj) -> Partition:
    return as_shape(obj).outer if isinstance(obj, str) else Partition(obj)


def sweep(statement: str, bounds: SweepBounds | None = None) -> Iterator[PositivityCase]:
    bounds = bounds or SweepBounds()
    for inputs in sweep_inputs(statement, bounds):
        yield evaluate(statement, inputs)
