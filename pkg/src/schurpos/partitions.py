"""Partitions, skew shapes, index sets and the shape-level operations on them.

Partitions are stored as tuples with trailing zeros stripped.  Every
coordinatewise binary operation pads both operands with zeros to a common
length first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Raised for invalid partitions, skew shapes or index sets."""


class ShapeParseError(ShapeError):
    """Raised when shape text cannot be parsed; carries the column position."""

    def __init__(self, text: str, pos: int, reason: str):
        self.text = text
        self.pos = pos
        super().__init__(f"cannot parse {text!r} at position {pos}: {reason}")


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are accepted on input and stripped, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and also compares equal to the plain tuple ``(2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ShapeError(f"parts are not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ShapeError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based part lookup, zero beyond the length."""
        return self[i] if i < len(self) else 0

    def padded(self, k: int) -> tuple[int, ...]:
        if k < len(self):
            raise ShapeError(f"{tuple(self)} has more than {k} parts")
        return tuple(self) + (0,) * (k - len(self))

    def contains(self, other: Sequence[int]) -> bool:
        """Young diagram containment ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def conjugate(self) -> Partition:
        return conjugate(self)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not isinstance(self.outer, Partition):
            object.__setattr__(self, "outer", Partition(self.outer))
        if not isinstance(self.inner, Partition):
            object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ShapeError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def padded(self, k: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
        k = len(self.outer) if k is None else k
        return self.outer.padded(k), self.inner.padded(k)

    def conjugate(self) -> SkewShape:
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def normalized(self) -> SkewShape:
        """Equivalent shape with empty rows removed and flush against column 0.

        Removing a row with ``outer[r] == inner[r]`` leaves the tableau
        conditions untouched, since rows above and below it share no column.
        """
        rows = [(a, b) for a, b in zip(*self.padded()) if a != b]
        if not rows:
            return SkewShape(Partition())
        shift = rows[-1][1]
        return SkewShape(Partition(a - shift for a, _ in rows),
                         Partition(b - shift for _, b in rows))

    def __str__(self):
        return format_shape(self)


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing subset of ``[1, ambient]``."""

    elements: tuple[int, ...]
    ambient: int

    def __post_init__(self):
        elements = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise ShapeError(f"index set not strictly increasing: {elements}")
        if elements and (elements[0] < 1 or elements[-1] > self.ambient):
            raise ShapeError(f"index set {elements} not inside [1, {self.ambient}]")

    @classmethod
    def of(cls, elements: Iterable[int], ambient: int) -> IndexSet:
        return cls(tuple(sorted(elements)), ambient)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def complement(self) -> IndexSet:
        return IndexSet(tuple(i for i in range(1, self.ambient + 1) if i not in self.elements),
                        self.ambient)

    def hat(self) -> IndexSet:
        """``{2n+1-i}`` inside ``[1, 2n]`` where ``n`` is the ambient size."""
        n = self.ambient
        return IndexSet.of((2 * n + 1 - i for i in self.elements), 2 * n)

    def union(self, other: IndexSet) -> IndexSet:
        ambient = max(self.ambient, other.ambient)
        return IndexSet.of(set(self.elements) | set(other.elements), ambient)


@dataclass(frozen=True)
class ShapePair:
    first: SkewShape
    second: SkewShape

    @property
    def k(self) -> int:
        """Common part count used for coordinatewise operations."""
        return max(len(self.first.outer), len(self.second.outer), 1)

    def coordinates(self, k: int | None = None):
        """Padded ``(lam, mu, nu, rho)`` for the pair ``(lam/mu, nu/rho)``."""
        k = self.k if k is None else k
        lam, mu = self.first.padded(k)
        nu, rho = self.second.padded(k)
        return lam, mu, nu, rho

    def flip(self) -> ShapePair:
        return ShapePair(self.second, self.first)


def _pad2(a: Sequence[int], b: Sequence[int]):
    k = max(len(a), len(b))
    return tuple(a) + (0,) * (k - len(a)), tuple(b) + (0,) * (k - len(b))


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def vee_wedge(a, b):
    """Componentwise ``(max, min)`` of two partitions, skew shapes or index sets."""
    if isinstance(a, SkewShape):
        outer_v, outer_w = vee_wedge(a.outer, b.outer)
        inner_v, inner_w = vee_wedge(a.inner, b.inner)
        # validity follows from monotonicity of max/min; checked anyway
        return SkewShape(outer_v, inner_v), SkewShape(outer_w, inner_w)
    if isinstance(a, IndexSet):
        if len(a) != len(b):
            raise ShapeError("index sets must have the same cardinality")
        ambient = max(a.ambient, b.ambient)
        return (IndexSet(tuple(map(max, a, b)), ambient),
                IndexSet(tuple(map(min, a, b)), ambient))
    a, b = _pad2(a, b)
    return Partition(map(max, a, b)), Partition(map(min, a, b))


def union_sort(a: Sequence[int], b: Sequence[int]):
    """Return ``(a ∪ b, sort_1(a, b), sort_2(a, b))``.

    ``sort_1`` takes the 1st, 3rd, 5th, ... parts of the merged decreasing
    sequence and ``sort_2`` the 2nd, 4th, ...  Zero padding is irrelevant:
    zeros always sort to the end and get stripped.
    """
    merged = sorted(chain(a, b), reverse=True)
    return Partition(merged), Partition(merged[0::2]), Partition(merged[1::2])


def merge_parts(partitions: Iterable[Sequence[int]]) -> Partition:
    return Partition(sorted(chain.from_iterable(partitions), reverse=True))


def stride_select(p: Sequence[int], i: int, n: int) -> Partition:
    """Every ``n``-th part of ``p`` starting from the ``i``-th (1-based)."""
    if not 1 <= i <= n:
        raise ShapeError(f"need 1 <= i <= n, got i={i}, n={n}")
    return Partition(tuple(p)[i - 1::n])


def brace_select(p: Sequence[int], i: int, n: int) -> Partition:
    """Conjugate of ``stride_select`` applied to the conjugate of ``p``."""
    return conjugate(stride_select(conjugate(p), i, n))


def midpoint(a: Sequence[int], b: Sequence[int]) -> tuple[Partition, Partition]:
    a, b = _pad2(a, b)
    return (Partition((x + y) // 2 for x, y in zip(a, b)),
            Partition(-((-x - y) // 2) for x, y in zip(a, b)))


def add_partitions(*ps: Sequence[int]) -> Partition:
    k = max((len(p) for p in ps), default=0)
    return Partition(sum(p[i] if i < len(p) else 0 for p in ps) for i in range(k))


def scale_partition(p: Sequence[int], c: int) -> Partition:
    return Partition(c * x for x in p)


def shift(s: SkewShape, direction: str, k: int | None = None) -> SkewShape:
    """Move every row of ``s`` (viewed with ``k`` parts) one column right or left."""
    k = len(s.outer) if k is None else k
    outer, inner = s.padded(k)
    if direction == "right":
        step = 1
    elif direction == "left":
        if min(outer + inner, default=0) < 1:
            raise ShapeError(f"cannot shift {format_shape(s)} left with {k} parts")
        step = -1
    else:
        raise ValueError(f"direction must be 'left' or 'right', not {direction!r}")
    return SkewShape(Partition(x + step for x in outer), Partition(x + step for x in inner))


def shape_to_subsets(s: SkewShape, k: int, n: int) -> tuple[IndexSet, IndexSet]:
    """Row and column sets whose minor of ``(h_{j-i})`` is ``s_{outer/inner}``."""
    outer, inner = s.padded(k)
    if k > n or (outer and outer[0] + k > n):
        raise ShapeError(f"{format_shape(s)} with {k} rows does not fit in n={n}")
    rows = IndexSet(tuple(inner[k - r] + r for r in range(1, k + 1)), n)
    cols = IndexSet(tuple(outer[k - r] + r for r in range(1, k + 1)), n)
    return rows, cols


def subsets_to_shape(rows: IndexSet, cols: IndexSet) -> SkewShape:
    if len(rows) != len(cols):
        raise ShapeError("row and column sets differ in size")
    k = len(rows)
    inner = [rows.elements[k - j] - (k + 1 - j) for j in range(1, k + 1)]
    outer = [cols.elements[k - j] - (k + 1 - j) for j in range(1, k + 1)]
    return SkewShape(Partition(outer), Partition(inner))


def ainv(v: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``v[i] < v[j]``."""
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])


def interleaved(parts: Sequence[Sequence[int]]) -> list[int]:
    """``p1[0], p2[0], ..., pn[0], p1[1], ...`` after padding to a common length."""
    k = max((len(p) for p in parts), default=0)
    return [p[j] if j < len(p) else 0 for j in range(k) for p in parts]


def ainv_shapes(shapes: Sequence[SkewShape]) -> int:
    return (ainv(interleaved([s.outer for s in shapes]))
            + ainv(interleaved([s.inner for s in shapes])))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a ``rows x cols`` box, by size then lexicographic."""
    out = []

    def rec(prefix, bound):
        out.append(Partition(prefix))
        if len(prefix) < rows:
            for x in range(1, bound + 1):
                rec(prefix + [x], x)

    rec([], cols)
    return sorted(out, key=lambda p: (p.size, tuple(p)))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    max_part = n if max_part is None else max_part
    if n == 0:
        return [Partition()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return out


def skew_shapes_in_box(rows: int, cols: int, max_cells: int | None = None) -> list[SkewShape]:
    """All ``outer/inner`` with outer in the box, by cell count then lexicographic."""
    box = partitions_in_box(rows, cols)
    shapes = [SkewShape(o, i) for o in box for i in box if o.contains(i)]
    if max_cells is not None:
        shapes = [s for s in shapes if s.size <= max_cells]
    return sorted(shapes, key=lambda s: (s.size, tuple(s.outer), tuple(s.inner)))


# -- text encoding -----------------------------------------------------------

def parse_partition(text: str, offset: int = 0, whole: str | None = None) -> Partition:
    whole = text if whole is None else whole
    body = text.strip()
    if body in ("", "0", "()", "∅"):
        return Partition()
    lead = len(text) - len(text.lstrip())
    parts = []
    pos = offset + lead
    for chunk in body.split(","):
        token = chunk.strip()
        if not token.isdigit():
            raise ShapeParseError(whole, pos, f"expected a nonnegative integer, got {token!r}")
        parts.append(int(token))
        pos += len(chunk) + 1
    try:
        return Partition(parts)
    except ShapeError as exc:
        raise ShapeParseError(whole, offset + lead, str(exc)) from None


def parse_shape(text: str) -> SkewShape:
    """Parse ``3,1`` or ``3,1/1`` into a skew shape."""
    if text.count("/") > 1:
        raise ShapeParseError(text, text.index("/", text.index("/") + 1), "more than one '/'")
    if "/" in text:
        cut = text.index("/")
        outer = parse_partition(text[:cut], 0, text)
        inner = parse_partition(text[cut + 1:], cut + 1, text)
    else:
        outer, inner = parse_partition(text), Partition()
    try:
        return SkewShape(outer, inner)
    except ShapeError as exc:
        raise ShapeParseError(text, text.index("/") + 1 if "/" in text else 0, str(exc)) from None


def format_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p)) if p else "0"


def format_shape(s: SkewShape) -> str:
    if not s.inner:
        return format_partition(s.outer)
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}"


def as_shape(obj) -> SkewShape:
    """Coerce text, a partition-like sequence, or a ``[outer, inner]`` pair."""
    if isinstance(obj, SkewShape):
        return obj
    if isinstance(obj, str):
        return parse_shape(obj)
    if isinstance(obj, dict):
        return SkewShape(Partition(obj["outer"]), Partition(obj.get("inner", ())))
    obj = list(obj)
    if len(obj) == 2 and all(isinstance(x, (list, tuple)) for x in obj):
        return SkewShape(Partition(obj[0]), Partition(obj[1]))
    return SkewShape(Partition(obj))
