"""Points, spans, bases, and affine maps of AG(n,2) on int bitmasks.

A point of AG(n,2) is an n-bit integer: coordinate j (1-based) lives in
bit j-1.  Addition is XOR, so every point is its own inverse and the
affine combinations of a set are exactly the XORs of an odd number of
its elements.  All affine questions are reduced to linear ones by
translating by a fixed base point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DependentBasisError,
    DimensionMismatchError,
    EmptyInputError,
    MixedDimensionError,
    NotInSpanError,
)

MAX_DIM = 16


@dataclass(frozen=True)
class Point:
    """A point of AG(n,2), stored as an n-bit mask."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"ambient dimension must be in 1..{MAX_DIM}, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    def __xor__(self, other: Point) -> Point:
        if self.n != other.n:
            raise MixedDimensionError(f"cannot add points with n={self.n} and n={other.n}")
        return Point(self.mask ^ other.mask, self.n)

    def to_bits(self) -> str:
        """Binary string, leftmost character = coordinate 1 (bit 0)."""
        return "".join("1" if self.mask >> j & 1 else "0" for j in range(self.n))

    @classmethod
    def from_bits(cls, bits: str) -> Point:
        mask = 0
        for j, ch in enumerate(bits):
            if ch == "1":
                mask |= 1 << j
            elif ch != "0":
                raise ValueError(f"invalid coordinate character {ch!r}")
        return cls(mask, len(bits))

    def __repr__(self) -> str:
        return f"Point({self.to_bits()})"


class PointSet:
    """An immutable, duplicate-free set of points sharing one ambient dimension.

    Membership tests are O(1); iteration is in ascending mask order so
    every downstream computation is deterministic.
    """

    __slots__ = ("n", "masks", "_sorted")

    def __init__(self, n: int, masks: Iterable[int] = ()):
        if not 1 <= n <= MAX_DIM:
            raise ValueError(f"ambient dimension must be in 1..{MAX_DIM}, got {n}")
        srt = tuple(sorted(set(masks)))
        if srt and not 0 <= srt[0] <= srt[-1] < (1 << n):
            raise ValueError(f"mask out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", frozenset(srt))
        object.__setattr__(self, "_sorted", srt)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PointSet is immutable")

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> PointSet:
        pts = list(points)
        if not pts:
            raise EmptyInputError("cannot infer ambient dimension from an empty collection")
        n = pts[0].n
        if any(p.n != n for p in pts):
            raise MixedDimensionError("points with mixed ambient dimensions")
        return cls(n, (p.mask for p in pts))

    def sorted_masks(self) -> tuple[int, ...]:
        return self._sorted

    def points(self) -> tuple[Point, ...]:
        return tuple(Point(m, self.n) for m in self._sorted)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points())

    def __len__(self) -> int:
        return len(self._sorted)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Point):
            return item.n == self.n and item.mask in self.masks
        return item in self.masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"PointSet(n={self.n}, {{{', '.join(str(m) for m in self._sorted)}}})"


class XorBasis:
    """Incremental GF(2) row basis keyed by lowest set bit.

    ``insert`` tracks, per stored vector, which of the inserted vectors
    combine into it (the marker), so ``solve`` reports a combination of
    the original insertions rather than of reduced rows.
    """

    __slots__ = ("table",)

    def __init__(self) -> None:
        self.table: dict[int, tuple[int, int]] = {}

    def insert(self, vec: int, marker: int = 0) -> bool:
        """Add vec; return False (and change nothing) if it is dependent."""
        return self.insert_tracked(vec, marker) is not None

    def insert_tracked(self, vec: int, marker: int = 0) -> int | None:
        """Like insert, but return the pivot key created (for later removal)."""
        r, mk = vec, marker
        table = self.table
        while r:
            low = r & -r
            entry = table.get(low)
            if entry is None:
                table[low] = (r, mk)
                return low
            r ^= entry[0]
            mk ^= entry[1]
        return None

    def remove_pivot(self, pivot: int) -> None:
        """Undo an insert_tracked; only valid for the most recent insertion."""
        del self.table[pivot]

    def solve(self, vec: int) -> int | None:
        """Marker combination producing vec, or None if vec is outside the span."""
        r, mk = vec, 0
        table = self.table
        while r:
            low = r & -r
            entry = table.get(low)
            if entry is None:
                return None
            r ^= entry[0]
            mk ^= entry[1]
        return mk

    def contains(self, vec: int) -> bool:
        return self.solve(vec) is not None

    def copy(self) -> XorBasis:
        dup = XorBasis.__new__(XorBasis)
        dup.table = dict(self.table)
        return dup

    @property
    def rank(self) -> int:
        return len(self.table)


@dataclass(frozen=True)
class AffineMap:
    """The map x -> L(x) + b over GF(2); rows[i] is row i of L as a bitmask."""

    n: int
    rows: tuple[int, ...]
    translation: int

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} matrix rows, got {len(self.rows)}")
        limit = 1 << self.n
        if any(not 0 <= r < limit for r in self.rows) or not 0 <= self.translation < limit:
            raise ValueError("matrix row or translation out of range")

    @classmethod
    def identity(cls, n: int) -> AffineMap:
        return cls(n, tuple(1 << i for i in range(n)), 0)

    @classmethod
    def translation_by(cls, p: Point) -> AffineMap:
        return cls(p.n, tuple(1 << i for i in range(p.n)), p.mask)

    def apply_mask(self, x: int) -> int:
        y = self.translation
        for i, row in enumerate(self.rows):
            y ^= ((row & x).bit_count() & 1) << i
        return y

    def __call__(self, p: Point) -> Point:
        if p.n != self.n:
            raise DimensionMismatchError(f"map on n={self.n} applied to point with n={p.n}")
        return Point(self.apply_mask(p.mask), self.n)

    @property
    def is_invertible(self) -> bool:
        xb = XorBasis()
        return all(xb.insert(row) for row in self.rows)

    def columns(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in range(self.n):
                if row >> j & 1:
                    cols[j] |= 1 << i
        return tuple(cols)

    def compose(self, other: AffineMap) -> AffineMap:
        """Return self after other: x -> self(other(x))."""
        if self.n != other.n:
            raise DimensionMismatchError("cannot compose maps of different dimensions")
        other_cols = other.columns()
        rows = []
        for row in self.rows:
            out = 0
            for j, col in enumerate(other_cols):
                out |= ((row & col).bit_count() & 1) << j
            rows.append(out)
        lin_b = 0
        for i, row in enumerate(self.rows):
            lin_b ^= ((row & other.translation).bit_count() & 1) << i
        return AffineMap(self.n, tuple(rows), lin_b ^ self.translation)

    def inverse(self) -> AffineMap:
        """Inverse map; raises ValueError if the linear part is singular."""
        n = self.n
        work = [self.rows[i] | (1 << (n + i)) for i in range(n)]
        row_at = 0
        for col in range(n):
            pivot = None
            for r in range(row_at, n):
                if work[r] >> col & 1:
                    pivot = r
                    break
            if pivot is None:
                raise ValueError("affine map is not invertible")
            work[row_at], work[pivot] = work[pivot], work[row_at]
            for r in range(n):
                if r != row_at and work[r] >> col & 1:
                    work[r] ^= work[row_at]
            row_at += 1
        inv_rows = tuple(work[i] >> n for i in range(n))
        inv = AffineMap(n, inv_rows, 0)
        b_inv = inv.apply_mask(self.translation)
        return AffineMap(n, inv_rows, b_inv)


def _require_same_n(points: Sequence[Point]) -> int:
    n = points[0].n
    for p in points[1:]:
        if p.n != n:
            raise MixedDimensionError("points with mixed ambient dimensions")
    return n


def xor_sum(points: Sequence[Point]) -> Point:
    """XOR of a non-empty list of points (an affine combination when the count is odd)."""
    if not points:
        raise EmptyInputError("xor_sum of no points")
    n = _require_same_n(points)
    acc = 0
    for p in points:
        acc ^= p.mask
    return Point(acc, n)


def _span_masks(masks: Sequence[int]) -> set[int]:
    t = masks[0]
    xb = XorBasis()
    for m in masks[1:]:
        xb.insert(m ^ t)
    span = [0]
    for vec, _ in xb.table.values():
        span += [s ^ vec for s in span]
    return {s ^ t for s in span}


def _affine_rank(masks: Sequence[int]) -> int:
    t = masks[0]
    xb = XorBasis()
    for m in masks[1:]:
        xb.insert(m ^ t)
    return xb.rank


def affine_span(s: PointSet) -> PointSet:
    """All odd-count XOR combinations of s: the smallest flat containing it."""
    if len(s) == 0:
        raise EmptyInputError("affine span of the empty set")
    return PointSet(s.n, _span_masks(s.sorted_masks()))


def affine_dim(s: PointSet) -> int:
    """Dimension of the affine span of s."""
    if len(s) == 0:
        raise EmptyInputError("affine dimension of the empty set")
    return _affine_rank(s.sorted_masks())


def is_affinely_independent(s: PointSet) -> bool:
    """True iff no point of s is an odd-count XOR of other points of s."""
    if len(s) == 0:
        raise EmptyInputError("independence of the empty set")
    return affine_dim(s) == len(s) - 1


def _greedy_basis_masks(sorted_masks: Sequence[int]) -> list[int]:
    first = sorted_masks[0]
    chosen = [first]
    xb = XorBasis()
    for m in sorted_masks[1:]:
        if xb.insert(m ^ first):
            chosen.append(m)
    return chosen


def extract_basis(s: PointSet) -> tuple[Point, ...]:
    """Deterministic affine basis: scan ascending masks, keep rank-increasing points."""
    if len(s) == 0:
        raise EmptyInputError("basis of the empty set")
    return tuple(Point(m, s.n) for m in _greedy_basis_masks(s.sorted_masks()))


def _support_solver(basis_masks: Sequence[int]) -> XorBasis:
    """Solver whose markers are basis positions 1..m; raises if basis is dependent."""
    t = basis_masks[0]
    xb = XorBasis()
    for i, m in enumerate(basis_masks[1:], start=1):
        if not xb.insert(m ^ t, 1 << i):
            raise DependentBasisError("basis is affinely dependent")
    return xb


def _solve_support(xb: XorBasis, t: int, x: int) -> int | None:
    marker = xb.solve(x ^ t)
    if marker is None:
        return None
    # the translate itself joins the combination whenever the count is even
    if marker.bit_count() & 1 == 0:
        marker |= 1
    return marker


def coordinates(basis: Sequence[Point], x: Point) -> int:
    """Subset mask over basis positions of the unique odd subset XORing to x."""
    if not basis:
        raise EmptyInputError("coordinates with respect to an empty basis")
    _require_same_n(list(basis) + [x])
    basis_masks = [p.mask for p in basis]
    xb = _support_solver(basis_masks)
    support = _solve_support(xb, basis_masks[0], x.mask)
    if support is None:
        raise NotInSpanError(f"point {x.mask} is outside the span of the basis")
    return support


def apply_affine_map(t: AffineMap, s: PointSet) -> PointSet:
    """Image of s under t (a set: collisions collapse when t is singular)."""
    if t.n != s.n:
        raise DimensionMismatchError(f"map on n={t.n} applied to set with n={s.n}")
    return PointSet(s.n, (t.apply_mask(m) for m in s.sorted_masks()))


def random_invertible_affine(n: int, seed: int) -> AffineMap:
    """Seeded random invertible affine map (Mersenne Twister via random.Random).

    Rows of the linear part are drawn one at a time and redrawn while
    dependent, so the result is deterministic for a given seed on every
    platform.
    """
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    rng = random.Random(seed)
    rows: list[int] = []
    xb = XorBasis()
    while len(rows) < n:
        candidate = rng.getrandbits(n)
        if xb.insert(candidate):
            rows.append(candidate)
    translation = rng.getrandbits(n)
    return AffineMap(n, tuple(rows), translation)
