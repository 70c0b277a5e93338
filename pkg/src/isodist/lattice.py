"""Discrete analogue: subsets of the grid [k]^n under Manhattan distance.

Cells are n-tuples over {0, ..., k-1}.  The simplicial order sorts cells
by coordinate sum and, inside a level, antilexicographically by the
first differing coordinate (larger first coordinate means earlier).  The
extremal-pair fact checked here: among all pairs of subsets of sizes r
and s, the initial and final segments of the simplicial order realize
the largest possible set distance.  verify_extremal_pairs confirms it by
exhaustive search on small grids.

count_cells_sum_le and scaled_max_distance handle the slab counting on
the scaled lattice {0, 1/m, ..., 1}^n whose normalized max distance
approaches the continuous diagonal-slab value -2 sqrt(pi/6) phi_inv(eps).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

import numpy as np

from .bodies import validate_epsilon
from .errors import (BudgetExceededError, DimensionMismatchError, DomainError,
                     EmptySetError, RangeError)

Cell = Tuple[int, ...]

_EXACT_CELL_LIMIT = 32
DEFAULT_PAIR_BUDGET = 10_000_000


@dataclass(frozen=True)
class Grid:
    k: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.n < 1:
            raise DomainError(f"grid needs k >= 2 and n >= 1, got k={self.k}, n={self.n}")

    @property
    def size(self) -> int:
        return self.k**self.n

    def cells(self) -> Iterator[Cell]:
        # row-major: last coordinate fastest, matching index()
        return itertools.product(range(self.k), repeat=self.n)

    def index(self, cell: Cell) -> int:
        i = 0
        for c in cell:
            if not 0 <= c < self.k:
                raise DomainError(f"cell {cell} outside grid")
            i = i * self.k + c
        return i

    def cell(self, index: int) -> Cell:
        if not 0 <= index < self.size:
            raise RangeError(f"index {index} outside grid of size {self.size}")
        out = []
        for _ in range(self.n):
            index, c = divmod(index, self.k)
            out.append(c)
        return tuple(reversed(out))


def simplicial_key(cell: Cell):
    return (sum(cell), tuple(-c for c in cell))


def simplicial_cmp(x: Cell, y: Cell) -> int:
    """-1, 0 or 1 as x precedes, equals or follows y in the simplicial order.

    x < y iff sum(x) < sum(y), or the sums tie and x_j > y_j at the first
    index j where they differ.
    """
    if len(x) != len(y):
        raise DimensionMismatchError("cells of different dimension")
    kx, ky = simplicial_key(x), simplicial_key(y)
    # bool() so numpy integer coordinates cannot turn this into np.bool_
    return bool(kx > ky) - bool(kx < ky)


@dataclass(frozen=True)
class SubsetHandle:
    grid: Grid
    mask: int

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def contains(self, cell: Cell) -> bool:
        return bool(self.mask >> self.grid.index(cell) & 1)

    def cells(self) -> list[Cell]:
        return [self.grid.cell(i) for i in range(self.grid.size) if self.mask >> i & 1]

    def indices(self) -> list[int]:
        return [i for i in range(self.grid.size) if self.mask >> i & 1]

    @classmethod
    def from_cells(cls, grid: Grid, cells: Sequence[Cell]) -> "SubsetHandle":
        mask = 0
        for c in cells:
            mask |= 1 << grid.index(c)
        return cls(grid, mask)


def _segment(grid: Grid, count: int, final: bool) -> SubsetHandle:
    if not 0 <= count <= grid.size:
        raise RangeError(f"segment size {count} outside [0, {grid.size}]")
    order = sorted(grid.cells(), key=simplicial_key)
    chosen = order[grid.size - count:] if final else order[:count]
    return SubsetHandle.from_cells(grid, chosen)


def initial_segment(grid: Grid, r: int) -> SubsetHandle:
    """First r cells of the simplicial order."""
    return _segment(grid, r, final=False)


def final_segment(grid: Grid, s: int) -> SubsetHandle:
    """Last s cells of the simplicial order."""
    return _segment(grid, s, final=True)


def t_boundary(handle: SubsetHandle, t: int) -> SubsetHandle:
    """Closed t-neighborhood: cells within lattice distance t of the set.

    BFS over the 2n-neighbor adjacency (one coordinate +-1 per step);
    t = 0 returns the set itself.
    """
    if t < 0:
        raise DomainError("t must be >= 0")
    if handle.mask == 0:
        raise EmptySetError("t-boundary of an empty set")
    grid = handle.grid
    frontier = set(handle.cells())
    seen = set(frontier)
    for _ in range(t):
        nxt = set()
        for cell in frontier:
            for i in range(grid.n):
                for d in (-1, 1):
                    c = cell[i] + d
                    if 0 <= c < grid.k:
                        nb = cell[:i] + (c,) + cell[i + 1:]
                        if nb not in seen:
                            nxt.add(nb)
        seen |= nxt
        frontier = nxt
        if not frontier:
            break
    return SubsetHandle.from_cells(grid, sorted(seen))


def set_distance(a: SubsetHandle, b: SubsetHandle) -> int:
    """Smallest Manhattan distance over pairs (x, y) in A x B."""
    if a.grid != b.grid:
        raise DimensionMismatchError("subsets live on different grids")
    if a.mask == 0 or b.mask == 0:
        raise EmptySetError("distance needs two nonempty sets")
    ca = np.array(a.cells(), dtype=np.int64)
    cb = np.array(b.cells(), dtype=np.int64)
    d = np.abs(ca[:, None, :] - cb[None, :, :]).sum(axis=2)
    return int(d.min())


@dataclass(frozen=True)
class ExtremalCheck:
    k: int
    n: int
    r: int
    s: int
    brute_max: int
    segment_distance: int
    agree: bool
    search_space: int


@lru_cache(maxsize=None)
def _distance_matrix(k: int, n: int) -> np.ndarray:
    coords = np.array(list(Grid(k, n).cells()), dtype=np.int64)
    return np.abs(coords[:, None, :] - coords[None, :, :]).sum(axis=2)


@lru_cache(maxsize=None)
def _sweep_max_by_s(k: int, n: int, r: int) -> tuple:
    """For each s, the max over all |A| = r of the s-th largest min-distance
    to A.  Picking the s farthest cells is the exact best B for a fixed A,
    so best[s-1] equals the literal max over (A, B) pairs."""
    D = _distance_matrix(k, n)
    size = k**n
    best = np.zeros(size, dtype=np.int64)
    for A in itertools.combinations(range(size), r):
        d = D[:, A].min(axis=1)
        d[::-1].sort()
        np.maximum(best, d, out=best)
    return tuple(int(v) for v in best)


def verify_extremal_pairs(grid: Grid, r: int, s: int,
                          budget: int = DEFAULT_PAIR_BUDGET) -> ExtremalCheck:
    """Exhaustively compare the brute-force extremal distance with the
    simplicial initial/final segment distance.

    The search space is counted as C(k^n, r) * C(k^n, s) pairs; requests
    beyond the budget raise BudgetExceededError carrying that size.
    """
    if grid.size > _EXACT_CELL_LIMIT:
        raise RangeError(f"exact mode needs k^n <= {_EXACT_CELL_LIMIT}, got {grid.size}")
    if not (1 <= r <= grid.size and 1 <= s <= grid.size):
        raise RangeError(f"need 1 <= r, s <= {grid.size}")
    space = math.comb(grid.size, r) * math.comb(grid.size, s)
    if space > budget:
        raise BudgetExceededError(
            f"search space {space} exceeds budget {budget}", space)
    brute = _sweep_max_by_s(grid.k, grid.n, r)[s - 1]
    seg = set_distance(initial_segment(grid, r), final_segment(grid, s))
    return ExtremalCheck(grid.k, grid.n, r, s, brute, seg, brute == seg, space)


def count_cells_sum_le(k: int, n: int, s: int) -> int:
    """Number of cells of [k]^n with coordinate sum <= s, exactly.

    Dimension-by-dimension prefix-sum recurrence on python integers, so
    the count stays exact far beyond 2^53.
    """
    if k < 2 or n < 1:
        raise DomainError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    s = int(s)
    if s < 0:
        return 0
    top = n * (k - 1)
    if s >= top:
        return k**n
    counts = [1] + [0] * top  # counts[j] = #cells of current prefix with sum j
    for dim in range(1, n + 1):
        prefix = list(itertools.accumulate(counts))
        hi = dim * (k - 1)
        nxt = [0] * (top + 1)
        for j in range(hi + 1):
            lo = j - (k - 1)
            nxt[j] = prefix[j] - (prefix[lo - 1] if lo >= 1 else 0)
        counts = nxt
    return sum(counts[: s + 1])


def scaled_max_distance(n: int, m: int, eps: float) -> float:
    """Normalized max distance between eps-dense slabs of the lattice cube.

    On {0, 1/m, ..., 1}^n, take the largest pair of opposing
    coordinate-sum slabs each holding at least eps * (m+1)^n cells; their
    Manhattan distance is (s_hi - s_lo) lattice steps, reported here in
    cube units and normalized by sqrt(n):  (s_hi - s_lo) / (m sqrt(n)).
    The threshold comparison is exact (integer counts against the binary
    value of eps).
    """
    eps = validate_epsilon(eps)
    if n < 1 or m < 1:
        raise DomainError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    k = m + 1
    need = Fraction(eps) * k**n
    lo, hi = 0, n * m  # smallest s with count >= need, by bisection
    while lo < hi:
        mid = (lo + hi) // 2
        if count_cells_sum_le(k, n, mid) >= need:
            hi = mid
        else:
            lo = mid + 1
    s_lo = lo
    steps = max(0, n * m - 2 * s_lo)
    return steps / (m * math.sqrt(n))
