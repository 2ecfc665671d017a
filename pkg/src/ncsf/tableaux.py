"""Composition diagrams, standard Young composition tableaux, and standard
Young tableaux.

Coordinates are shared across the package: rows are indexed from the bottom
starting at 1, and cell (i, j) is the j-th cell from the left in row i.  A
standard Young composition tableau (SYCT) of shape alpha is a bijective
filling of the diagram of alpha in which

1. every row increases left to right,
2. the first column increases bottom to top,
3. for rows i < j, if the entry at (j, k) is smaller than the entry at
   (i, k+1), then (j, k+1) exists and its entry is also smaller.

SYTs use the matching convention (columns increase bottom to top), so the
column-sorting map ``rho_bar`` lands on valid SYTs without re-indexing.
"""

from dataclasses import dataclass
from functools import cache

from .compositions import (
    Composition,
    Partition,
    check_composition,
    check_partition,
    comp_of,
    compositions_of,
    composition_index,
    underlying_partition,
)
from .errors import DegreeMismatchError, MalformedFillingError

__all__ = [
    "CompositionDiagram",
    "SYCT",
    "SYT",
    "is_valid_syct",
    "enumerate_syct",
    "descent_composition_syct",
    "rho_bar",
    "enumerate_syt",
    "descent_composition_syt",
    "dhat_matrix",
    "kostka_counts",
]


@dataclass(frozen=True)
class CompositionDiagram:
    """Left-justified array of cells, row i (from the bottom) of length shape[i-1]."""

    shape: Composition

    def __post_init__(self):
        object.__setattr__(self, "shape", check_composition(self.shape))

    @property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i + 1, j + 1)
            for i, length in enumerate(self.shape)
            for j in range(length)
        )


def _rows_to_filling(shape, rows):
    return {
        (i + 1, j + 1): value
        for i, row in enumerate(rows)
        for j, value in enumerate(row)
    }


def is_valid_syct(shape: Composition, filling) -> bool:
    """Check the three SYCT conditions for a filling of the diagram of ``shape``.

    ``filling`` maps cells (row, col), rows from the bottom, to entries.
    Raises MalformedFillingError unless it is a bijection from the cells of
    ``shape`` onto {1, ..., n}; returns False only for condition failures.
    """
    shape = check_composition(shape)
    n = sum(shape)
    cells = CompositionDiagram(shape).cells if shape else ()
    if set(filling) != set(cells):
        raise MalformedFillingError("filling does not cover exactly the cells of the shape")
    if sorted(filling.values()) != list(range(1, n + 1)):
        raise MalformedFillingError(f"filling values are not a bijection onto [{n}]")

    ell = len(shape)
    entry = dict(filling)
    # (1) rows increase left to right
    for i in range(1, ell + 1):
        for j in range(1, shape[i - 1]):
            if entry[(i, j)] >= entry[(i, j + 1)]:
                return False
    # (2) the first column increases bottom to top
    for i in range(1, ell):
        if entry[(i, 1)] >= entry[(i + 1, 1)]:
            return False
    # (3) the triple condition
    for j in range(2, ell + 1):
        for i in range(1, j):
            for k in range(1, shape[j - 1] + 1):
                if (i, k + 1) not in entry:
                    continue
                if entry[(j, k)] < entry[(i, k + 1)]:
                    if (j, k + 1) not in entry:
                        return False
                    if entry[(j, k + 1)] >= entry[(i, k + 1)]:
                        return False
    return True


@dataclass(frozen=True)
class SYCT:
    """Standard Young composition tableau; ``rows`` are bottom row first."""

    shape: Composition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = check_composition(self.shape)
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != shape:
            raise MalformedFillingError(f"rows {rows} do not fill shape {shape}")
        if not is_valid_syct(shape, _rows_to_filling(shape, rows)):
            raise ValueError(f"not a valid SYCT of shape {shape}: {rows}")

    @property
    def size(self) -> int:
        return sum(self.shape)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)


@dataclass(frozen=True)
class SYT:
    """Standard Young tableau of partition shape; ``rows`` are bottom row first,
    so columns increase bottom to top."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = check_partition(self.shape)
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != shape:
            raise MalformedFillingError(f"rows {rows} do not fill shape {shape}")
        n = sum(shape)
        if sorted(x for row in rows for x in row) != list(range(1, n + 1)):
            raise MalformedFillingError(f"filling values are not a bijection onto [{n}]")
        for row in rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"rows must increase left to right: {rows}")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise ValueError(f"columns must increase bottom to top: {rows}")

    @property
    def size(self) -> int:
        return sum(self.shape)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)


@cache
def enumerate_syct(alpha: Composition) -> tuple[SYCT, ...]:
    """All SYCTs of shape ``alpha``, ordered lexicographically by reading word.

    Values are placed n, n-1, ..., 1; in each row the filled cells are then
    always a suffix, which lets the three conditions be checked as each value
    is placed.
    """
    alpha = check_composition(alpha)
    n = sum(alpha)
    if n == 0:
        return (SYCT((), ()),)
    ell = len(alpha)
    grid = [[0] * alpha[i] for i in range(ell)]
    rem = list(alpha)  # unfilled cells per row; next cell is column rem[i]-1
    found = []

    def place(value):
        if value == 0:
            found.append(tuple(tuple(row) for row in grid))
            return
        for i in range(ell):
            k = rem[i]
            if k == 0:
                continue
            c = k - 1
            if c == 0:
                # first-column entries must end up increasing bottom to top,
                # so rows above must be done and rows below must not be
                if any(rem[m] for m in range(i + 1, ell)):
                    continue
                if any(rem[m] == 0 for m in range(i)):
                    continue
            ok = True
            for m in range(i):
                # once (m, c+1) is filled the triple condition bites, since
                # the new entry is the smallest placed so far
                if alpha[m] >= c + 2 and rem[m] <= c + 1:
                    if alpha[i] < c + 2 or grid[i][c + 1] >= grid[m][c + 1]:
                        ok = False
                        break
            if not ok:
                continue
            grid[i][c] = value
            rem[i] = c
            place(value - 1)
            grid[i][c] = 0
            rem[i] = k

    place(n)
    found.sort()
    return tuple(SYCT(alpha, rows) for rows in found)


def _column_of(tableau) -> dict[int, int]:
    return {
        value: j + 1
        for row in tableau.rows
        for j, value in enumerate(row)
    }


def descent_composition_syct(tableau: SYCT) -> Composition:
    """comp of { i : i+1 sits in the same column as i or further left }."""
    n = tableau.size
    if n == 0:
        return ()
    col = _column_of(tableau)
    descents = [i for i in range(1, n) if col[i + 1] <= col[i]]
    return comp_of(descents, n)


def descent_composition_syt(tableau: SYT) -> Composition:
    """comp of { i : i+1 sits in a higher row than i }."""
    n = tableau.size
    if n == 0:
        return ()
    row_of = {
        value: i for i, row in enumerate(tableau.rows) for value in row
    }
    descents = [i for i in range(1, n) if row_of[i + 1] > row_of[i]]
    return comp_of(descents, n)


def rho_bar(tableau: SYCT) -> SYT:
    """Sort each column increasingly bottom to top and bottom-justify.

    The result is an SYT whose shape is the underlying partition of the
    SYCT's shape.
    """
    shape = tableau.shape
    lam = underlying_partition(shape)
    n_cols = max(shape, default=0)
    columns = []
    for j in range(n_cols):
        columns.append(sorted(row[j] for row in tableau.rows if len(row) > j))
    rows = tuple(
        tuple(columns[j][i] for j in range(lam[i]))
        for i in range(len(lam))
    )
    return SYT(lam, rows)


@cache
def enumerate_syt(lam: Partition) -> tuple[SYT, ...]:
    """All SYTs of shape ``lam``, ordered lexicographically by reading word."""
    lam = check_partition(lam)
    n = sum(lam)
    if n == 0:
        return (SYT((), ()),)
    ell = len(lam)
    grid = [[0] * lam[i] for i in range(ell)]
    filled = [0] * ell  # cells filled so far in each row, left to right
    found = []

    def place(value):
        if value > n:
            found.append(tuple(tuple(row) for row in grid))
            return
        for i in range(ell):
            j = filled[i]
            if j >= lam[i]:
                continue
            if i > 0 and filled[i - 1] <= j:
                continue
            grid[i][j] = value
            filled[i] += 1
            place(value + 1)
            filled[i] -= 1
            grid[i][j] = 0

    place(1)
    found.sort()
    return tuple(SYT(lam, rows) for rows in found)


@cache
def dhat_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Entry [shape][descent composition] counts SYCTs, both indices in
    canonical composition order."""
    if n < 1:
        raise ValueError(f"degree must be positive: {n}")
    comps = compositions_of(n)
    index = composition_index(n)
    rows = []
    for beta in comps:
        row = [0] * len(comps)
        for tableau in enumerate_syct(beta):
            row[index[descent_composition_syct(tableau)]] += 1
        rows.append(tuple(row))
    return tuple(rows)


def kostka_counts(lam: Partition, mu: Partition) -> int:
    """Number of semistandard fillings of ``lam`` with content ``mu``.

    Rows weakly increase left to right and columns strictly increase bottom
    to top; entry k is used exactly mu[k-1] times.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise DegreeMismatchError(f"degrees differ: {lam} vs {mu}")
    if not lam:
        return 1
    values = len(mu)
    remaining = list(mu)
    grid = [[0] * length for length in lam]
    cells = [(i, j) for i, length in enumerate(lam) for j in range(length)]

    def fill(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = grid[i][j - 1] if j > 0 else 1
        strict_lo = grid[i - 1][j] + 1 if i > 0 else 1
        total = 0
        for v in range(max(lo, strict_lo), values + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[i][j] = v
            total += fill(pos + 1)
            grid[i][j] = 0
            remaining[v - 1] += 1
        return total

    return fill(0)
