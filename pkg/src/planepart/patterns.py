"""Strict plane partitions, generalized Gelfand-Tsetlin patterns and their statistics.

Row indexing of an (r, n, c)-pattern: row 1 is the longest (bottom) row and
row r+1 the top row.  Row i holds a_{i,j} for j = i-1 .. n+1 with fixed
boundary entries a_{i,i-1} = 0 and a_{i,n+1} = c, so its interior has n-i+1
entries.  Whenever rows are passed in or printed they are listed top row
first, matching the usual triangular display.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence


class PatternError(ValueError):
    """Invalid pattern or partition; ``cell`` locates the offending entry."""

    def __init__(self, message: str, cell: tuple[int, int] | None = None):
        super().__init__(message if cell is None else f"{message} at {cell}")
        self.cell = cell


# ---------------------------------------------------------------------------
# partitions and strict plane partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise PatternError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class StrictPlanePartition:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def norm(self) -> int:
        return sum(map(sum, self.rows))

    @property
    def odd_rows(self) -> int:
        return sum(len(r) & 1 for r in self.rows)

    def count_eq(self, v: int) -> int:
        return sum(r.count(v) for r in self.rows)

    def to_json_obj(self, n: int | None = None) -> dict:
        obj = {"rows": [list(r) for r in self.rows], "norm": self.norm, "odd_rows": self.odd_rows}
        if n is not None:
            obj["count_n"] = self.count_eq(n)
        return obj


def spp_validate(rows: Sequence[Sequence[int]]) -> StrictPlanePartition:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    for s, row in enumerate(rows):
        if not row:
            raise PatternError("empty row", (s, 0))
        for t, x in enumerate(row):
            if x < 1:
                raise PatternError("parts must be positive", (s, t))
            if t and row[t - 1] < x:
                raise PatternError("row not weakly decreasing", (s, t))
            if s:
                above = rows[s - 1]
                if t >= len(above):
                    raise PatternError("row longer than the row above", (s, t))
                if above[t] <= x:
                    raise PatternError("column not strictly decreasing", (s, t))
    return StrictPlanePartition(rows)


def spp_norm(p: StrictPlanePartition) -> int:
    return p.norm


def spp_odd_rows(p: StrictPlanePartition) -> int:
    return p.odd_rows


def spp_count_eq(p: StrictPlanePartition, v: int) -> int:
    return p.count_eq(v)


def _rows_below(bound: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Nonempty weakly decreasing positive rows with row[t] <= bound[t], in tuple order."""

    def extend(prefix, last):
        t = len(prefix)
        if t == len(bound):
            return
        for x in range(1, min(last, bound[t]) + 1):
            row = prefix + (x,)
            yield row
            yield from extend(row, x)

    yield from extend((), bound[0] if bound else 0)


def spp_enumerate(n: int, c: int) -> Iterator[StrictPlanePartition]:
    """All strict plane partitions with parts <= n and at most c columns.

    Order is lexicographic on the tuple of rows, so a partition precedes its
    extensions by further rows.
    """
    if n < 0 or c < 0:
        raise ValueError("n and c must be non-negative")

    def dfs(rows, bound):
        for row in _rows_below(bound):
            new = rows + (row,)
            yield StrictPlanePartition(new)
            nb = [x - 1 for x in row]
            while nb and nb[-1] < 1:
                nb.pop()
            if nb:
                yield from dfs(new, nb)

    yield StrictPlanePartition(())
    if n and c:
        yield from dfs((), [n] * c)


# ---------------------------------------------------------------------------
# generalized Gelfand-Tsetlin patterns


def between(w: int, e: int) -> range:
    """Admissible values below the pair (w, e): weakly between, or strictly when w > e."""
    if w <= e:
        return range(w, e + 1)
    return range(e + 1, w)


def row_inversions(full_row: Sequence[int]) -> int:
    return sum(1 for a, b in zip(full_row, full_row[1:]) if a > b)


@dataclass(frozen=True)
class GTPattern:
    r: int
    n: int
    c: int
    rows: tuple[tuple[int, ...], ...]  # full rows, row 1 first

    def row(self, i: int) -> tuple[int, ...]:
        """Full row i (1-based), boundaries included."""
        return self.rows[i - 1]

    def interior(self, i: int) -> tuple[int, ...]:
        return self.rows[i - 1][1:-1]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - (i - 1)]

    @property
    def top(self) -> tuple[int, ...]:
        return self.interior(self.r + 1)

    @property
    def inversions(self) -> int:
        return sum(row_inversions(self.rows[i - 1]) for i in range(2, self.r + 2))

    @property
    def sign(self) -> int:
        return -1 if self.inversions & 1 else 1

    @property
    def norm(self) -> int:
        return sum(sum(row[1:-1]) for row in self.rows)

    @property
    def odd_bottom(self) -> int:
        """Number of odd entries among a_{1,1}, ..., a_{1,n}."""
        return sum(x & 1 for x in self.interior(1))

    def display_rows(self) -> list[list[int]]:
        return [list(row) for row in reversed(self.rows)]

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "c": self.c,
            "rows": self.display_rows(),
            "inversions": self.inversions,
            "sign": self.sign,
            "norm": self.norm,
        }


def gt_validate(r: int, n: int, c: int, rows: Sequence[Sequence[int]]) -> GTPattern:
    """Build a pattern from rows listed top first, either full or interior only."""
    if not (0 <= r <= n):
        raise PatternError(f"need 0 <= r <= n, got r={r}, n={n}")
    if len(rows) != r + 1:
        raise PatternError(f"expected {r + 1} rows, got {len(rows)}")
    full = []
    for idx, given in enumerate(rows):
        i = r + 1 - idx
        width = n - i + 1
        given = tuple(int(x) for x in given)
        if len(given) == width:
            row = (0,) + given + (c,)
        elif len(given) == width + 2:
            row = given
            if row[0] != 0:
                raise PatternError("left boundary must be 0", (i, i - 1))
            if row[-1] != c:
                raise PatternError("right boundary must be c", (i, n + 1))
        else:
            raise PatternError(f"row {i} has {len(given)} entries")
        full.append(row)
    full.reverse()
    for i in range(2, r + 2):
        upper = full[i - 1]
        lower = full[i - 2]
        for t in range(len(upper) - 1):
            x = lower[t + 1]
            if x not in between(upper[t], upper[t + 1]):
                j = (i - 1) + t
                raise PatternError("betweenness violated", (i - 1, j))
    return GTPattern(r, n, c, tuple(full))


def gt_inversions(g: GTPattern) -> int:
    return g.inversions


def gt_sign(g: GTPattern) -> int:
    return g.sign


def gt_norm(g: GTPattern) -> int:
    return g.norm


def gt_branches(full_row: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Interiors of every admissible row directly below ``full_row``, in lex order."""
    ranges = [between(a, b) for a, b in zip(full_row, full_row[1:])]
    return product(*ranges)


def _bounds(c: int, top: Sequence[int]) -> tuple[int, int]:
    return min(0, *top) if top else 0, max(c, *top) if top else c


def gt_enumerate(r: int, n: int, c: int, top_row: Sequence[int]) -> Iterator[GTPattern]:
    """Stream every (r, n, c)-pattern with the given top-row interior.

    Patterns are produced in lexicographic order of their interiors read from
    row r down to row 1.
    """
    top_row = tuple(int(x) for x in top_row)
    if not (0 <= r <= n):
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if len(top_row) != n - r:
        raise ValueError(f"top row needs {n - r} entries")
    lo, hi = _bounds(c, top_row)
    top = (0,) + top_row + (c,)

    def rec(stack, upper):
        if len(stack) == r + 1:
            yield GTPattern(r, n, c, tuple(reversed(stack)))
            return
        for inner in gt_branches(upper):
            assert all(lo <= x <= hi for x in inner), "entry outside generation bound"
            row = (0,) + inner + (c,)
            stack.append(row)
            yield from rec(stack, row)
            stack.pop()

    yield from rec([top], top)


# ---------------------------------------------------------------------------
# bijection with strict plane partitions


def gt_to_spp(g: GTPattern) -> StrictPlanePartition:
    """Strict plane partition whose parts > i fill the shape read off row i+1."""
    n, c = g.n, g.c
    if g.r != n - 1:
        raise PatternError("bijection needs r = n - 1")
    k = g.entry(n, n) if n else 0
    if n and not (0 <= k <= c):
        raise PatternError("top entry outside [0, c]", (n, n))
    if not n:
        return StrictPlanePartition(())
    shapes = [tuple(reversed(g.interior(i + 1))) for i in range(n)]
    rows = []
    for s in range(len(shapes[0])):
        length = shapes[0][s]
        if not length:
            break
        rows.append(tuple(sum(1 for lam in shapes if s < len(lam) and t < lam[s]) for t in range(length)))
    return spp_validate(rows)


def spp_to_gt(p: StrictPlanePartition, n: int, c: int) -> GTPattern:
    if any(x > n for row in p.rows for x in row):
        raise PatternError("part exceeds n")
    if p.rows and len(p.rows[0]) > c:
        raise PatternError("more than c columns")
    rows = []
    for i in range(n):
        width = n - i
        lam = [sum(1 for x in row if x > i) for row in p.rows[:width]]
        lam += [0] * (width - len(lam))
        rows.append(tuple(reversed(lam)))
    return gt_validate(n - 1, n, c, list(reversed(rows)))
