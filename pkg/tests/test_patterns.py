from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planepart.exactq import poly
from planepart.patterns import (
    PatternError,
    StrictPlanePartition,
    between,
    gt_enumerate,
    gt_inversions,
    gt_norm,
    gt_sign,
    gt_to_spp,
    gt_validate,
    spp_count_eq,
    spp_enumerate,
    spp_norm,
    spp_odd_rows,
    spp_to_gt,
    spp_validate,
)

EXAMPLE_SPP = [[7, 6, 5, 5, 2], [5, 4, 2, 2], [4, 2], [2, 1]]

# (3,6,4)-pattern, top row first, boundaries included
EXAMPLE_364 = [
    [0, 3, -5, 10, 4],
    [0, 2, -2, 3, 8, 4],
    [0, 2, -1, 2, 4, 7, 4],
    [0, 0, 0, 1, 2, 5, 6, 4],
]

# pattern of the example SPP for n = 7, interiors only, top row first
EXAMPLE_BIJECTION = [
    [1],
    [0, 2],
    [0, 1, 4],
    [0, 1, 2, 4],
    [0, 0, 1, 2, 4],
    [0, 0, 1, 2, 4, 5],
    [0, 0, 0, 2, 2, 4, 5],
]


def test_spp_validate_examples():
    p = spp_validate(EXAMPLE_SPP)
    assert p.shape.parts == (5, 4, 2, 2)
    assert spp_validate([]) == StrictPlanePartition(())
    with pytest.raises(PatternError, match="column not strictly"):
        spp_validate([[1], [1]])


def test_spp_validate_rejects_increasing_row():
    with pytest.raises(PatternError) as info:
        spp_validate([[2, 3]])
    assert info.value.cell == (0, 1)


def test_spp_statistics():
    p = spp_validate(EXAMPLE_SPP)
    assert spp_norm(p) == 47
    assert spp_odd_rows(p) == 1
    assert spp_count_eq(p, 7) == 1
    empty = spp_validate([])
    assert (spp_norm(empty), spp_odd_rows(empty), spp_count_eq(empty, 3)) == (0, 0, 0)


def test_spp_enumerate_examples():
    assert sorted(s.rows for s in spp_enumerate(1, 2)) == [(), ((1,),), ((1, 1),)]
    assert [s.rows for s in spp_enumerate(0, 5)] == [()]


def test_spp_enumerate_n2_c2_generating_function():
    items = list(spp_enumerate(2, 2))
    assert len(items) == 10
    norms = Counter(s.norm for s in items)
    assert poly([norms.get(e, 0) for e in range(max(norms) + 1)]) == poly([1, 1, 2, 2, 2, 1, 1])


def brute_spp(n: int, c: int):
    """Independent oracle: filter all arrays with at most n rows, c columns, parts in 1..n."""
    out = set()
    cells = [(s, t) for s in range(n) for t in range(c)]

    def fill(idx, grid):
        if idx == len(cells):
            rows = tuple(tuple(x for x in row if x) for row in grid)
            rows = tuple(r for r in rows if r)
            try:
                out.add(spp_validate(rows).rows)
            except PatternError:
                pass
            return
        s, t = cells[idx]
        for v in range(n + 1):
            grid[s][t] = v
            fill(idx + 1, grid)
        grid[s][t] = 0

    fill(0, [[0] * c for _ in range(n)])
    return out


@pytest.mark.parametrize("n,c", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_spp_enumerate_against_brute(n, c):
    got = [s.rows for s in spp_enumerate(n, c)]
    assert len(got) == len(set(got))
    assert set(got) == brute_spp(n, c)


def test_between_weak_and_strict():
    assert list(between(1, 3)) == [1, 2, 3]
    assert list(between(3, 3)) == [3]
    assert list(between(3, 1)) == [2]
    assert list(between(2, 1)) == []


def test_gt_example_364():
    g = gt_validate(3, 6, 4, EXAMPLE_364)
    assert gt_inversions(g) == 6
    assert gt_sign(g) == 1
    assert gt_norm(g) == 47
    assert g.display_rows() == EXAMPLE_364


def test_gt_increasing_rows_have_no_inversions():
    g = gt_validate(2, 3, 5, [[2], [1, 3], [0, 2, 4]])
    assert gt_inversions(g) == 0 and gt_sign(g) == 1


def test_gt_validate_betweenness_error():
    rows = [r[:] for r in EXAMPLE_364]
    rows[3][3] = 3  # a_{1,3} must lie in [-1, 2]
    with pytest.raises(PatternError) as info:
        gt_validate(3, 6, 4, rows)
    assert info.value.cell == (1, 3)


def test_gt_validate_bad_boundary():
    with pytest.raises(PatternError):
        gt_validate(0, 2, 3, [[1, 1, 2, 3]])


def test_gt_enumerate_examples():
    only = list(gt_enumerate(0, 2, 3, [1, 2]))
    assert len(only) == 1 and only[0].display_rows() == [[0, 1, 2, 3]]
    three = list(gt_enumerate(1, 1, 2, []))
    assert [g.interior(1) for g in three] == [(0,), (1,), (2,)]


def test_gt_enumerate_below_minus_one_is_empty():
    # nothing lies strictly between 0 and -1
    assert list(gt_enumerate(1, 2, 2, [-1])) == []


def test_gt_enumerate_signed_region():
    pats = list(gt_enumerate(1, 2, 2, [-2]))
    assert [g.interior(1) for g in pats] == [(-1, b) for b in range(-2, 3)]
    assert all(g.inversions == 1 and g.sign == -1 for g in pats)


def test_gt_enumerate_is_deterministic_and_unique():
    a = [g.rows for g in gt_enumerate(2, 3, 2, [3])]
    b = [g.rows for g in gt_enumerate(2, 3, 2, [3])]
    assert a == b and len(set(a)) == len(a)
    for g in gt_enumerate(2, 3, 2, [3]):
        gt_validate(2, 3, 2, g.display_rows())


def test_bijection_golden_example():
    g = gt_validate(6, 7, 5, EXAMPLE_BIJECTION)
    p = gt_to_spp(g)
    assert p.rows == tuple(map(tuple, EXAMPLE_SPP))
    assert p.norm == g.norm == 47
    assert spp_to_gt(p, 7, 5) == g


def test_bijection_empty():
    g = gt_validate(2, 3, 4, [[0], [0, 0], [0, 0, 0]])
    assert gt_to_spp(g).rows == ()


def test_bijection_round_trip_n3_c2():
    for k in range(3):
        for g in gt_enumerate(2, 3, 2, [k]):
            p = gt_to_spp(g)
            assert spp_to_gt(p, 3, 2) == g
            assert p.count_eq(3) == k


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 3), st.data())
def test_bijection_statistics(n, c, data):
    spps = list(spp_enumerate(n, c))
    p = data.draw(st.sampled_from(spps))
    g = spp_to_gt(p, n, c)
    assert gt_to_spp(g) == p
    assert g.norm == p.norm
    assert g.entry(n, n) == p.count_eq(n)
    assert g.odd_bottom == p.odd_rows
    assert tuple(reversed(g.interior(1))) == p.shape.parts + (0,) * (n - len(p.shape))
