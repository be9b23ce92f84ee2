"""Pure-Python signed-count kernel; same contract as the compiled one."""

from collections import defaultdict


def count_completions(top, r, n, c):
    """Signed counts keyed by (odd entries of row 1, norm of generated rows)."""
    top = [int(x) for x in top]
    if len(top) != n - r:
        raise ValueError("top row length must be n - r")
    if r == 0:
        return {(sum(x & 1 for x in top), 0): 1}
    out = defaultdict(int)
    # rows[i] is the full row i, boundaries included
    rows = [None] * (r + 2)
    for i in range(1, r + 1):
        rows[i] = [0] * (n - i + 2) + [c]
    rows[r + 1] = [0] + top + [c]

    def fill(i, t, norm, inv, odd):
        row = rows[i]
        if t == n - i + 1:
            if i == 1:
                out[(odd, norm)] += -1 if inv & 1 else 1
            else:
                if row[t] > c:
                    inv += 1
                fill(i - 1, 0, norm, inv, 0)
            return
        up = rows[i + 1]
        w, e = up[t], up[t + 1]
        rng = range(w, e + 1) if w <= e else range(e + 1, w)
        prev = row[t]
        if i == 1:
            for x in rng:
                row[t + 1] = x
                fill(1, t + 1, norm + x, inv, odd + (x & 1))
        else:
            for x in rng:
                row[t + 1] = x
                fill(i, t + 1, norm + x, inv + (prev > x), odd)

    fill(r, 0, 0, 0, 0)
    return {k: v for k, v in out.items() if v}
