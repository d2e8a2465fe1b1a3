"""Hot numeric kernels: exact assignment solving and fixed-weight class scans.

Everything in this module is written in nopython-compatible style so the same
source runs JIT-compiled (the default) or as plain Python when XMB_NO_NUMBA=1.
All arithmetic is exact int64; inputs are never mutated.
"""

import numpy as np

from .accel import maybe_jit

# Sentinel larger than any reachable reduced cost; (sigma + 2) * total weight
# must stay below it for the potentials to remain exact.
_INF = np.int64(1) << np.int64(62)


@maybe_jit
def assign_max_weight(weights):
    """Optimal column -> row assignment for a square nonnegative int64 matrix.

    O(n^3) potentials / shortest augmenting path method, run on negated
    weights so the maximum weight assignment comes out of a minimization.
    Iteration order is fixed, so equal-weight optima resolve deterministically.
    """
    n = weights.shape[0]
    u = np.zeros(n + 1, dtype=np.int64)
    v = np.zeros(n + 1, dtype=np.int64)
    # col_row[j] = row assigned to column j, 1-based; slot 0 holds the row
    # currently being inserted.
    col_row = np.zeros(n + 1, dtype=np.int64)
    way = np.zeros(n + 1, dtype=np.int64)
    minv = np.empty(n + 1, dtype=np.int64)
    used = np.empty(n + 1, dtype=np.bool_)
    for i in range(1, n + 1):
        col_row[0] = i
        j0 = 0
        for j in range(n + 1):
            minv[j] = _INF
            used[j] = False
        while True:
            used[j0] = True
            i0 = col_row[j0]
            delta = _INF
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = -weights[i0 - 1, j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[col_row[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if col_row[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            col_row[j0] = col_row[j1]
            j0 = j1
    row_of_col = np.empty(n, dtype=np.int64)
    for j in range(n):
        row_of_col[j] = col_row[j + 1] - 1
    return row_of_col


@maybe_jit
def assignment_weight(weights, row_of_col):
    total = np.int64(0)
    for j in range(weights.shape[0]):
        total += weights[row_of_col[j], j]
    return total


@maybe_jit
def scan_shard(sigma, m, first_cell):
    """Minimum optimal-assignment weight over one enumeration shard.

    A shard is the set of sigma x sigma weight matrices with total m whose
    top-left cell equals first_cell; the remaining cells run through every
    weak composition of m - first_cell. Returns (min_weight, graphs_seen,
    argmin_flat) where min_weight is -1 for an empty shard and argmin_flat
    is the first matrix (row-major) attaining the minimum.
    """
    cells = sigma * sigma
    flat = np.zeros(cells, dtype=np.int64)
    flat[0] = first_cell
    best = np.int64(-1)
    count = np.int64(0)
    best_flat = np.zeros(cells, dtype=np.int64)
    remaining = m - first_cell
    rest = cells - 1
    if rest == 0:
        if remaining != 0:
            return best, count, best_flat
        mat = flat.reshape(sigma, sigma)
        w = assignment_weight(mat, assign_max_weight(mat))
        best_flat[:] = flat
        return w, np.int64(1), best_flat
    comp = flat[1:]
    comp[0] = remaining
    while True:
        mat = flat.reshape(sigma, sigma)
        w = assignment_weight(mat, assign_max_weight(mat))
        count += 1
        if best < 0 or w < best:
            best = w
            best_flat[:] = flat
        if comp[rest - 1] == remaining:
            break
        # next weak composition: move a unit off the rightmost nonzero head
        # cell and fold the tail back in behind it
        j = rest - 2
        while comp[j] == 0:
            j -= 1
        tail = comp[rest - 1]
        comp[j] -= 1
        comp[j + 1] = tail + 1
        if j + 1 != rest - 1:
            comp[rest - 1] = 0
    return best, count, best_flat
