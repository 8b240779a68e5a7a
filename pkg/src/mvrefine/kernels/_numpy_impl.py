"""Pure-numpy implementations of the hot kernels.

These mirror the compiled extension bit for bit: distances are accumulated
per coordinate in the same order and argmin ties resolve to the lowest
index, so either backend may serve any caller.
"""

import numpy as np

BACKEND = "numpy"

_CHUNK = 256


def nearest_neighbors(a, b):
    """For each row of `a`, squared distance and index of its nearest row in `b`.

    Brute force, exact. Returns (dist_sq (n,), idx (n,)).
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    n = a.shape[0]
    d2 = np.empty(n, dtype=np.float64)
    idx = np.empty(n, dtype=np.int64)
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        diff = a[start:stop, None, :] - b[None, :, :]
        dist = (diff * diff).sum(axis=2)
        k = np.argmin(dist, axis=1)
        idx[start:stop] = k
        d2[start:stop] = dist[np.arange(stop - start), k]
    return d2, idx


def csr_neighbor_sum(x, indptr, indices):
    """Sum of neighbor rows: out[i] = sum(x[j] for j in indices[indptr[i]:indptr[i+1]])."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    n = indptr.shape[0] - 1
    out = np.zeros((n, x.shape[1]), dtype=np.float64)
    counts = np.diff(indptr)
    rows = np.repeat(np.arange(n, dtype=np.int64), counts)
    np.add.at(out, rows, x[indices])
    return out
