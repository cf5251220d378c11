"""Numba-compiled hot kernels.

Same contracts as ``_kernels_numpy``; compiled lazily with on-disk caching
so repeat runs skip JIT cost.
"""

import numpy as np
from numba import njit, prange

BACKEND_NAME = "numba"


@njit(cache=True, parallel=True)
def _mean_abs_diff(values):
    n, f = values.shape
    out = np.zeros((n, n), dtype=np.float64)
    for i in prange(n):
        for j in range(i + 1, n):
            acc = 0.0
            for k in range(f):
                acc += abs(values[i, k] - values[j, k])
            d = acc / f
            out[i, j] = d
            out[j, i] = d
    return out


@njit(cache=True)
def _abs_dot_exceed_count(x, y, perm, threshold):
    iters, n = perm.shape
    count = 0
    for it in range(iters):
        acc = 0.0
        for k in range(n):
            acc += x[k] * y[perm[it, k]]
        if abs(acc) >= threshold:
            count += 1
    return count


def mean_abs_diff_matrix(values: np.ndarray) -> np.ndarray:
    return _mean_abs_diff(np.ascontiguousarray(values, dtype=np.float64))


def abs_dot_exceed_count(x: np.ndarray, y: np.ndarray, perm: np.ndarray,
                         threshold: float) -> int:
    return int(_abs_dot_exceed_count(
        np.ascontiguousarray(x, dtype=np.float64),
        np.ascontiguousarray(y, dtype=np.float64),
        np.ascontiguousarray(perm, dtype=np.int64),
        float(threshold),
    ))


def warmup() -> None:
    """Force compilation of every kernel on tiny inputs."""
    mean_abs_diff_matrix(np.zeros((2, 2)))
    abs_dot_exceed_count(np.zeros(3), np.zeros(3),
                         np.zeros((1, 3), dtype=np.int64), 0.0)
