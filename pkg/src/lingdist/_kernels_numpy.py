"""Pure-numpy reference implementations of the hot kernels.

Always importable; used directly when the ``LINGDIST_BACKEND=numpy``
environment flag is set or when numba is unavailable.
"""

import numpy as np

BACKEND_NAME = "numpy"


def mean_abs_diff_matrix(values: np.ndarray) -> np.ndarray:
    """Pairwise mean absolute difference between rows of an (L, F) table."""
    diffs = np.abs(values[:, None, :] - values[None, :, :])
    return diffs.mean(axis=2)


def abs_dot_exceed_count(x: np.ndarray, y: np.ndarray, perm: np.ndarray,
                         threshold: float) -> int:
    """Count permutations whose |x . y[perm]| meets ``threshold``.

    ``x`` and ``y`` are centered series, ``perm`` an (iterations, n) index
    array. The dot product is the only permutation-dependent factor of the
    correlation coefficient, so the caller folds the constant denominator
    into ``threshold``.
    """
    dots = y[perm] @ x
    return int(np.count_nonzero(np.abs(dots) >= threshold))


def warmup() -> None:
    """No-op; mirrors the numba module interface."""
