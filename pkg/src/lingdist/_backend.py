"""Kernel backend selection.

The numba kernels are used when available. Set ``LINGDIST_BACKEND=numpy``
to force the pure-numpy path (or ``numba`` to insist on JIT and fail loudly
if numba cannot be imported). The flag is read on every call so tests can
toggle it without reimporting.
"""

import os

from . import _kernels_numpy
from .errors import ConfigError

_ENV_VAR = "LINGDIST_BACKEND"
_numba_module = None
_numba_failed = False


def _load_numba():
    global _numba_module, _numba_failed
    if _numba_module is None and not _numba_failed:
        try:
            from . import _kernels_numba
            _numba_module = _kernels_numba
        except ImportError:
            _numba_failed = True
    return _numba_module


def get_kernels():
    """Return the active kernel module (``numba`` preferred)."""
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice in ("", "auto"):
        return _load_numba() or _kernels_numpy
    if choice == "numpy":
        return _kernels_numpy
    if choice == "numba":
        mod = _load_numba()
        if mod is None:
            raise ConfigError(
                f"{_ENV_VAR}=numba requested but numba is not importable")
        return mod
    raise ConfigError(
        f"unknown {_ENV_VAR} value {choice!r}; expected 'numba', 'numpy' or 'auto'")


def backend_name() -> str:
    return get_kernels().BACKEND_NAME
