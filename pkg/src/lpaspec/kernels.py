"""Pick the compiled kernels when available, else the pure-Python twins.

Set ``LPASPEC_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_compiled = None
if os.environ.get("LPASPEC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
        BACKEND = "cython"
    except ImportError:
        _compiled = None

# the compiled kernel multiplies two residues in 64-bit integers
COMPILED_PRIME_LIMIT = 2 ** 31


def modp_echelon(p: int, backend: str | None = None):
    """A fresh GF(p) echelon basis from the requested (or default) backend."""
    backend = backend or BACKEND
    if backend == "cython" and _compiled is not None and p < COMPILED_PRIME_LIMIT:
        return _compiled.ModpEchelon(p)
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown kernel backend {backend!r}")
    return _kernels_py.ModpEchelon(p)


def available_backends() -> tuple:
    return ("cython", "python") if _compiled is not None else ("python",)
