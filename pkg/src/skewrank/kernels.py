"""Backend selection for the hot rank kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``SKEWRANK_PURE_PYTHON`` is set to a non-empty value,
the pure-Python implementation takes over.  Both expose ``rank``,
``principal_rank`` and ``first_odd_principal`` with identical semantics.
"""

import os

from . import _kernels_py as python_impl

try:
    from . import _kernels as compiled_impl
except ImportError:  # extension not built
    compiled_impl = None

if compiled_impl is not None and not os.environ.get("SKEWRANK_PURE_PYTHON"):
    _impl = compiled_impl
    BACKEND = "cython"
else:
    _impl = python_impl
    BACKEND = "python"

# Hadamard bound H on every minor must satisfy H < 2**63 (checked on H**2)
_INT64_SAFE_SQUARED_BOUND = 2**126


def get_impl(name=None):
    """Return a backend module by name (``"cython"``/``"python"``), or the active one."""
    if name is None:
        return _impl
    if name == "python":
        return python_impl
    if name == "cython":
        if compiled_impl is None:
            raise ImportError("compiled kernels are not available")
        return compiled_impl
    raise ValueError(f"unknown backend {name!r}")


def int64_safe(grid):
    """True if fraction-free elimination on ``grid`` cannot overflow int64.

    Every stored intermediate is a minor of ``grid``; products of two minors
    are formed in 128-bit arithmetic by the compiled kernel.
    """
    bound = 1
    for row in grid:
        bound *= max(1, sum(x * x for x in row))
        if bound >= _INT64_SAFE_SQUARED_BOUND:
            return False
    return True


def _choose(grid, p, impl):
    if impl is None:
        impl = _impl
    if impl is not python_impl and p == 0 and not int64_safe(grid):
        return python_impl
    return impl


def rank(grid, p, impl=None):
    return _choose(grid, p, impl).rank(grid, p)


def principal_rank(grid, p, indices, impl=None):
    return _choose(grid, p, impl).principal_rank(grid, p, list(indices))


def first_odd_principal(grid, p, impl=None):
    return _choose(grid, p, impl).first_odd_principal(grid, p)
