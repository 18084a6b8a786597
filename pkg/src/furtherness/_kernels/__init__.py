"""Kernel backend selection.

The package ships two interchangeable kernel implementations: a compiled
Cython module (``_ckern``) and a pure-Python reference (``pure``).  By
default the compiled one is used when its build artifact imports, with a
silent fallback otherwise.  Set ``FURTHERNESS_KERNEL=pure`` or ``=c`` to
force a backend (forcing ``c`` without the build artifact raises).

The compiled kernels pack point sets into single machine words, so they
only handle spaces of at most 64 points; calls on larger spaces route to
the pure versions automatically.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _ckern  # type: ignore[attr-defined]
except ImportError:
    _ckern = None

_choice = os.environ.get("FURTHERNESS_KERNEL", "auto").strip().lower()
if _choice in ("", "auto"):
    _fast = _ckern if _ckern is not None else pure
elif _choice in ("c", "compiled", "ext"):
    if _ckern is None:
        raise ImportError(
            "FURTHERNESS_KERNEL requests the compiled kernels but "
            "furtherness._kernels._ckern is not built"
        )
    _fast = _ckern
elif _choice in ("pure", "python", "py"):
    _fast = pure
else:
    raise RuntimeError(f"unrecognized FURTHERNESS_KERNEL value: {_choice!r}")

backend: str = "pure" if _fast is pure else "c"

_WORD_BITS = 64


def _impl(n: int):
    if n > _WORD_BITS and _fast is not pure:
        return pure
    return _fast


def class_ids(n, basis):
    return _impl(n).class_ids(n, basis)


def further_matrix(n, basis):
    return _impl(n).further_matrix(n, basis)


def closure_mask(n, basis, a):
    return _impl(n).closure_mask(n, basis, a)


def interior_mask(n, basis, a):
    return _impl(n).interior_mask(n, basis, a)


def minimal_open_mask(n, basis, a):
    return _impl(n).minimal_open_mask(n, basis, a)


def point_to_set(n, flat, x, target):
    return _impl(n).point_to_set(n, flat, x, target)


def set_to_set(n, flat, a, b):
    return _impl(n).set_to_set(n, flat, a, b)


def center_radius(n, flat, a, target):
    return _impl(n).center_radius(n, flat, a, target)


def transitive_closure(n, rows):
    return _impl(n).transitive_closure(n, rows)


def enumerate_bases(n, t0_only=False):
    return _impl(n).enumerate_bases(n, t0_only)
