"""Backend selection for the matching inner loops.

The compiled extension is preferred when it was built; the pure-Python
fallback is always available. Set ``OMPMENTOR_PURE=1`` to force the
fallback. Callers go through ``kernel.find_alignment`` / ``kernel.lcs_length``
so the backend can also be swapped at runtime (used by the benchmark and
the backend-parity tests).

Both backends consume ``array('i')`` buffers.
"""

from __future__ import annotations

import os

from . import _pure

_BACKENDS = {"python": _pure}

try:
    from . import _speedups  # type: ignore[attr-defined]

    _BACKENDS["c"] = _speedups
except ImportError:  # extension not built; pure fallback stays active
    _speedups = None

if os.environ.get("OMPMENTOR_PURE"):
    _active = "python"
else:
    _active = "c" if "c" in _BACKENDS else "python"

find_alignment = _BACKENDS[_active].find_alignment
lcs_length = _BACKENDS[_active].lcs_length


def backend_name() -> str:
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use(name: str) -> None:
    """Switch the active backend ("python" or "c")."""
    global _active, find_alignment, lcs_length
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available (built: {available_backends()})")
    _active = name
    find_alignment = _BACKENDS[name].find_alignment
    lcs_length = _BACKENDS[name].lcs_length
