"""Selection between the compiled kernel and its pure-Python twin.

The default is the compiled extension when it imported successfully, else
pure Python. Override per call with ``backend="python"``/``"native"`` or
globally with the ``EQUICOLOR_BACKEND`` environment variable.
"""

from __future__ import annotations

import os

from . import _core_py

try:
    from . import _core
except ImportError:
    _core = None

_ENV_VAR = "EQUICOLOR_BACKEND"


def available_backends() -> tuple[str, ...]:
    return ("python",) if _core is None else ("native", "python")


def default_backend() -> str:
    forced = os.environ.get(_ENV_VAR)
    if forced:
        return resolve_backend(forced)
    return "native" if _core is not None else "python"


def resolve_backend(name: str | None) -> str:
    if name is None or name == "auto":
        return default_backend()
    if name == "python":
        return "python"
    if name == "native":
        if _core is None:
            raise ValueError("native backend requested but the extension is not built")
        return "native"
    raise ValueError(f"unknown backend {name!r}; expected auto, native, or python")


def get_kernel(name: str | None = None):
    """Return the mixed_fill implementation for the chosen backend."""
    return _core.mixed_fill if resolve_backend(name) == "native" else _core_py.mixed_fill
