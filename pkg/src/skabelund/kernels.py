"""Kernel backend selection.

The compiled extension is used when it imports; otherwise (or when the
``SKAB_PURE_PYTHON`` environment variable is non-empty) the pure-Python
module with identical behaviour takes over.
"""

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None


def available_backends() -> list[str]:
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "cython")
    return names


def get_backend(name: str | None = None) -> ModuleType:
    if name is None:
        name = BACKEND
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built; "
                              "run `pip install -e . --no-build-isolation`")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


BACKEND = "python" if (_compiled is None or os.environ.get("SKAB_PURE_PYTHON")) else "cython"
