"""Selection of the flip kernel at import time.

The compiled kernel is preferred; ``DENTILE_KERNEL=python`` forces the
fallback (handy for benchmarks and for checking that both agree).
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _kernel_py


def load_kernel(name: str | None = None) -> ModuleType:
    name = (name or os.environ.get("DENTILE_KERNEL", "")).lower()
    if name == "python":
        return _kernel_py
    try:
        from . import _flipcore
    except ImportError:
        if name == "cython":
            raise
        return _kernel_py
    return _flipcore


KERNEL = load_kernel()
