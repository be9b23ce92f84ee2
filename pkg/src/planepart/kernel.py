"""Backend selection for the pattern-counting kernel.

The compiled extension is used when it imports; setting PLANEPART_PURE=1
forces the pure-Python implementation.
"""

import os

from . import _kernel_py

if os.environ.get("PLANEPART_PURE") == "1":
    count_completions = _kernel_py.count_completions
    BACKEND = "python"
else:
    try:
        from ._kernel import count_completions  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        count_completions = _kernel_py.count_completions
        BACKEND = "python"

__all__ = ["count_completions", "BACKEND"]
