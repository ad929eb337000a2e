"""Backend selection for the inversion kernels.

The compiled extension is used when it was built; setting
``SPRINGER_BETTI_PURE=1`` forces the pure-Python path.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SPRINGER_BETTI_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        pass

word_inversions = _impl.word_inversions
inversion_histogram = _impl.inversion_histogram
