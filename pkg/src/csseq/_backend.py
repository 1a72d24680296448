"""Kernel backend selection.

The compiled extension (csseq._ckernels) is preferred when importable;
otherwise the numpy reference kernels are used.  The environment variable
CSSEQ_BACKEND forces a choice: "cython", "python", or "auto" (default).
Selection happens once at import time.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None


def _select():
    mode = os.environ.get("CSSEQ_BACKEND", "auto").lower()
    if mode == "python":
        return _pykernels, "python"
    if mode == "cython":
        if _ckernels is None:
            raise ImportError(
                "CSSEQ_BACKEND=cython but the csseq._ckernels extension is "
                "not built; reinstall the package or use CSSEQ_BACKEND=python"
            )
        return _ckernels, "cython"
    if mode != "auto":
        raise ValueError(f"unknown CSSEQ_BACKEND value: {mode!r}")
    if _ckernels is not None:
        return _ckernels, "cython"
    return _pykernels, "python"


_impl, _name = _select()

corr_hist = _impl.corr_hist
corr_table = _impl.corr_table
corr_table_sum = _impl.corr_table_sum
min_hamming = _impl.min_hamming


def backend_name():
    """Name of the active kernel backend: "cython" or "python"."""
    return _name
