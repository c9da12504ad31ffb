"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Setting ``CHANGHEE_PURE_PYTHON=1`` forces the fallback.
Both backends return identical values.
"""
import os

if os.environ.get("CHANGHEE_PURE_PYTHON") == "1":
    from changhee import _kernels_py as _impl
else:
    try:
        from changhee import _kernels as _impl
    except ImportError:
        from changhee import _kernels_py as _impl

BACKEND = "cython" if _impl.__name__.endswith("._kernels") else "python"

rat_convolve = _impl.rat_convolve
rat_horner = _impl.rat_horner
stirling_table = _impl.stirling_table

__all__ = ["BACKEND", "rat_convolve", "rat_horner", "stirling_table"]
