"""numba shim.

Set ``SPLITKIT_PURE_PYTHON=1`` to bypass numba and run the numpy/python
fallback kernels (also used automatically when numba is not importable).
"""
import os

_FORCE_PURE = os.environ.get("SPLITKIT_PURE_PYTHON", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _FORCE_PURE:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kw):
        if len(args) == 1 and callable(args[0]) and not kw:
            return args[0]
        return lambda f: f
