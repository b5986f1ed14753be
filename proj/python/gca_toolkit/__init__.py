"""Exact computations in the centrally extended planar Galilean conformal algebra.

Thin wrapper around the compiled ``_core`` extension. In an installed wheel
the extension lives inside this package; in a plain CMake build tree it sits
on ``PYTHONPATH`` as a top-level module.
"""

try:
    from ._core import *  # noqa: F401,F403
    from . import _core as _impl
except ImportError:  # build-tree layout
    from _core import *  # noqa: F401,F403
    import _core as _impl

__version__ = getattr(_impl, "__version__", "0.1.0")
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
