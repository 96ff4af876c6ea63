"""Pseudospectral solver and estimate lab for the quantum Zakharov system.

The heavy lifting lives in the compiled extension ``_qzak``.  In an installed
wheel the extension sits inside this package; in a plain CMake build tree it is
a top-level module, so fall back to an absolute import in that case.
"""

try:
    from . import _qzak as _impl
except ImportError:  # CMake build tree: extension is not inside the package
    import _qzak as _impl

globals().update(
    {name: getattr(_impl, name) for name in dir(_impl) if not name.startswith("_")}
)

__version__ = _impl.__version__
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
