"""Backend selection: compiled extension when available, pure Python otherwise.

``impl`` is the module the rest of the package calls into.  Both backends
expose the same functions over little-endian digit lists (see
``_kernels_py`` for the representation and counter conventions).
"""

from carrymul import _kernels_py

try:
    from carrymul import _speedups as _compiled
except ImportError:  # extension not built; pure Python still fully works
    _compiled = None

impl = _compiled if _compiled is not None else _kernels_py

BACKEND = "compiled" if _compiled is not None else "python"


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.append("compiled")
    return names


def get_backend(name):
    """Return a kernel module by name ('python' or 'compiled')."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if _compiled is None:
            raise ValueError("compiled backend is not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")
