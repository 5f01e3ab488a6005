"""Kernel backend selection.

The compiled extension implements the hot loops; the pure-Python twin
with identical semantics is used when the extension is unavailable or
when COPERM_PURE_PYTHON=1 is set in the environment.
"""

import os

from . import _purepy

if os.environ.get("COPERM_PURE_PYTHON"):
    _impl = _purepy
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purepy

BACKEND = _impl.BACKEND_NAME

permanent = _impl.permanent
determinant = _impl.determinant
graph_poly = _impl.graph_poly
is_canonical = _impl.is_canonical
canonical_form = _impl.canonical_form
canonical_children = _impl.canonical_children


def available_backends():
    """Importable kernel modules keyed by their backend name."""
    out = {_purepy.BACKEND_NAME: _purepy}
    try:
        from . import _core
        out[_core.BACKEND_NAME] = _core
    except ImportError:
        pass
    return out
