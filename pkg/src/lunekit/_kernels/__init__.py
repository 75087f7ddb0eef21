"""Hot-kernel backend selection.

Prefers the compiled extension (``_core``, built from Cython) and falls
back to the pure numpy implementation.  Set ``LUNEKIT_PURE=1`` to force the
fallback.  Both backends expose the same three functions with identical
semantics; tests cross-check them when the extension is present.
"""

import os

from . import pure as _pure

if os.environ.get("LUNEKIT_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND

farthest_on_edges = _impl.farthest_on_edges
radial_crossings = _impl.radial_crossings
min_cap_of_points = _impl.min_cap_of_points


def backend_name() -> str:
    """Which kernel backend is active: 'compiled' or 'pure'."""
    return BACKEND
