"""Search-kernel backend selection.

Prefers the compiled extension (gkgraphs._bitset_core) and falls back to
the pure-Python twin when it is absent.  Set GKGRAPHS_PURE=1 to force the
fallback, e.g. for benchmarking or debugging.
"""

from __future__ import annotations

import os

if os.environ.get("GKGRAPHS_PURE"):
    from . import _bitset_py as _impl
else:
    try:
        from . import _bitset_core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _bitset_py as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND

max_clique_size = _impl.max_clique_size
is_k_colorable = _impl.is_k_colorable
find_triangle = _impl.find_triangle
