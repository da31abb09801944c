"""Kernel dispatch: compiled clique tally when available, pure Python otherwise.

Set COXCAT_PURE_KERNELS=1 to force the fallback.  The compiled kernel is
limited to 128 vertices and edge masks below 2**20; larger inputs silently
use the fallback, so callers never need to care.
"""

from __future__ import annotations

import os
from typing import Dict, Sequence, Tuple

from . import _kernels_py
from ._kernels_py import iter_cliques  # noqa: F401  (re-exported)

_compiled = None
if not os.environ.get("COXCAT_PURE_KERNELS"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

USING_COMPILED = _compiled is not None


def clique_tally(
    adj: Sequence[int],
    special_mask: int,
    edge_masks: Sequence[int],
    max_size: int,
) -> Dict[Tuple[int, int, int], int]:
    """Count cliques by (plain, special, edge-mask union); see _kernels_py."""
    if (
        _compiled is not None
        and len(adj) <= 128
        and all(e < (1 << 20) for e in edge_masks)
    ):
        return _compiled.clique_tally(list(adj), special_mask, list(edge_masks), max_size)
    return _kernels_py.clique_tally(adj, special_mask, edge_masks, max_size)
