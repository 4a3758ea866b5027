"""Backend selection and the block-partitioned driver for subset counting.

The compiled kernel is used when it imports and every mask fits one machine
word; otherwise the pure-Python kernel runs.  Set ``DOMPOLY_PURE_PYTHON=1``
to force the fallback.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

from . import _pykernels
from .config import ENV_PREFIX, WORD_BITS

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

# Low-half table of 2**MAX_LOW entries.
MAX_LOW = 20

BACKENDS = {"python": _pykernels.count_block}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels.count_block


def _initial_backend() -> str:
    if os.environ.get(ENV_PREFIX + "PURE_PYTHON", "") not in ("", "0"):
        return "python"
    return "cython" if "cython" in BACKENDS else "python"


_backend = _initial_backend()


def compiled_available() -> bool:
    return "cython" in BACKENDS


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Select ``"cython"`` or ``"python"``; returns the previous choice."""
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    prev, _backend = _backend, name
    return prev


def _split(k: int) -> int:
    return min((k + 1) // 2, MAX_LOW)


def count_subsets(cand_masks: Sequence[int], target: int, base: int = 0,
                  blocks: Optional[int] = None, workers: int = 1,
                  backend: Optional[str] = None) -> List[int]:
    """Count subsets ``S`` of the candidate list, by ``|S|``, such that
    ``base | OR(cand_masks[i] for i in S)`` covers every bit of ``target``.

    The high-half subset range is cut into ``blocks`` disjoint pieces whose
    partial count vectors are summed in block order, so the result does not
    depend on ``workers``.
    """
    k = len(cand_masks)
    n_low = _split(k)
    n_hi_sets = 1 << (k - n_low)
    name = backend or _backend
    wide = max([target, base, *cand_masks], default=0) >> WORD_BITS
    fn: Callable = BACKENDS["python" if wide else name]
    if blocks is None:
        blocks = min(n_hi_sets, 4 * max(workers, 1))
    blocks = max(1, min(blocks, n_hi_sets))
    step, extra = divmod(n_hi_sets, blocks)
    bounds, start = [], 0
    for b in range(blocks):
        stop = start + step + (1 if b < extra else 0)
        bounds.append((start, stop))
        start = stop
    masks = list(cand_masks)

    def run(bound):
        return fn(masks, target, base, n_low, bound[0], bound[1])

    if workers > 1 and blocks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(run, bounds))
    else:
        partials = [run(b) for b in bounds]
    total = [0] * (k + 1)
    for part in partials:
        for i, c in enumerate(part):
            total[i] += c
    return total
