"""Pure-Python subset-enumeration kernel; same contract as ``_ckernels``.

Subsets of each half are grouped by the part of the target they cover, so
the pairing loop runs over distinct coverage patterns instead of subsets.
"""
from __future__ import annotations

from typing import Dict, List, Sequence


def _subset_unions(masks: Sequence[int]) -> List[int]:
    out = [0] * (1 << len(masks))
    for s in range(1, len(out)):
        low = s & -s
        out[s] = out[s ^ low] | masks[low.bit_length() - 1]
    return out


def _group(unions: Sequence[int], subsets, target: int, width: int) -> Dict[int, List[int]]:
    groups: Dict[int, List[int]] = {}
    for s in subsets:
        key = unions[s] & target
        row = groups.get(key)
        if row is None:
            row = groups[key] = [0] * (width + 1)
        row[bin(s).count("1")] += 1
    return groups


def count_block(cand_masks: Sequence[int], target: int, base: int, n_low: int,
                hi_start: int, hi_stop: int) -> List[int]:
    k = len(cand_masks)
    n_high = k - n_low
    lo_masks = list(cand_masks[:n_low])
    hi_masks = list(cand_masks[n_low:])
    lo_groups = _group(_subset_unions(lo_masks), range(1 << n_low), target, n_low)
    hi_unions = _subset_unions(hi_masks)
    hi_unions = [u | base for u in hi_unions]
    hi_groups = _group(hi_unions, range(hi_start, hi_stop), target, n_high)
    counts = [0] * (k + 1)
    lo_items = list(lo_groups.items())
    for mh, ch in hi_groups.items():
        need = target & ~mh
        for ml, cl in lo_items:
            if ml & need != need:
                continue
            for i, a in enumerate(ch):
                if a:
                    for j, b in enumerate(cl):
                        if b:
                            counts[i + j] += a * b
    return counts
