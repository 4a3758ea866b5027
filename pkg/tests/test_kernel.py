from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from dompoly import kernel

BACKENDS = sorted(kernel.BACKENDS)
masks8 = st.lists(st.integers(0, 255), max_size=9)


def naive(masks, target, base=0):
    out = [0] * (len(masks) + 1)
    for k in range(len(masks) + 1):
        for S in combinations(masks, k):
            u = base
            for m in S:
                u |= m
            if u & target == target:
                out[k] += 1
    return out


def test_compiled_kernel_built():
    # The extension is part of the normal install; a silent fallback would hide a build break.
    assert kernel.compiled_available()


@pytest.mark.parametrize("backend", BACKENDS)
@given(masks8, st.integers(0, 255), st.integers(0, 255))
def test_matches_naive(backend, masks, target, base):
    assert kernel.count_subsets(masks, target, base, backend=backend) == naive(masks, target, base)


@pytest.mark.parametrize("backend", BACKENDS)
def test_empty_candidates(backend):
    assert kernel.count_subsets([], 0, backend=backend) == [1]
    assert kernel.count_subsets([], 1, backend=backend) == [0]
    assert kernel.count_subsets([], 1, base=1, backend=backend) == [1]


@given(st.lists(st.integers(0, 2 ** 12 - 1), min_size=1, max_size=12), st.integers(0, 2 ** 12 - 1))
def test_backends_agree(masks, target):
    results = {b: kernel.count_subsets(masks, target, backend=b) for b in BACKENDS}
    assert len({tuple(r) for r in results.values()}) == 1


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("blocks,workers", [(1, 1), (3, 1), (5, 4), (64, 8)])
def test_block_partition_is_deterministic(backend, blocks, workers):
    masks = [(0b111 << i) & 0xFFFF for i in range(14)]
    want = kernel.count_subsets(masks, 0xFFFF, backend=backend)
    assert kernel.count_subsets(masks, 0xFFFF, blocks=blocks, workers=workers, backend=backend) == want


def test_wide_masks_fall_back():
    masks = [1 << 70, 1, (1 << 70) | 1]
    assert kernel.count_subsets(masks, (1 << 70) | 1, backend=BACKENDS[-1]) == naive(masks, (1 << 70) | 1)


def test_set_backend():
    prev = kernel.set_backend("python")
    try:
        assert kernel.get_backend() == "python"
        with pytest.raises(ValueError):
            kernel.set_backend("fortran")
    finally:
        kernel.set_backend(prev)
