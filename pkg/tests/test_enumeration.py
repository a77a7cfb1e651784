"""Enumeration kernels: message indexing, chunk partitioning, both
rank backends, and the cap contract."""

import pytest

from rankdec import CapExceededError, FieldContext
from rankdec.codes import build_completely_decomposable, rank_weight
from rankdec.enumeration import (
    index_of_message,
    message_from_index,
    message_space_size,
    projective_count,
    projective_points,
    weight_counts,
    weights_array,
)


def test_message_index_roundtrip(f16, f81):
    for ctx, k in ((f16, 2), (f81, 1)):
        total = message_space_size(ctx, k)
        seen = set()
        for idx in range(total):
            msg = message_from_index(ctx, k, idx)
            assert index_of_message(ctx, k, msg) == idx
            seen.add(msg)
        assert len(seen) == total


def test_weights_array_matches_counts(f16):
    lam = f16.elements_of_degree(4)[0]
    c = build_completely_decomposable(f16, [[1, lam], [1, lam]])
    arr = weights_array(f16, c.generator)
    counts = weight_counts(f16, c.generator)
    assert [int((arr == i).sum()) for i in range(c.n + 1)] == counts
    # spot-check alignment with the scalar path
    for idx in (0, 1, 17, 100, 255):
        msg = message_from_index(f16, 2, idx)
        assert arr[idx] == rank_weight(f16, c.codeword(msg))


def test_chunking_invariance(f64):
    """Counts must not depend on the chunk split (partition contract)."""
    from rankdec import enumeration

    lam = f64.elements_of_degree(6)[0]
    c = build_completely_decomposable(f64, [[1, lam], [1, lam]])
    base = weight_counts(f64, c.generator)
    original = enumeration._CHUNK_TARGET
    try:
        for target in (1 << 4, 1 << 9):
            enumeration._CHUNK_TARGET = target
            assert weight_counts(f64, c.generator) == base
    finally:
        enumeration._CHUNK_TARGET = original


def test_threaded_counts_identical(f64):
    lam = f64.elements_of_degree(6)[1]
    c = build_completely_decomposable(f64, [[1, lam]] * 3)
    assert weight_counts(f64, c.generator, threads=4) == weight_counts(
        f64, c.generator)


def test_generic_backend_against_packed():
    """A q = 4 tower forces the table backend; a brute scalar loop pins
    both against the definition."""
    ctx = FieldContext(2, 2, 3)
    lam = ctx.elements_of_degree(3)[0]
    c = build_completely_decomposable(ctx, [[1, lam], [1, lam]])
    counts = weight_counts(ctx, c.generator)
    brute = [0] * (c.n + 1)
    for idx in range(message_space_size(ctx, 2)):
        brute[rank_weight(ctx, c.codeword(message_from_index(ctx, 2, idx)))] += 1
    assert counts == brute


def test_cap_contract(f64):
    lam = f64.elements_of_degree(6)[0]
    c = build_completely_decomposable(f64, [[1, lam]] * 3)
    with pytest.raises(CapExceededError) as e:
        weight_counts(f64, c.generator, cap=2**17)
    assert e.value.required == 2**18 and e.value.cap == 2**17


def test_multichunk_scale():
    """2^22 messages split over 64 chunks; the strictly-decreasing type
    pins the minimum count at q^m - 1."""
    ctx = FieldContext(2, 1, 11)
    g = ctx.find_element_of_degree(11, seed=0)
    c = build_completely_decomposable(
        ctx, [[1, g, ctx.mul(g, g)], [1, g]])
    counts = weight_counts(ctx, c.generator)
    assert sum(counts) == 1 << 22
    assert counts[2] == 2**11 - 1


def test_projective_points(f16):
    pts = list(projective_points(f16, 2))
    assert len(pts) == projective_count(f16, 2) == (16**2 - 1) // 15
    assert len(set(pts)) == len(pts)
    for p in pts:
        lead = next(i for i, v in enumerate(p) if v)
        assert p[lead] == 1
