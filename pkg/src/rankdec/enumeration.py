"""Exact weight enumeration kernels.

The message space F_{q^m}^k is an F_q-space of dimension m*k; its
elements are indexed by base-q digit vectors (digit j scales basis
message number j, where basis message j = i*m + s puts the s-th power
of the modulus root into component i).  The codeword map is F_q-linear
in the message, so all q^(mk) codewords are generated from the m*k
basis codewords by a doubling construction, processed in contiguous
chunks: each chunk combines a fixed low-digit table with one high-digit
offset codeword.  Chunks are disjoint, carry private count vectors and
are merged by integer addition, so counts are independent of chunk
size and of the number of worker threads.

Two backends compute the per-codeword rank weight (the F_q-dimension of
the span of the n entries):

* packed: q = 2 with prime base field; entries are bit masks and the
  elimination works on whole uint64 columns;
* generic: any q up to 256; entries are length-m code vectors reduced
  with the context's small-field tables.

Weight of a codeword never exceeds min(n, m); counts are exact ints.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import CapExceededError

DEFAULT_ENUM_CAP = 1 << 24
DEFAULT_PROJ_CAP = 1 << 16

_CHUNK_TARGET = 1 << 16


def message_space_size(ctx, k: int) -> int:
    return ctx.q ** (ctx.m * k)


def message_from_index(ctx, k: int, idx: int) -> tuple[int, ...]:
    """Message vector (field ints) for a message index."""
    q, m = ctx.q, ctx.m
    powers = ctx.subfield_power_basis(1)
    comps = []
    for _ in range(k):
        acc = 0
        for s in range(m):
            d = idx % q
            idx //= q
            if d:
                acc = ctx.add(acc, ctx.mul(ctx.fq_from_code(d), powers[s]))
        comps.append(acc)
    return tuple(comps)


def index_of_message(ctx, k: int, msg) -> int:
    q, m = ctx.q, ctx.m
    idx = 0
    mult = 1
    for i in range(k):
        coords = ctx.q_coords(msg[i])
        for s in range(m):
            idx += ctx.fq_code(coords[s]) * mult
            mult *= q
    return idx


def _basis_codewords(ctx, generator):
    k = len(generator)
    powers = ctx.subfield_power_basis(1)
    rows = []
    for i in range(k):
        for s in range(ctx.m):
            rows.append([ctx.mul(powers[s], g) for g in generator[i]])
    return rows


def _packed_ok(ctx) -> bool:
    return ctx.p == 2 and ctx.a == 1


def _pack_rows(ctx, rows):
    return [np.array(row, dtype=np.uint64) for row in rows]


def _code_rows(ctx, rows):
    out = []
    for row in rows:
        arr = [[ctx.fq_code(c) for c in ctx.q_coords(entry)] for entry in row]
        out.append(np.array(arr, dtype=np.uint8))
    return out


def _rank_rows_packed(cw: np.ndarray, m: int) -> np.ndarray:
    n_rows, n = cw.shape
    piv = np.zeros((m, n_rows), dtype=cw.dtype)
    rank = np.zeros(n_rows, dtype=np.uint8)
    for j in range(n):
        v = cw[:, j].copy()
        for b in range(m - 1, -1, -1):
            has = ((v >> np.uint64(b)) & np.uint64(1)).astype(bool)
            if not has.any():
                continue
            pv = piv[b]
            exists = pv != 0
            use = has & exists
            if use.any():
                v = np.where(use, v ^ pv, v)
            new = has & ~exists
            if new.any():
                piv[b] = np.where(new, v, pv)
                rank += new
                v = np.where(new, np.uint64(0), v)
    return rank


def _rank_rows_generic(cw: np.ndarray, tables) -> np.ndarray:
    add, sub, mul, inv = tables
    n_rows, n, m = cw.shape
    piv = np.zeros((m, n_rows, m), dtype=np.uint8)
    piv_used = np.zeros((m, n_rows), dtype=bool)
    rank = np.zeros(n_rows, dtype=np.uint8)
    for j in range(n):
        v = cw[:, j].copy()
        for c in range(m):
            vc = v[:, c]
            nz = vc != 0
            if not nz.any():
                continue
            used = piv_used[c]
            elim = nz & used
            if elim.any():
                prod = mul[vc[elim][:, None], piv[c][elim]]
                v[elim] = sub[v[elim], prod]
            vc = v[:, c]
            new = (vc != 0) & ~used
            if new.any():
                sc = inv[vc[new]][:, None]
                piv[c][new] = mul[sc, v[new]]
                piv_used[c][new] = True
                rank += new
                v[new] = 0
    return rank


class _Kernel:
    """Shared chunk machinery for both backends."""

    def __init__(self, ctx, generator):
        self.ctx = ctx
        self.k = len(generator)
        self.n = len(generator[0])
        self.m = ctx.m
        self.q = ctx.q
        self.total_digits = ctx.m * self.k
        self.total = self.q**self.total_digits
        rows = _basis_codewords(ctx, generator)
        self.packed = _packed_ok(ctx)
        # low-digit count: the largest power of q at most the chunk target
        low = 0
        while low < self.total_digits and self.q ** (low + 1) <= _CHUNK_TARGET:
            low += 1
        self.low = max(low, min(1, self.total_digits))
        self.chunk_size = self.q**self.low
        self.n_chunks = self.q ** (self.total_digits - self.low)
        if self.packed:
            brows = _pack_rows(ctx, rows)
            table = np.zeros((1, self.n), dtype=np.uint64)
            for j in range(self.low):
                table = np.concatenate([table, table ^ brows[j]])
            self.low_table = table
            self.high_rows = brows[self.low:]
        else:
            self.tables = ctx.q_tables()
            add, sub, mul, inv = self.tables
            brows = _code_rows(ctx, rows)
            table = np.zeros((1, self.n, self.m), dtype=np.uint8)
            for j in range(self.low):
                parts = [table]
                for c in range(1, self.q):
                    parts.append(add[table, mul[c, brows[j]][None, :, :]])
                table = np.concatenate(parts)
            self.low_table = table
            self.high_rows = brows[self.low:]

    def chunk_codewords(self, chunk_idx: int) -> np.ndarray:
        if self.packed:
            base = np.zeros(self.n, dtype=np.uint64)
            h = chunk_idx
            for row in self.high_rows:
                if h & 1:
                    base = base ^ row
                h >>= 1
            return self.low_table ^ base
        add, sub, mul, inv = self.tables
        base = np.zeros((self.n, self.m), dtype=np.uint8)
        h = chunk_idx
        for row in self.high_rows:
            d = h % self.q
            h //= self.q
            if d:
                base = add[base, mul[d, row]]
        return add[self.low_table, base[None, :, :]]

    def chunk_ranks(self, chunk_idx: int) -> np.ndarray:
        cw = self.chunk_codewords(chunk_idx)
        if self.packed:
            return _rank_rows_packed(cw, self.m)
        return _rank_rows_generic(cw, self.tables)


def weight_counts(ctx, generator, cap: int = DEFAULT_ENUM_CAP,
                  threads: int = 1) -> list[int]:
    """Exact weight distribution (A_0, ..., A_n) by full enumeration."""
    total = message_space_size(ctx, len(generator))
    if total > cap:
        raise CapExceededError(total, cap, "codeword enumeration")
    kern = _Kernel(ctx, generator)
    bins = np.zeros(kern.n + 1, dtype=np.int64)

    def one(idx):
        return np.bincount(kern.chunk_ranks(idx), minlength=kern.n + 1)

    if threads > 1 and kern.n_chunks > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(one, range(kern.n_chunks)):
                bins += part
    else:
        for idx in range(kern.n_chunks):
            bins += one(idx)
    counts = [int(x) for x in bins]
    assert sum(counts) == kern.total
    return counts


def weights_array(ctx, generator, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """Per-message weights, aligned with the message index order."""
    total = message_space_size(ctx, len(generator))
    if total > cap:
        raise CapExceededError(total, cap, "codeword enumeration")
    kern = _Kernel(ctx, generator)
    out = np.empty(kern.total, dtype=np.uint8)
    for idx in range(kern.n_chunks):
        out[idx * kern.chunk_size:(idx + 1) * kern.chunk_size] = kern.chunk_ranks(idx)
    return out


def projective_count(ctx, k: int) -> int:
    qm = ctx.order  # q^m is the full model
    return (qm**k - 1) // (qm - 1)


def projective_points(ctx, k: int):
    """Projective representatives of F_{q^m}^k, first nonzero entry 1,
    iterated in integer order of the free part."""
    order = ctx.order
    for lead in range(k):
        free = k - lead - 1
        for idx in range(order**free):
            rest = []
            t = idx
            for _ in range(free):
                rest.append(t % order)
                t //= order
            yield tuple([0] * lead + [1] + rest)
