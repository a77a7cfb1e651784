"""Rank-metric codes over F_{q^m} and complete decomposability.

A :class:`RankCode` is a k-dimensional F_{q^m}-subspace of F_{q^m}^n
given by a generator matrix with independent rows.  The rank weight of
a codeword is the F_q-dimension of the span of its entries; the support
is the column span of the n x m coordinate expansion, a subspace of
F_q^n that does not depend on the expansion basis.

A code is *completely decomposable of type (n_1 >= ... >= n_k)* when it
is equivalent (by some A in GL(n, q) acting on coordinates) to a direct
sum of one-dimensional full-weight blocks u_1 (+) ... (+) u_k with
w(u_i) = n_i < m.  Such a block-diagonal generator is the code's weight
complementary form; a :class:`Decomposition` record stores the blocks
together with the coordinate map back to the stored generator.
Detection implements the geometric criterion: weights satisfy
w(xG) = m - dim(U' n <x>) for the dual system U', so a decomposition
exists iff some F_{q^m}-basis of message space reaches total weight n.

Enumeration-backed operations (weight distribution, minimum distance,
minimal-codeword census) take explicit caps and refuse loudly beyond
them; see :mod:`rankdec.enumeration` for the kernels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .enumeration import (
    DEFAULT_ENUM_CAP,
    DEFAULT_PROJ_CAP,
    message_from_index,
    message_space_size,
    weight_counts,
)
from .errors import CapExceededError
from .fields import FieldContext
from .linalg import (
    RowSpace,
    field_inverse,
    field_matmul,
    field_rank,
    field_rref,
    field_vecmat,
)
from .subspaces import span, trace_dual


# ----------------------------------------------------------------------
# coordinate equivalence maps (GL(n, q) acting on the right)
# ----------------------------------------------------------------------


class EquivalenceMap:
    """Invertible n x n matrix over F_q; entries are field-context ints
    that must lie in F_q."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx: FieldContext, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("square matrix required")
        for r in rows:
            for v in r:
                if not ctx.in_subfield(v, 1):
                    raise ValueError("entries must lie in F_q")
        if field_rank([list(r) for r in rows], ctx) != n:
            raise ValueError("matrix is singular over F_q")
        self.ctx = ctx
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, ctx: FieldContext, n: int) -> "EquivalenceMap":
        return cls(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def inverse(self) -> "EquivalenceMap":
        return EquivalenceMap(self.ctx, field_inverse([list(r) for r in self.rows],
                                                      self.ctx))

    def compose(self, other: "EquivalenceMap") -> "EquivalenceMap":
        """self followed by other (matrix product self * other)."""
        return EquivalenceMap(self.ctx, field_matmul(
            [list(r) for r in self.rows], [list(r) for r in other.rows], self.ctx))

    def __eq__(self, other):
        return isinstance(other, EquivalenceMap) and self.rows == other.rows

    def __repr__(self):
        return f"EquivalenceMap(n={self.n}, q={self.ctx.q})"


def random_gl(ctx: FieldContext, n: int, seed: int = 0) -> EquivalenceMap:
    """Uniform invertible matrix over F_q by rejection; seed-reproducible."""
    rng = random.Random(seed)
    qelems = ctx.fq_elements()
    while True:
        rows = [[rng.choice(qelems) for _ in range(n)] for _ in range(n)]
        if field_rank(rows, ctx) == n:
            return EquivalenceMap(ctx, rows)


def random_gl_ext(ctx: FieldContext, k: int, seed: int = 0):
    """Invertible k x k matrix over the full field F_{q^m} (basis changes)."""
    rng = random.Random(seed)
    while True:
        rows = [[rng.randrange(ctx.order) for _ in range(k)] for _ in range(k)]
        if field_rank(rows, ctx) == k:
            return tuple(tuple(r) for r in rows)


# ----------------------------------------------------------------------
# weights and supports
# ----------------------------------------------------------------------


def rank_weight(ctx: FieldContext, v: Sequence[int]) -> int:
    """F_q-dimension of the span of the entries."""
    return span(ctx, v).dim


def support(ctx: FieldContext, v: Sequence[int], gamma=None) -> RowSpace:
    """Column span of the n x m expansion of v over F_q: a subspace of
    F_q^n, independent of the expansion basis."""
    n = len(v)
    coords = [ctx.gamma_coords(entry, gamma) for entry in v]
    cols = []
    for s in range(ctx.m):
        cols.append([ctx.fq_code(coords[i][s]) for i in range(n)])
    return RowSpace(ctx, n, cols)


@dataclass(frozen=True)
class Decomposition:
    """Weight-complementary data: blocks sorted by length, plus the
    coordinate map with stored_generator = B * blockdiag(blocks) * col_map
    for some invertible B over F_{q^m}."""

    type_vector: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    col_map: EquivalenceMap

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(self.type_vector)

    def block_offsets(self) -> list[int]:
        offs = [0]
        for t in self.type_vector:
            offs.append(offs[-1] + t)
        return offs

    def weight_complementary_generator(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        offs = self.block_offsets()
        rows = []
        for i, u in enumerate(self.blocks):
            row = [0] * n
            row[offs[i]:offs[i + 1]] = list(u)
            rows.append(tuple(row))
        return tuple(rows)


class WeightDistribution:
    """Exact codeword counts (A_0, ..., A_n)."""

    __slots__ = ("counts",)

    def __init__(self, counts: Sequence[int], expected_total: Optional[int] = None):
        counts = tuple(int(c) for c in counts)
        if counts[0] != 1:
            raise ValueError("A_0 must be 1")
        if expected_total is not None and sum(counts) != expected_total:
            raise ValueError("counts do not sum to the codeword total")
        self.counts = counts

    @property
    def min_distance(self) -> int:
        for i, c in enumerate(self.counts):
            if i and c:
                return i
        raise ValueError("zero code has no minimum distance")

    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __eq__(self, other):
        other_counts = other.counts if isinstance(other, WeightDistribution) else tuple(other)
        return self.counts == other_counts

    def __iter__(self):
        return iter(self.counts)

    def to_json(self, messages: Optional[int] = None) -> dict:
        out = {"counts": list(self.counts), "min_distance": self.min_distance}
        if messages is not None:
            out["messages"] = messages
        return out

    def __repr__(self):
        return f"WeightDistribution{self.counts}"


class RankCode:
    """k x n generator matrix over F_{q^m} with independent rows."""

    __slots__ = ("ctx", "generator", "decomposition")

    def __init__(self, ctx: FieldContext, generator,
                 decomposition: Optional[Decomposition] = None):
        generator = tuple(tuple(ctx.check_element(v) for v in row)
                          for row in generator)
        if not generator or not generator[0]:
            raise ValueError("generator must be a nonempty matrix")
        if any(len(r) != len(generator[0]) for r in generator):
            raise ValueError("ragged generator matrix")
        if field_rank([list(r) for r in generator], ctx) != len(generator):
            raise ValueError("generator rows are F_{q^m}-dependent")
        self.ctx = ctx
        self.generator = generator
        if decomposition is not None:
            self._validate_decomposition(decomposition)
        self.decomposition = decomposition

    def _validate_decomposition(self, dec: Decomposition):
        ctx = self.ctx
        if dec.n != self.n or dec.k != self.k:
            raise ValueError("decomposition shape mismatch")
        if list(dec.type_vector) != sorted(dec.type_vector, reverse=True):
            raise ValueError("type vector must be non-increasing")
        for u, ni in zip(dec.blocks, dec.type_vector):
            if len(u) != ni or ni < 1 or ni >= ctx.m:
                raise ValueError("block lengths must satisfy 1 <= n_i < m")
            if rank_weight(ctx, u) != ni:
                raise ValueError("block entries are F_q-dependent (not full weight)")
        wc = [list(r) for r in dec.weight_complementary_generator()]
        mapped = field_matmul(wc, [list(r) for r in dec.col_map.rows], ctx)
        lhs = field_rref(mapped, ctx)[0]
        rhs = field_rref([list(r) for r in self.generator], ctx)[0]
        if lhs != rhs:
            raise ValueError("decomposition does not generate the stored code")

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def n(self) -> int:
        return len(self.generator[0])

    def codeword(self, msg: Sequence[int]) -> tuple[int, ...]:
        return tuple(field_vecmat(list(msg), [list(r) for r in self.generator],
                                  self.ctx))

    def codewords(self, cap: int = DEFAULT_ENUM_CAP):
        """All codewords by message index order (desk scale only)."""
        total = message_space_size(self.ctx, self.k)
        if total > cap:
            raise CapExceededError(total, cap, "codeword iteration")
        for idx in range(total):
            yield self.codeword(message_from_index(self.ctx, self.k, idx))

    def strip_decomposition(self) -> "RankCode":
        return RankCode(self.ctx, self.generator)

    def with_decomposition(self, dec: Decomposition) -> "RankCode":
        return RankCode(self.ctx, self.generator, dec)

    def relabeled(self, b_rows) -> "RankCode":
        """Same code, new basis: generator B * G."""
        g = field_matmul([list(r) for r in b_rows],
                         [list(r) for r in self.generator], self.ctx)
        return RankCode(self.ctx, g, self.decomposition)

    def to_json(self) -> dict:
        out = {"field": self.ctx.to_descriptor(),
               "generator": [list(r) for r in self.generator]}
        if self.decomposition is not None:
            out["decomposition"] = {
                "type": list(self.decomposition.type_vector),
                "blocks": [list(u) for u in self.decomposition.blocks],
                "col_map": [list(r) for r in self.decomposition.col_map.rows],
            }
        return out

    @classmethod
    def from_json(cls, d: dict) -> "RankCode":
        ctx = FieldContext.from_descriptor(d["field"])
        dec = None
        if "decomposition" in d:
            rec = d["decomposition"]
            dec = Decomposition(tuple(rec["type"]),
                                tuple(tuple(u) for u in rec["blocks"]),
                                EquivalenceMap(ctx, rec["col_map"]))
        return cls(ctx, d["generator"], dec)

    def __repr__(self):
        return f"RankCode[{self.n},{self.k}] over {self.ctx!r}"


# ----------------------------------------------------------------------
# metric quantities
# ----------------------------------------------------------------------


def code_support(code: RankCode) -> RowSpace:
    """Sum of the row supports; equals F_q^n iff the code is nondegenerate."""
    acc = support(code.ctx, code.generator[0])
    for row in code.generator[1:]:
        acc = acc.sum(support(code.ctx, row))
    return acc


def is_nondegenerate(code: RankCode) -> bool:
    return code_support(code).dim == code.n


def weight_distribution(code: RankCode, cap: int = DEFAULT_ENUM_CAP,
                        threads: int = 1) -> WeightDistribution:
    counts = weight_counts(code.ctx, code.generator, cap=cap, threads=threads)
    return WeightDistribution(counts, expected_total=message_space_size(
        code.ctx, code.k))


def min_distance(code: RankCode, cap: int = DEFAULT_ENUM_CAP,
                 threads: int = 1) -> int:
    return weight_distribution(code, cap=cap, threads=threads).min_distance


def is_mrd(code: RankCode, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Equality in the Singleton-like bound mk <= max(m,n)(min(n,m)-d+1)."""
    ctx = code.ctx
    d = min_distance(code, cap=cap)
    lhs = ctx.m * code.k
    rhs = max(ctx.m, code.n) * (min(ctx.m, code.n) - d + 1)
    assert lhs <= rhs, "Singleton-like bound violated"
    return lhs == rhs


# ----------------------------------------------------------------------
# constructions and equivalence
# ----------------------------------------------------------------------


def direct_sum(codes: Sequence[RankCode]) -> RankCode:
    if not codes:
        raise ValueError("empty direct sum")
    ctx = codes[0].ctx
    for c in codes[1:]:
        ctx.require_same(c.ctx)
    n = sum(c.n for c in codes)
    k = sum(c.k for c in codes)
    gen = [[0] * n for _ in range(k)]
    roff = coff = 0
    for c in codes:
        for i, row in enumerate(c.generator):
            gen[roff + i][coff:coff + c.n] = list(row)
        roff += c.k
        coff += c.n
    dec = None
    if all(c.decomposition is not None for c in codes):
        dec = _merge_decompositions(ctx, codes)
    return RankCode(ctx, gen, dec)


def _merge_decompositions(ctx, codes) -> Decomposition:
    n = sum(c.n for c in codes)
    blocks = []
    for c in codes:
        blocks.extend(c.decomposition.blocks)
    lens = [len(u) for u in blocks]
    order = sorted(range(len(blocks)), key=lambda i: -lens[i])
    sorted_blocks = [blocks[i] for i in order]
    # unsorted offsets in the merged layout, sorted offsets in the target
    offs_u = [0]
    for L in lens:
        offs_u.append(offs_u[-1] + L)
    offs_s = [0]
    for i in order:
        offs_s.append(offs_s[-1] + lens[i])
    perm = [[0] * n for _ in range(n)]
    for j, i in enumerate(order):
        for l in range(lens[i]):
            perm[offs_s[j] + l][offs_u[i] + l] = 1
    inner = _blockdiag_fq(ctx, [c.decomposition.col_map for c in codes],
                          [c.n for c in codes])
    col_map = EquivalenceMap(ctx, perm).compose(inner)
    return Decomposition(tuple(len(u) for u in sorted_blocks),
                         tuple(sorted_blocks), col_map)


def _blockdiag_fq(ctx, maps, sizes) -> EquivalenceMap:
    n = sum(sizes)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for mp, sz in zip(maps, sizes):
        for i in range(sz):
            for j in range(sz):
                rows[off + i][off + j] = mp.rows[i][j]
        off += sz
    return EquivalenceMap(ctx, rows)


def apply_equivalence(code: RankCode, amap: EquivalenceMap) -> RankCode:
    """The equivalent code C * A; rank weights are preserved because A is
    an invertible F_q-linear change of coordinates."""
    if amap.n != code.n:
        raise ValueError("size mismatch")
    g = field_matmul([list(r) for r in code.generator],
                     [list(r) for r in amap.rows], code.ctx)
    dec = code.decomposition
    if dec is not None:
        dec = Decomposition(dec.type_vector, dec.blocks,
                            dec.col_map.compose(amap))
    return RankCode(code.ctx, g, dec)


def build_completely_decomposable(ctx: FieldContext,
                                  blocks: Iterable[Sequence[int]]) -> RankCode:
    """Direct sum of one-dimensional full-weight blocks, sorted to a
    non-increasing type; each block must have w(u) = len(u) < m."""
    blocks = [tuple(u) for u in blocks]
    if not blocks:
        raise ValueError("at least one block required")
    for u in blocks:
        if len(u) >= ctx.m:
            raise ValueError(f"block length {len(u)} must be < m = {ctx.m}")
        w = rank_weight(ctx, u)
        if w != len(u):
            raise ValueError(
                f"block {u} has weight {w} < length {len(u)}: entries must be "
                "F_q-independent for a full-weight one-dimensional block")
    order = sorted(range(len(blocks)), key=lambda i: -len(blocks[i]))
    sorted_blocks = tuple(blocks[i] for i in order)
    dec = Decomposition(
        tuple(len(u) for u in sorted_blocks), sorted_blocks,
        EquivalenceMap.identity(ctx, sum(len(u) for u in sorted_blocks)))
    return RankCode(ctx, dec.weight_complementary_generator(), dec)


def block_subspaces(code: RankCode) -> list:
    """F_q-spans of the block entries of a decomposable code."""
    dec = _require_decomposition(code)
    return [span(code.ctx, u) for u in dec.blocks]


def _require_decomposition(code: RankCode) -> Decomposition:
    if code.decomposition is None:
        raise ValueError("code has no decomposition record; run detection first")
    return code.decomposition


def type_of(code: RankCode, pcap: int = DEFAULT_PROJ_CAP) -> tuple[int, ...]:
    if code.decomposition is not None:
        return code.decomposition.type_vector
    dec = detect_complete_decomposability(code, pcap=pcap)
    if dec is None:
        raise ValueError("code is not completely decomposable")
    return dec.type_vector


# ----------------------------------------------------------------------
# decomposability detection
# ----------------------------------------------------------------------


def detect_complete_decomposability(code: RankCode,
                                    pcap: int = DEFAULT_PROJ_CAP
                                    ) -> Optional[Decomposition]:
    """Search for a basis whose weights sum to the length.

    Computes the dual system U' and the line dimensions
    d_x = dim(U' n <x>) over projective points x, then backtracks over
    F_{q^m}-independent points maximizing the d_x total; a decomposition
    exists iff k independent points reach sum(d_x) = km - n with every
    d_x >= 1.  Returns the sorted-type record or None.
    """
    from .systems import line_intersection_dim, perp_prime, system_from_code

    ctx = code.ctx
    from .enumeration import projective_count, projective_points

    if not is_nondegenerate(code):
        return None
    npts = projective_count(ctx, code.k)
    if npts > pcap:
        raise CapExceededError(npts, pcap, "projective point scan")
    u = system_from_code(code)
    udual = perp_prime(u)
    cands = []
    for x in projective_points(ctx, code.k):
        d = line_intersection_dim(udual, x)
        if d >= 1:
            cands.append((d, x))
    cands.sort(key=lambda t: -t[0])
    target = ctx.m * code.k - code.n

    def best_possible(start, need):
        total = 0
        for j in range(start, min(start + need, len(cands))):
            total += cands[j][0]
        return total

    picked = []

    def extend(start, total, basis_rows):
        if len(picked) == code.k:
            return total == target
        need = code.k - len(picked)
        if total + best_possible(start, need) < target:
            return False
        for idx in range(start, len(cands)):
            d, x = cands[idx]
            if total + d + best_possible(idx + 1, need - 1) < target:
                return False
            new_rows, piv = field_rref(basis_rows + [list(x)], ctx)
            if len(new_rows) != len(picked) + 1:
                continue
            picked.append((d, x))
            if extend(idx + 1, total + d, [list(r) for r in new_rows]):
                return True
            picked.pop()
        return False

    if not extend(0, 0, []):
        return None

    rows = [list(x) for _, x in picked]
    cwords = [code.codeword(x) for x in rows]
    supports = [support(ctx, c) for c in cwords]
    weights = [s.dim for s in supports]
    assert sum(weights) == code.n
    # coordinate change sending each support onto its own block
    p_rows = []
    for s in supports:
        p_rows.extend([ctx.fq_from_code(c) for c in r] for r in s.basis_rows())
    amap = EquivalenceMap(ctx, field_inverse(p_rows, ctx))
    moved = [field_vecmat(list(c), [list(r) for r in amap.rows], ctx)
             for c in cwords]
    offs = [0]
    for w in weights:
        offs.append(offs[-1] + w)
    blocks = []
    for i, row in enumerate(moved):
        assert all(v == 0 for j, v in enumerate(row)
                   if not offs[i] <= j < offs[i + 1]), "support not block-aligned"
        blocks.append(tuple(row[offs[i]:offs[i + 1]]))
    # sort blocks and push the permutation into the coordinate map
    order = sorted(range(len(blocks)), key=lambda i: -weights[i])
    offs_s = [0]
    for j in order:
        offs_s.append(offs_s[-1] + weights[j])
    n = code.n
    perm = [[0] * n for _ in range(n)]
    for j, i in enumerate(order):
        for l in range(weights[i]):
            perm[offs_s[j] + l][offs[i] + l] = 1
    col_map = EquivalenceMap(ctx, perm).compose(amap.inverse())
    dec = Decomposition(tuple(weights[i] for i in order),
                        tuple(blocks[i] for i in order), col_map)
    return dec


# ----------------------------------------------------------------------
# shortening / puncturing along the block structure
# ----------------------------------------------------------------------


def shortened(code: RankCode, t: int) -> RankCode:
    """Subcode of the weight-complementary form with the first t-1 block
    coefficients forced to zero (full length kept); 1-based t."""
    dec = _require_decomposition(code)
    if not 1 <= t <= dec.k:
        raise ValueError("t out of range")
    rows = dec.weight_complementary_generator()[t - 1:]
    return RankCode(code.ctx, rows)


def punctured(code: RankCode, t: int) -> RankCode:
    """Restriction to the coordinates of blocks t..k; completely
    decomposable of type (n_t, ..., n_k)."""
    dec = _require_decomposition(code)
    if not 1 <= t <= dec.k:
        raise ValueError("t out of range")
    return build_completely_decomposable(code.ctx, dec.blocks[t - 1:])


# ----------------------------------------------------------------------
# minimal codewords
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalFamilies:
    """The minimal codewords of a decomposable code: one scalar family
    per block, k*(q^m - 1) words in total."""

    base_words: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.base_words)

    def count(self, ctx: FieldContext) -> int:
        return self.k * (ctx.order - 1)

    def codewords(self, ctx: FieldContext):
        for base in self.base_words:
            for alpha in range(1, ctx.order):
                yield tuple(ctx.mul(alpha, v) for v in base)


def minimal_codewords(code: RankCode) -> MinimalFamilies:
    """Single-block scalar families in the stored coordinates.

    For k >= 2 with blocks that are pairwise not scalar multiples of one
    another (no U_i = c U_j), these are exactly the minimal codewords
    under entry-span containment; a k = 1 code is trivially minimal and
    the single family is every nonzero word.  When two blocks span
    scalar-related subspaces the minimal set degenerates (same-span
    words in different blocks dominate each other) and no exact
    description is asserted; see :func:`blocks_scalar_unrelated`.
    """
    dec = _require_decomposition(code)
    ctx = code.ctx
    wc = dec.weight_complementary_generator()
    bases = [tuple(field_vecmat(list(row), [list(r) for r in dec.col_map.rows],
                                ctx)) for row in wc]
    return MinimalFamilies(tuple(bases))


def blocks_scalar_unrelated(code: RankCode) -> bool:
    """True iff no block span is a scalar multiple of (or scalar-embeds
    into) another block span: the hypothesis under which the minimal
    codewords are exactly the single-block families."""
    from .subspaces import scale

    dec = _require_decomposition(code)
    ctx = code.ctx
    spans = [span(ctx, u) for u in dec.blocks]
    for i, ui in enumerate(spans):
        for j, uj in enumerate(spans):
            if i == j:
                continue
            if uj.dim > ui.dim:
                continue
            for c in range(1, ctx.order):
                if ui.contains_space(scale(c, uj)):
                    return False
    return True


def entry_span(ctx: FieldContext, v: Sequence[int]):
    """F_q-span of the entries: the subspace whose dimension is the rank
    weight.  Minimality comparisons contain one codeword's entry span in
    another's (the coordinate-side column-span support cannot see the
    containment that makes multi-block words non-minimal)."""
    return span(ctx, v)


def is_minimal_codeword(code: RankCode, c: Sequence[int],
                        cap: int = 1 << 16) -> bool:
    """Brute force: c is minimal iff every nonzero codeword whose entry
    span is contained in that of c is a scalar multiple of c."""
    ctx = code.ctx
    total = message_space_size(ctx, code.k)
    if total > cap:
        raise CapExceededError(total, cap, "minimality scan")
    if not any(c):
        raise ValueError("the zero word is not eligible")
    s = entry_span(ctx, c)
    for idx in range(1, total):
        other = code.codeword(message_from_index(ctx, code.k, idx))
        if s.contains_space(entry_span(ctx, other)):
            if not _proportional(ctx, c, other):
                return False
    return True


def _proportional(ctx, u, v) -> bool:
    j = next((i for i, x in enumerate(u) if x), None)
    jv = next((i for i, x in enumerate(v) if x), None)
    if j != jv:
        return False
    alpha = ctx.div(u[j], v[j])
    return all(ctx.mul(alpha, y) == x for x, y in zip(u, v))


def minimal_codeword_census(code: RankCode, cap: int = 1 << 16):
    """All minimal codewords by exhaustive entry-span comparison.

    Codewords are grouped by entry span; a span class is minimal iff it
    is a single projective ray and no other class's span is contained in
    it.  Returns the set of minimal codewords.
    """
    ctx = code.ctx
    total = message_space_size(ctx, code.k)
    if total > cap:
        raise CapExceededError(total, cap, "minimality census")
    classes: dict = {}
    for idx in range(1, total):
        w = code.codeword(message_from_index(ctx, code.k, idx))
        s = entry_span(ctx, w)
        rec = classes.get(s)
        if rec is None:
            classes[s] = [w, True, [w]]
        else:
            rec[1] = rec[1] and _proportional(ctx, rec[0], w)
            rec[2].append(w)
    minimal = set()
    keys = list(classes)
    for s in keys:
        rep, is_ray, members = classes[s]
        if not is_ray:
            continue
        dominated = any(o is not s and s.contains_space(o) for o in keys)
        if not dominated:
            minimal.update(members)
    return minimal


# ----------------------------------------------------------------------
# duals
# ----------------------------------------------------------------------


def dual_code(code: RankCode) -> RankCode:
    """Classical dual under the standard inner product on F_{q^m}^n.

    Exposed for experimentation; the dual of a completely decomposable
    code decomposes blockwise but its blocks are (n_i - 1)-dimensional,
    so nothing is asserted about its structure here.
    """
    from .linalg import field_kernel

    if code.n == code.k:
        raise ValueError("dual of a full-length code is the zero code")
    kern = field_kernel([list(r) for r in code.generator], code.ctx)
    return RankCode(code.ctx, kern)


def geometric_dual(code: RankCode, pcap: int = DEFAULT_PROJ_CAP) -> RankCode:
    """Code associated with the dual system U'.

    Requires dim(U n <v>) < m for every v (automatic for completely
    decomposable codes).  With a decomposition record the dual is built
    blockwise from the trace duals of the block spans, giving the sorted
    type (m - n_k, ..., m - n_1); otherwise a basis of the dual system
    is used directly and no record is attached.
    """
    ctx = code.ctx
    if code.decomposition is not None:
        duals = [trace_dual(span(ctx, u)) for u in code.decomposition.blocks]
        return build_completely_decomposable(ctx, [d.basis for d in duals])
    from .enumeration import projective_count, projective_points
    from .systems import line_intersection_dim, perp_prime, system_from_code

    u = system_from_code(code)
    npts = projective_count(ctx, code.k)
    if npts > pcap:
        raise CapExceededError(npts, pcap, "projective point scan")
    for x in projective_points(ctx, code.k):
        if line_intersection_dim(u, x) >= ctx.m:
            raise ValueError(
                "geometric dual undefined: a direction meets the system "
                "in full F_{q^m}-dimension")
    udual = perp_prime(u)
    cols = udual.vectors
    gen = [[cols[j][i] for j in range(len(cols))] for i in range(code.k)]
    return RankCode(ctx, gen)


# ----------------------------------------------------------------------
# spec files
# ----------------------------------------------------------------------


def code_from_spec(d: dict) -> RankCode:
    """Build a code from a spec dict: {"field": {...}, "blocks": [...]}
    where each block is {"entries": [...]} or {"geometric":
    {"lambda_degree": e, "t": t, "lambda": optional}}."""
    ctx = FieldContext.from_descriptor(d["field"])
    blocks = []
    for i, b in enumerate(d["blocks"]):
        if "entries" in b:
            blocks.append([ctx.check_element(v) for v in b["entries"]])
        elif "geometric" in b:
            g = b["geometric"]
            e = int(g["lambda_degree"])
            t = int(g["t"])
            lam = g.get("lambda")
            if lam is None:
                lam = ctx.find_element_of_degree(e, seed=int(g.get("seed", 0)))
            elif ctx.degree_over_q(lam) != e:
                raise ValueError(
                    f"block {i}: lambda = {lam} has degree "
                    f"{ctx.degree_over_q(lam)}, not {e}")
            if t > e:
                raise ValueError(f"block {i}: t = {t} exceeds lambda degree {e}")
            blocks.append([ctx.pow(lam, j) for j in range(t)])
        else:
            raise ValueError(f"block {i}: need 'entries' or 'geometric'")
    return build_completely_decomposable(ctx, blocks)
