"""Calculus of F_{q^e}-subspaces of F_{q^m}.

A :class:`Subspace` is an F_{q^e}-linear subspace of the top field for
some divisor e of m (``base_e``; e = 1 gives the plain F_q case used
almost everywhere).  Subspaces are canonicalised on construction: the
coordinate matrix of the basis over F_{q^base_e} (in the subfield power
basis) is put in reduced row echelon form, so equality of subspaces is
equality of canonical bases.

Besides the usual lattice operations this module implements the
multiplicative structure that drives the minimum-weight counts:

* ``product``: the F_q-span of all pairwise products U1*U2, computed as
  a sum of shifted copies a_i*U2 over a basis (a_i) of U1;
* ``trace_dual``: the orthogonal complement under the bilinear form
  (x, y) -> Tr_{q^m/q^e}(xy), a nondegenerate reflexive form;
* the linear Cauchy-Davenport inequality for prime m,
  dim(U1*U2) >= dim U1 + dim U2 - 1 whenever dim(U1*U2) <= m - 1,
  together with the classification of its critical pairs by scaled
  geometric-progression spaces c*<1, lam, ..., lam^(d-1)>.

Operations never coerce between different base subfields implicitly;
``restrict_base`` makes the conversion explicit.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from .errors import ContextMismatchError, NotApplicableError
from .fields import FieldContext, is_prime
from .linalg import field_rref, modp_kernel


class Subspace:
    """Canonical F_{q^base_e}-subspace of F_{q^m}; use :func:`span` to build."""

    __slots__ = ("ctx", "base_e", "basis", "_coord_rows", "_pivots")

    def __init__(self, ctx: FieldContext, base_e: int, canonical_basis,
                 coord_rows, pivots):
        self.ctx = ctx
        self.base_e = base_e
        self.basis = tuple(canonical_basis)
        self._coord_rows = coord_rows
        self._pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def coords(self, x: int):
        return self.ctx.subfield_coords(x, self.base_e)

    def reduce_coords(self, vec):
        ctx = self.ctx
        v = list(vec)
        for row, c in zip(self._coord_rows, self._pivots):
            if v[c]:
                f = v[c]
                v = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(v, row)]
        return v

    def contains(self, x: int) -> bool:
        return not any(self.reduce_coords(self.coords(x)))

    def contains_space(self, other: "Subspace") -> bool:
        self._require_compatible(other)
        return all(self.contains(b) for b in other.basis)

    def elements(self) -> list[int]:
        """All q^(base_e * dim) elements; guarded for desk-scale sizes."""
        ctx = self.ctx
        size = ctx.q ** (self.base_e * self.dim)
        if size > 1 << 20:
            raise ValueError(f"subspace too large to enumerate ({size} elements)")
        scalars = ctx.subfield_elements(self.base_e)
        out = [0]
        for b in self.basis:
            out = [ctx.add(z, ctx.mul(s, b)) for s in scalars for z in out]
        return sorted(set(out))

    def restrict_base(self, d: int) -> "Subspace":
        """The same point set viewed as an F_{q^d}-space, d | base_e."""
        if self.base_e % d != 0:
            raise ValueError(f"{d} does not divide base_e = {self.base_e}")
        if d == self.base_e:
            return self
        ctx = self.ctx
        g = ctx.subfield_generator(self.base_e)
        mid_basis = [ctx.pow(g, i) for i in range(self.base_e // d)]
        elems = [ctx.mul(b, w) for b in self.basis for w in mid_basis]
        return span(ctx, elems, base_e=d)

    def _require_compatible(self, other: "Subspace"):
        self.ctx.require_same(other.ctx)
        if self.base_e != other.base_e:
            raise ContextMismatchError(
                f"mixed base subfields {self.base_e} vs {other.base_e}; "
                "use restrict_base for an explicit conversion")

    def to_json(self) -> dict:
        return {"base_e": self.base_e, "basis": list(self.basis)}

    @classmethod
    def from_json(cls, ctx: FieldContext, d: dict) -> "Subspace":
        return span(ctx, d["basis"], base_e=int(d.get("base_e", 1)))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ctx.same_as(other.ctx)
                and self.base_e == other.base_e and self.basis == other.basis)

    def __hash__(self):
        return hash((self.base_e, self.basis))

    def __repr__(self):
        return (f"Subspace(dim={self.dim} over F_{self.ctx.q}^{self.base_e}, "
                f"basis={list(self.basis)})")


def span(ctx: FieldContext, elements: Iterable[int], base_e: int = 1) -> Subspace:
    """Canonical F_{q^base_e}-span of the given field elements."""
    ctx._check_divisor(base_e)
    rows = [list(ctx.subfield_coords(ctx.check_element(x), base_e))
            for x in elements]
    rref, pivots = field_rref(rows, ctx)
    basis = [ctx.subfield_combine(r, base_e) for r in rref]
    return Subspace(ctx, base_e, basis, [tuple(r) for r in rref], tuple(pivots))


def zero_subspace(ctx: FieldContext, base_e: int = 1) -> Subspace:
    return span(ctx, [], base_e)


def full_space(ctx: FieldContext, base_e: int = 1) -> Subspace:
    return span(ctx, ctx.subfield_power_basis(base_e), base_e)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._require_compatible(v)
    return span(u.ctx, list(u.basis) + list(v.basis), u.base_e)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """U n V via the prime-field coordinate spaces."""
    u._require_compatible(v)
    ctx = u.ctx
    if u.is_zero() or v.is_zero():
        return zero_subspace(ctx, u.base_e)
    a = _fp_rows(u)
    b = _fp_rows(v)
    # y*A = z*B  <=>  (y, z) in kernel of [A^T | -B^T]
    stacked = np.concatenate([a.T, (-b.T) % ctx.p], axis=1)
    out = []
    for vec in modp_kernel(stacked, ctx.p):
        y = np.array(vec[: a.shape[0]], dtype=np.int64)
        digits = (y @ a) % ctx.p
        out.append(ctx.from_digits(int(d) for d in digits))
    return span(ctx, out, u.base_e)


def _fp_rows(u: Subspace) -> np.ndarray:
    """Prime-field coordinate rows spanning u as an F_p-space."""
    ctx = u.ctx
    w = ctx.fp_basis_of_subfield(u.base_e)
    rows = [ctx.digits(ctx.mul(b, wl)) for b in u.basis for wl in w]
    if not rows:
        return np.zeros((0, ctx.n), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def scale(c: int, u: Subspace) -> Subspace:
    if c == 0:
        raise ValueError("scaling a subspace by zero")
    ctx = u.ctx
    return span(ctx, [ctx.mul(c, b) for b in u.basis], u.base_e)


def product(u1: Subspace, u2: Subspace) -> Subspace:
    """F_q-span of {a*b : a in U1, b in U2}, as a sum of scaled copies."""
    u1._require_compatible(u2)
    if u1.base_e != 1:
        raise ContextMismatchError("subspace products are taken over F_q")
    ctx = u1.ctx
    elems = [ctx.mul(a, b) for a in u1.basis for b in u2.basis]
    return span(ctx, elems, 1)


def trace_dual(u: Subspace, e: int = 1) -> Subspace:
    """Orthogonal complement of u under (x, y) -> Tr_{q^m/q^e}(xy).

    The result is linear over the compositum of F_{q^e} and the base
    subfield of u; for the common case (base 1, e = 1) it is the plain
    F_q-dual of F_q-dimension m - dim(u).
    """
    ctx = u.ctx
    ctx._check_divisor(e)
    result_base = _lcm(u.base_e, e)
    if ctx.m % result_base != 0:
        raise ValueError("incompatible base subfields")
    p, n = ctx.p, ctx.n
    a_rows = _fp_rows(u)
    if a_rows.shape[0] == 0:
        return full_space(ctx, result_base)
    # constraint matrix over F_p: element z is dual iff Tr(a*z) = 0 for
    # every F_p-basis element a of u
    cols = []
    for j in range(n):
        ej = ctx.from_digits([1 if i == j else 0 for i in range(n)])
        col = []
        for arow in a_rows:
            aval = ctx.from_digits(int(d) for d in arow)
            col.extend(ctx.digits(ctx.trace_rel(ctx.mul(aval, ej), e)))
        cols.append(col)
    mat = np.array(cols, dtype=np.int64).T
    kern = modp_kernel(mat, p)
    elems = [ctx.from_digits(v) for v in kern]
    return span(ctx, elems, result_base)


def _lcm(a: int, b: int) -> int:
    import math

    return a * b // math.gcd(a, b)


def kernel_of_trace(ctx: FieldContext, e: int) -> Subspace:
    """Ker(Tr_{q^m/q^e}) as an F_{q^e}-space of dimension m/e - 1."""
    return trace_dual(span(ctx, [1], base_e=e), e)


def geometric_subspace(ctx: FieldContext, lam: int, t: int, base_e: int = 1) -> Subspace:
    """<1, lam, ..., lam^(t-1)> over F_{q^base_e}; powers must stay free."""
    if t < 1:
        raise ValueError("t must be positive")
    if base_e == 1 and t > ctx.degree_over_q(lam):
        raise ValueError(
            f"t = {t} exceeds the degree {ctx.degree_over_q(lam)} of the element")
    out = span(ctx, [ctx.pow(lam, i) for i in range(t)], base_e)
    if out.dim != t:
        raise ValueError("powers are dependent at the requested length")
    return out


def verify_dual_geometric(ctx: FieldContext, lam: int, t: int):
    """For a degree-m element lam, the trace dual of <1,...,lam^(t-1)> is
    delta^(-1) <1,...,lam^(m-t-1)> with delta the derivative of lam's
    minimal polynomial at lam.  Returns (holds, delta)."""
    if ctx.degree_over_q(lam) != ctx.m:
        raise ValueError("element does not generate the extension")
    if not 1 <= t <= ctx.m - 1:
        raise ValueError("t out of range")
    f = ctx.minimal_polynomial(lam)
    delta = ctx.derivative_at(f, lam)
    lhs = trace_dual(geometric_subspace(ctx, lam, t))
    rhs = scale(ctx.inv(delta), geometric_subspace(ctx, lam, ctx.m - t))
    return lhs == rhs, delta


def verify_dual_subfield(ctx: FieldContext, lam: int, t: int):
    """For lam of degree e with 1 < e < m, the F_q-trace dual of
    <1,...,lam^(t-1)> decomposes as Ker(Tr_{q^m/q^e}) + c*<1,...,lam^(e-t-1)>
    for some c with nonzero relative trace.  Finds the first witness c in
    encoding order and returns (holds, c); for t = e the right summand is
    empty and c is reported as 0."""
    e = ctx.degree_over_q(lam)
    if e == ctx.m or e == 1:
        raise ValueError("element degree must be a proper intermediate divisor")
    if not 1 <= t <= e:
        raise ValueError("t out of range")
    dual = trace_dual(geometric_subspace(ctx, lam, t))
    z = kernel_of_trace(ctx, e).restrict_base(1)
    if t == e:
        return dual == z, 0
    tail = geometric_subspace(ctx, lam, e - t)
    for c in range(1, ctx.order):
        if ctx.trace_rel(c, e) == 0:
            continue
        cand = subspace_sum(z, scale(c, tail))
        if cand.dim == z.dim + tail.dim and cand == dual:
            return True, c
    return False, 0


def cauchy_davenport_check(u1: Subspace, u2: Subspace) -> bool:
    """Linear Cauchy-Davenport for prime m: the product of nonzero
    subspaces either fills a hyperplane-or-more or has dimension at
    least dim U1 + dim U2 - 1.  Vacuously true when the product exceeds
    m - 1."""
    ctx = u1.ctx
    if not is_prime(ctx.m):
        raise NotApplicableError("the inequality requires a prime extension degree")
    if u1.dim < 1 or u2.dim < 1:
        raise ValueError("both subspaces must be nonzero")
    d = product(u1, u2).dim
    if d > ctx.m - 1:
        return True
    return d >= u1.dim + u2.dim - 1


def geometric_witnesses(u: Subspace) -> dict[int, int]:
    """All (lam -> c) with u = c*<1, lam, ..., lam^(dim-1)>.

    Exhausts lam over the field (guarded at 2^16 elements); candidates c
    are exactly the nonzero elements of the intersection of the shifted
    copies lam^(-i) * u.
    """
    ctx = u.ctx
    if u.base_e != 1:
        raise ContextMismatchError("geometric detection works over F_q")
    if ctx.order > 1 << 16:
        raise ValueError("field too large for exhaustive witness search")
    d = u.dim
    if d < 1:
        return {}
    out = {}
    for lam in range(ctx.order):
        if ctx.degree_over_q(lam) < d:
            continue
        li = ctx.inv(lam) if lam else None
        acc = u
        ok = True
        shift = 1
        for i in range(1, d):
            shift = ctx.mul(shift, li)
            acc = intersect(acc, scale(shift, u))
            if acc.is_zero():
                ok = False
                break
        if ok and not acc.is_zero():
            c = min(acc.basis)
            # sanity: the witness reproduces u
            if span(ctx, [ctx.mul(c, ctx.pow(lam, i)) for i in range(d)]) == u:
                out[lam] = c
    return out


def detect_geometric_form(u: Subspace) -> Optional[tuple[int, int]]:
    """Some (c, lam) with u = c*<1,...,lam^(dim-1)>, or None."""
    wits = geometric_witnesses(u)
    if not wits:
        return None
    lam = min(wits)
    return wits[lam], lam


def critical_complement_witness(u1: Subspace, u2: Subspace) -> Optional[int]:
    """If dim U2 = m - dim U1 and the product U1*U2 is a hyperplane, a
    scalar c with U2 = c * trace_dual(U1) exists; search and return it
    (None only if the preconditions fail to force one, which would be a
    falsification of the classification)."""
    ctx = u1.ctx
    if u2.dim != ctx.m - u1.dim:
        raise ValueError("dimensions are not complementary")
    if product(u1, u2).dim != ctx.m - 1:
        raise ValueError("product is not a hyperplane")
    dual = trace_dual(u1)
    w = next(b for b in dual.basis if b)
    winv = ctx.inv(w)
    seen = set()
    for x in u2.elements():
        if not x:
            continue
        c = ctx.mul(x, winv)
        if c in seen:
            continue
        seen.add(c)
        if scale(c, dual) == u2:
            return c
    return None


def is_subfield_linear(u: Subspace, e: int) -> bool:
    """True iff u is closed under multiplication by F_{q^e}: checked on
    one multiplicative generator of F_{q^e}^*."""
    ctx = u.ctx
    ctx._check_divisor(e)
    if u.is_zero():
        return True
    g = ctx.subfield_generator(e)
    return scale(g, u) == u


def all_subspaces(ctx: FieldContext, dim: int):
    """All F_q-subspaces of F_{q^m} of the given dimension, enumerated by
    reduced-echelon profile (exact count is the Gaussian binomial)."""
    from itertools import combinations, product as iproduct

    m = ctx.m
    if not 0 <= dim <= m:
        return
    if dim == 0:
        yield zero_subspace(ctx)
        return
    qelems = ctx.fq_elements()
    for pivots in combinations(range(m), dim):
        free_positions = []
        for r, pc in enumerate(pivots):
            for c in range(pc + 1, m):
                if c not in pivots:
                    free_positions.append((r, c))
        for fill in iproduct(qelems, repeat=len(free_positions)):
            rows = [[0] * m for _ in range(dim)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free_positions, fill):
                rows[r][c] = v
            elems = [ctx.q_combine(row) for row in rows]
            yield span(ctx, elems)


def random_subspace(ctx: FieldContext, dim: int, rng) -> Subspace:
    while True:
        u = span(ctx, [rng.randrange(ctx.order) for _ in range(dim)])
        if u.dim == dim:
            return u
