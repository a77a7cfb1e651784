"""Exact arithmetic in a finite-field tower F_p < F_q < F_{q^e} < F_{q^m}.

A :class:`FieldContext` fixes one concrete model of F_{q^m} with q = p^a:
the quotient F_p[x]/(modulus) for a monic irreducible modulus of degree
a*m.  Elements are plain Python ints in [0, p^(a*m)): the integer
encodes the little-endian base-p digit vector of the element's
coordinates in the power basis of the modulus root.  For p = 2 the int
therefore *is* the coefficient bit mask.

Every intermediate field F_{q^e} (e | m) lives inside the same model as
the fixed set of the q^e-power Frobenius, so a single context supports
all relative traces, norms and subfield coordinate systems used
elsewhere in the package.

The default modulus is the monic irreducible of degree a*m over F_p
whose non-leading coefficient vector has the smallest integer encoding;
this makes contexts reproducible across runs without any stored tables.

Contexts are immutable after construction (internal caches are
append-only) and all element operations are pure functions, so a
context may be shared freely across threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import gfpoly
from .errors import ContextMismatchError
from .linalg import modp_inv, modp_kernel

#: fields up to this order get exp/log tables (fast mul/inv/pow)
_TABLE_LIMIT = 1 << 16

#: hard cap on the prime-field degree a*m of a context
_DEGREE_CAP = 32


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


class FieldContext:
    """One fixed model of the tower F_p < F_{p^a} = F_q < F_{q^m}."""

    def __init__(self, p: int, a: int, m: int, modulus: Sequence[int] | None = None,
                 fq_basis: Sequence[int] | None = None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if a < 1 or m < 1:
            raise ValueError("a and m must be positive")
        if a * m > _DEGREE_CAP:
            raise ValueError(f"a*m = {a*m} exceeds the supported cap {_DEGREE_CAP}")
        self.p = p
        self.a = a
        self.m = m
        self.q = p**a
        self.n = a * m  # degree over the prime field
        self.order = p**self.n

        if modulus is None:
            modulus = gfpoly.smallest_irreducible(p, self.n)
        modulus = [c % p for c in modulus]
        if len(modulus) != self.n + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.n}")
        if not gfpoly.is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible over F_p")
        self.modulus = tuple(modulus)
        self._mod_int = gfpoly.poly_to_int(list(modulus), p) if p == 2 else None

        self._exp = None
        self._log = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

        # the modulus root generates the whole tower over F_p, hence has
        # degree exactly m over F_q: its power basis is the default Gamma
        self.x = p if self.n > 1 else 0  # the class of x; for n = 1, F_p itself
        self._caches: dict = {}
        if fq_basis is None:
            g = self.x if self.n > 1 else 1
            fq_basis = []
            acc = 1
            for _ in range(m):
                fq_basis.append(acc)
                acc = self.mul(acc, g)
        fq_basis = tuple(fq_basis)
        if len(fq_basis) != m:
            raise ValueError(f"fq_basis must have {m} elements")
        self.fq_basis = fq_basis
        self._validate_fq_basis()

    # ------------------------------------------------------------------
    # encoding helpers
    # ------------------------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        """Little-endian base-p digit vector of length a*m."""
        p = self.p
        out = []
        for _ in range(self.n):
            out.append(x % p)
            x //= p
        return tuple(out)

    def from_digits(self, ds: Iterable[int]) -> int:
        v = 0
        for c in reversed(list(ds)):
            v = v * self.p + (c % self.p)
        return v

    def check_element(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not an element encoding in [0, {self.order})")
        return x

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        p = self.p
        out = 0
        mult = 1
        while x or y:
            out += ((x % p + y % p) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        p = self.p
        out = 0
        mult = 1
        while x:
            out += (-x % p) * mult
            x //= p
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self._exp is not None:
            if x == 0 or y == 0:
                return 0
            n1 = self.order - 1
            return self._exp[(self._log[x] + self._log[y]) % n1]
        if self.p == 2:
            return self._mul2(x, y)
        return self._mul_generic(x, y)

    def _mul2(self, x: int, y: int) -> int:
        mod_int, n = self._mod_int, self.n
        r = 0
        while y:
            if y & 1:
                r ^= x
            y >>= 1
            x <<= 1
            if (x >> n) & 1:
                x ^= mod_int
        return r

    def _mul_generic(self, x: int, y: int) -> int:
        p = self.p
        f = gfpoly.poly_mul(list(self.digits(x)), list(self.digits(y)), p)
        f = gfpoly.poly_mod(f, list(self.modulus), p)
        return self.from_digits(f)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inversion of zero")
        if self._exp is not None:
            n1 = self.order - 1
            return self._exp[(n1 - self._log[x]) % n1]
        f = gfpoly.poly_inv_mod(list(self.digits(x)), list(self.modulus), self.p)
        return self.from_digits(f)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("inversion of zero")
        n1 = self.order - 1
        e %= n1
        if self._exp is not None:
            return self._exp[(self._log[x] * e) % n1]
        r = 1
        b = x
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def _build_tables(self):
        order = self.order
        # locate a multiplicative generator by order checks
        n1 = order - 1
        factors = gfpoly.prime_factors(n1) if n1 > 1 else []
        mul = self._mul2 if self.p == 2 else self._mul_generic
        g = None
        for cand in range(2, order):
            if all(self._raw_pow(cand, n1 // r, mul) != 1 for r in factors):
                g = cand
                break
        if g is None:
            g = 1  # F_2: trivial group
        exp = [0] * n1 if n1 else [0]
        log = [0] * order
        v = 1
        for i in range(n1):
            exp[i] = v
            log[v] = i
            v = mul(v, g)
        self._exp = exp
        self._log = log
        self._generator = g

    def _raw_pow(self, x, e, mul):
        r = 1
        b = x
        while e:
            if e & 1:
                r = mul(r, b)
            b = mul(b, b)
            e >>= 1
        return r

    # ------------------------------------------------------------------
    # Frobenius, trace, norm, degrees
    # ------------------------------------------------------------------

    def frobenius(self, x: int, e: int = 1) -> int:
        """x -> x^(q^e)."""
        return self.pow(x, self.q**e)

    def _check_divisor(self, e: int) -> int:
        if e < 1 or self.m % e != 0:
            raise ValueError(f"e = {e} does not divide m = {self.m}")
        return e

    def trace_rel(self, x: int, e: int = 1) -> int:
        """Relative trace onto F_{q^e}: sum of the q^e-power conjugates."""
        self._check_divisor(e)
        acc = x
        cur = x
        for _ in range(self.m // e - 1):
            cur = self.frobenius(cur, e)
            acc = self.add(acc, cur)
        return acc

    def norm_rel(self, x: int, e: int = 1) -> int:
        """Relative norm onto F_{q^e}: product of the q^e-power conjugates."""
        self._check_divisor(e)
        acc = x
        cur = x
        for _ in range(self.m // e - 1):
            cur = self.frobenius(cur, e)
            acc = self.mul(acc, cur)
        return acc

    def trace_between(self, x: int, e_low: int, e_high: int) -> int:
        """Trace of the extension F_{q^e_high} / F_{q^e_low} applied to x,
        which must lie in F_{q^e_high}."""
        self._check_divisor(e_low)
        self._check_divisor(e_high)
        if e_high % e_low != 0:
            raise ValueError(f"{e_low} does not divide {e_high}")
        if not self.in_subfield(x, e_high):
            raise ValueError("element outside the stated subfield")
        acc = x
        cur = x
        for _ in range(e_high // e_low - 1):
            cur = self.frobenius(cur, e_low)
            acc = self.add(acc, cur)
        return acc

    def norm_between(self, x: int, e_low: int, e_high: int) -> int:
        self._check_divisor(e_low)
        self._check_divisor(e_high)
        if e_high % e_low != 0:
            raise ValueError(f"{e_low} does not divide {e_high}")
        if not self.in_subfield(x, e_high):
            raise ValueError("element outside the stated subfield")
        acc = x
        cur = x
        for _ in range(e_high // e_low - 1):
            cur = self.frobenius(cur, e_low)
            acc = self.mul(acc, cur)
        return acc

    def in_subfield(self, x: int, e: int) -> bool:
        self._check_divisor(e)
        return self.frobenius(x, e) == x

    def degree_over_q(self, x: int) -> int:
        """Smallest e | m with x in F_{q^e}; 0 and F_q elements have degree 1."""
        for e in divisors(self.m):
            if self.frobenius(x, e) == x:
                return e
        raise AssertionError("element outside its own field")  # unreachable

    def find_element_of_degree(self, e: int, seed: int = 0) -> int:
        """Deterministic-under-seed element with F_q(x) = F_{q^e}."""
        import random

        self._check_divisor(e)
        rng = random.Random(seed)
        while True:
            x = rng.randrange(self.order)
            if self.degree_over_q(x) == e:
                return x

    def elements_of_degree(self, e: int) -> list[int]:
        self._check_divisor(e)
        return [x for x in range(self.order) if self.degree_over_q(x) == e]

    # ------------------------------------------------------------------
    # minimal polynomials
    # ------------------------------------------------------------------

    def minimal_polynomial(self, x: int) -> tuple[int, ...]:
        """Monic minimal polynomial of x over F_q.

        Coefficients are returned little-endian as field elements (each
        lies in F_q inside this context).
        """
        d = self.degree_over_q(x)
        poly = [1]  # coefficient list over F_{q^m}, little-endian
        conj = x
        for _ in range(d):
            # multiply by (X - conj)
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = self.add(nxt[i + 1], c)
                nxt[i] = self.sub(nxt[i], self.mul(c, conj))
            poly = nxt
            conj = self.frobenius(conj, 1)
        assert all(self.in_subfield(c, 1) for c in poly)
        return tuple(poly)

    def poly_eval(self, coeffs: Sequence[int], z: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, z), c)
        return acc

    def poly_derivative(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        out = []
        for i in range(1, len(coeffs)):
            scalar = i % self.p  # i*c in characteristic p
            out.append(self.mul(coeffs[i], scalar))
        return tuple(out)

    def derivative_at(self, coeffs: Sequence[int], z: int) -> int:
        return self.poly_eval(self.poly_derivative(coeffs), z)

    # ------------------------------------------------------------------
    # subfield bases and coordinates
    # ------------------------------------------------------------------

    def fp_basis_of_subfield(self, e: int) -> tuple[int, ...]:
        """An F_p-basis of F_{q^e} inside this model (cached)."""
        self._check_divisor(e)
        key = ("fpbasis", e)
        if key not in self._caches:
            n = self.n
            # kernel of (Frob_{q^e} - id) on the prime-field coordinate space
            cols = []
            for j in range(n):
                ej = self.from_digits([1 if i == j else 0 for i in range(n)])
                img = self.sub(self.frobenius(ej, e), ej)
                cols.append(self.digits(img))
            mat = np.array(cols, dtype=np.int64).T  # rows: coordinates of images
            ker = modp_kernel(mat, self.p)
            basis = tuple(sorted(self.from_digits(v) for v in ker))
            assert len(basis) == self.a * e
            self._caches[key] = basis
        return self._caches[key]

    def subfield_elements(self, e: int) -> list[int]:
        """All q^e elements of F_{q^e}, ascending by encoding (cached)."""
        key = ("subelems", e)
        if key not in self._caches:
            basis = self.fp_basis_of_subfield(e)
            elems = [0]
            for b in basis:
                scaled = []
                for c in range(1, self.p):
                    cb = self.mul(b, c)  # c < p encodes the constant c
                    scaled.extend(self.add(z, cb) for z in elems)
                elems = elems + scaled
            elems.sort()
            assert len(elems) == self.q**e
            self._caches[key] = elems
        return self._caches[key]

    def subfield_power_basis(self, e: int) -> tuple[int, ...]:
        """Powers x^0..x^(m/e - 1) of the modulus root: an F_{q^e}-basis
        of F_{q^m} (the root has degree m/e over every F_{q^e})."""
        s = self.m // self._check_divisor(e)
        out = []
        acc = 1
        for _ in range(s):
            out.append(acc)
            acc = self.mul(acc, self.x if self.n > 1 else 1)
        return tuple(out)

    def _coord_matrix_inv(self, e: int) -> np.ndarray:
        """Inverse of the F_p-matrix sending stacked F_{q^e}-coordinates
        (in the subfield power basis) to element digit vectors."""
        key = ("coordinv", e)
        if key not in self._caches:
            w = self.fp_basis_of_subfield(e)
            powers = self.subfield_power_basis(e)
            cols = []
            for xi in powers:
                for wl in w:
                    cols.append(self.digits(self.mul(wl, xi)))
            mat = np.array(cols, dtype=np.int64).T
            self._caches[key] = modp_inv(mat, self.p)
        return self._caches[key]

    def subfield_coords(self, z: int, e: int) -> tuple[int, ...]:
        """Coordinates of z over F_{q^e} in the subfield power basis;
        each coordinate is returned as an element of F_{q^e}."""
        self._check_divisor(e)
        minv = self._coord_matrix_inv(e)
        vec = np.array(self.digits(z), dtype=np.int64)
        sol = (minv @ vec) % self.p
        w = self.fp_basis_of_subfield(e)
        ae = len(w)
        out = []
        for i in range(self.m // e):
            c = 0
            for l in range(ae):
                s = int(sol[i * ae + l])
                if s:
                    c = self.add(c, self.mul(w[l], s))
            out.append(c)
        return tuple(out)

    def subfield_combine(self, coords: Sequence[int], e: int) -> int:
        powers = self.subfield_power_basis(e)
        acc = 0
        for c, xi in zip(coords, powers):
            acc = self.add(acc, self.mul(c, xi))
        return acc

    def q_coords(self, z: int) -> tuple[int, ...]:
        """Coordinates over F_q in the power basis (fast path for a = 1,
        where they are just the digit vector)."""
        if self.a == 1:
            return self.digits(z)
        return self.subfield_coords(z, 1)

    def q_combine(self, coords: Sequence[int]) -> int:
        if self.a == 1:
            return self.from_digits(coords)
        return self.subfield_combine(coords, 1)

    # ------------------------------------------------------------------
    # coordinates with respect to the fixed F_q-basis Gamma
    # ------------------------------------------------------------------

    def _validate_fq_basis(self):
        rows = [self.digits(self.mul(w, g))
                for g in self.fq_basis for w in self.fp_basis_of_subfield(1)]
        mat = np.array(rows, dtype=np.int64)
        from .linalg import modp_rank

        if modp_rank(mat, self.p) != self.n:
            raise ValueError("fq_basis elements are not F_q-linearly independent")

    def gamma_coords(self, z: int, gamma: Sequence[int] | None = None) -> tuple[int, ...]:
        """Coordinates of z over F_q with respect to Gamma (default: the
        context basis).  Used by support expansion."""
        if gamma is None:
            gamma = self.fq_basis
        gamma = tuple(gamma)
        key = ("gammainv", gamma)
        if key not in self._caches:
            w = self.fp_basis_of_subfield(1)
            cols = []
            for g in gamma:
                for wl in w:
                    cols.append(self.digits(self.mul(wl, g)))
            mat = np.array(cols, dtype=np.int64).T
            self._caches[key] = modp_inv(mat, self.p)
        minv = self._caches[key]
        vec = np.array(self.digits(z), dtype=np.int64)
        sol = (minv @ vec) % self.p
        w = self.fp_basis_of_subfield(1)
        out = []
        for j in range(self.m):
            c = 0
            for l in range(self.a):
                s = int(sol[j * self.a + l])
                if s:
                    c = self.add(c, self.mul(w[l], s))
            out.append(c)
        return tuple(out)

    # ------------------------------------------------------------------
    # F_q as an abstract small field (codes 0..q-1) for kernels
    # ------------------------------------------------------------------

    def fq_elements(self) -> list[int]:
        return self.subfield_elements(1)

    def fq_code(self, z: int) -> int:
        """Index of an F_q element in encoding order (identity for a=1)."""
        if self.a == 1:
            return z
        key = ("fqcode",)
        if key not in self._caches:
            elems = self.fq_elements()
            self._caches[key] = {z: i for i, z in enumerate(elems)}
        return self._caches[key][z]

    def fq_from_code(self, c: int) -> int:
        if self.a == 1:
            return c
        return self.fq_elements()[c]

    def q_tables(self):
        """(ADD, SUB, MUL, INV) numpy uint8 tables on F_q codes; INV[0] = 0."""
        key = ("qtables",)
        if key not in self._caches:
            if self.q > 256:
                raise ValueError(f"q = {self.q} too large for table-driven kernels")
            elems = self.fq_elements()
            qq = self.q
            add = np.zeros((qq, qq), dtype=np.uint8)
            sub = np.zeros((qq, qq), dtype=np.uint8)
            mul = np.zeros((qq, qq), dtype=np.uint8)
            inv = np.zeros(qq, dtype=np.uint8)
            for i, zi in enumerate(elems):
                for j, zj in enumerate(elems):
                    add[i, j] = self.fq_code(self.add(zi, zj))
                    sub[i, j] = self.fq_code(self.sub(zi, zj))
                    mul[i, j] = self.fq_code(self.mul(zi, zj))
                if zi:
                    inv[i] = self.fq_code(self.inv(zi))
            self._caches[key] = (add, sub, mul, inv)
        return self._caches[key]

    # ------------------------------------------------------------------
    # multiplicative generators
    # ------------------------------------------------------------------

    @property
    def primitive_element(self) -> int:
        key = ("prim",)
        if key not in self._caches:
            if self._exp is not None:
                self._caches[key] = self._generator
            else:
                n1 = self.order - 1
                factors = gfpoly.prime_factors(n1)
                for cand in range(2, self.order):
                    if all(self.pow(cand, n1 // r) != 1 for r in factors):
                        self._caches[key] = cand
                        break
        return self._caches[key]

    def subfield_generator(self, e: int) -> int:
        """A multiplicative generator of F_{q^e}^*."""
        self._check_divisor(e)
        n1 = self.order - 1
        sub1 = self.q**e - 1
        return self.pow(self.primitive_element, n1 // sub1)

    # ------------------------------------------------------------------
    # serialization and dunder plumbing
    # ------------------------------------------------------------------

    def to_descriptor(self) -> dict:
        return {"p": self.p, "a": self.a, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_descriptor(cls, d: dict) -> "FieldContext":
        return cls(int(d["p"]), int(d.get("a", 1)), int(d["m"]),
                   modulus=d.get("modulus"))

    def same_as(self, other: "FieldContext") -> bool:
        return (self.p, self.a, self.m, self.modulus) == (
            other.p, other.a, other.m, other.modulus)

    def require_same(self, other: "FieldContext"):
        if not self.same_as(other):
            raise ContextMismatchError("operands from different field contexts")

    def __repr__(self):
        if self.a == 1:
            return f"GF({self.p}^{self.m})/GF({self.p})"
        return f"GF({self.p}^{self.a * self.m})/GF({self.p}^{self.a})"


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dim subspaces of F_q^n (exact integer)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def is_prime(n: int) -> bool:
    return _is_prime(n)
