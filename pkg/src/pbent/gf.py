"""Exact arithmetic in F_{p^n} for small odd primes p.

Elements are coefficient vectors over F_p in the polynomial basis
{1, alpha, ..., alpha^(n-1)} where alpha is a root of the modulus.  The
canonical enumeration index of an element is

    index(x) = sum_i coeffs[i] * p^i        (coefficient of alpha^i = digit i)

and every truth table in this package is indexed that way.

A FieldCtx fixes (p, n, modulus, primitive element) once, verifies the
modulus is irreducible and the primitive element has full order, and then
serves pure immutable arithmetic.  Discrete-log tables are built eagerly
for |F| <= 3^8 and lazily above (up to 3^12); without tables every
operation falls back to polynomial arithmetic.
"""

from __future__ import annotations

import re

from .linalg import mat_vec

LOG_TABLE_EAGER = 3 ** 8
LOG_TABLE_MAX = 3 ** 12


class FieldError(ValueError):
    """Invalid field construction or field-operation precondition."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors by trial division (fine for m <= 3^12)."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# Pinned default moduli (Conway polynomials), coefficients low to high,
# verified at construction time: irreducible, root primitive, and
# norm-compatible with the entries of the subfield degrees.
# Degrees absent from the table get a deterministic search instead.
_CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (3, 9): (1, 1, 2, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1),
    (3, 11): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Pinned modulus for F_{p^n}: the Conway polynomial where tabulated,
    otherwise the first monic irreducible with a primitive root in the
    canonical coefficient enumeration (deterministic across runs)."""
    if (p, n) in _CONWAY:
        return _CONWAY[(p, n)]
    for code in range(p ** n):
        coeffs = _digits(code, p, n) + [1]
        if coeffs[0] == 0:
            continue
        if _poly_is_irreducible(tuple(coeffs), p, n) and _root_is_primitive(tuple(coeffs), p, n):
            return tuple(coeffs)
    raise FieldError("no irreducible polynomial found for p=%d n=%d" % (p, n))


def _digits(m: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        m, r = divmod(m, p)
        out.append(r)
    return out


# -- bare polynomial arithmetic mod (modulus, p), used before a ctx exists --

def _pmul(a, b, modulus, p):
    n = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for e in range(len(prod) - 1, n - 1, -1):
        c = prod[e] % p
        if c:
            for i in range(n):
                prod[e - n + i] -= c * modulus[i]
        prod[e] = 0
    return tuple(v % p for v in prod[:n])


def _ppow(a, e, modulus, p):
    n = len(modulus) - 1
    result = tuple([1] + [0] * (n - 1))
    base = a
    while e:
        if e & 1:
            result = _pmul(result, base, modulus, p)
        base = _pmul(base, base, modulus, p)
        e >>= 1
    return result


def _poly_is_irreducible(modulus, p, n) -> bool:
    # Rabin: x^(p^n) == x mod f, and gcd(x^(p^d) - x, f) == 1 for d | n, d < n.
    x = tuple([0, 1] + [0] * (n - 2)) if n >= 2 else (0,)
    if n == 1:
        return True
    h = x
    powers = {}
    for d in range(1, n + 1):
        h = _ppow(h, p, modulus, p)
        powers[d] = h
    if powers[n] != x:
        return False
    for d in range(1, n):
        if n % d:
            continue
        diff = tuple((a - b) % p for a, b in zip(powers[d], x))
        if _poly_gcd_with_modulus(diff, modulus, p) is not None:
            return False
    return True


def _poly_gcd_with_modulus(a_vec, modulus, p):
    """Nontrivial gcd(poly(a_vec), modulus) or None if coprime."""
    a = [v % p for v in modulus]
    b = [v % p for v in a_vec]
    while any(b):
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b) and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(b):
                break
            f = (r[-1] * inv) % p
            off = len(r) - len(b)
            for i, bv in enumerate(b):
                r[off + i] = (r[off + i] - f * bv) % p
        a, b = b, r
    while a and a[-1] == 0:
        a.pop()
    return a if len(a) > 1 else None


def _root_is_primitive(modulus, p, n) -> bool:
    q1 = p ** n - 1
    x = tuple([0, 1] + [0] * (n - 2)) if n >= 2 else ((-modulus[0]) % p,)
    if n == 1:
        val = x[0]
        return all(pow(val, q1 // r, p) != 1 for r in prime_factors(q1))
    one = tuple([1] + [0] * (n - 1))
    return all(_ppow(x, q1 // r, modulus, p) != one for r in prime_factors(q1))


class FFElem:
    """An element of F_{p^n}, immutable, tied to its FieldCtx."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: "FieldCtx", coeffs) -> None:
        self.ctx = ctx
        self.coeffs = tuple(c % ctx.p for c in coeffs)
        if len(self.coeffs) != ctx.n:
            raise FieldError("coefficient vector must have length n")

    @property
    def index(self) -> int:
        return self.ctx.to_index(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "FFElem") -> "FFElem":
        return FFElem(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "FFElem") -> "FFElem":
        return FFElem(self.ctx, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "FFElem":
        return FFElem(self.ctx, [-a for a in self.coeffs])

    def __mul__(self, other: "FFElem") -> "FFElem":
        return FFElem(self.ctx, self.ctx.mul_t(self.coeffs, other.coeffs))

    def __pow__(self, e: int) -> "FFElem":
        return self.ctx.power(self, e)

    def __truediv__(self, other: "FFElem") -> "FFElem":
        return self * other.inverse()

    def inverse(self) -> "FFElem":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        return self ** (self.ctx.order - 1)

    def scale(self, c: int) -> "FFElem":
        """Multiply by a prime-field scalar."""
        return FFElem(self.ctx, [c * a for a in self.coeffs])

    def __eq__(self, other) -> bool:
        return (isinstance(other, FFElem) and self.ctx is other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self) -> str:
        return "FFElem(p=%d,n=%d,%r)" % (self.ctx.p, self.ctx.n, list(self.coeffs))


class FieldCtx:
    """A concrete realization of F_{p^n}.

    Immutable after construction; all operations are pure, so instances are
    safe to share across threads.  The modulus is verified irreducible and
    the primitive element's order is verified against the prime factors of
    p^n - 1, so a successfully built context is a certificate of both.
    """

    def __init__(self, p: int, n: int, modulus=None, eager_tables: bool | None = None) -> None:
        if not is_prime(p):
            raise FieldError("p must be prime, got %d" % p)
        if n < 1:
            raise FieldError("n must be >= 1")
        self.p = p
        self.n = n
        self.q = p ** n
        self.order = self.q - 1
        if modulus is None:
            modulus = default_modulus(p, n)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree n")
        if n >= 2 and not _poly_is_irreducible(modulus, p, n):
            raise FieldError("modulus is reducible over F_%d" % p)
        self.modulus = modulus
        self._powers_of_p = [p ** i for i in range(n + 1)]
        # alpha^(n+m) reduced, for m in [0, n-1): used by mul_t
        self._red = []
        cur = tuple((-modulus[i]) % p for i in range(n))
        self._red.append(cur)
        for _ in range(n - 2):
            cur = self._shift_reduce(cur)
            self._red.append(cur)
        self._order_factors = prime_factors(self.order) if self.order > 1 else []
        self.exp_table: list[int] | None = None
        self.log_table: list[int] | None = None
        self._trace_of_exp: list[int] | None = None
        self._frob_mats: dict[int, list[list[int]]] = {}
        self._reltr_mats: dict[int, list[list[int]]] = {}
        self._subfield_cache: dict[int, list[int]] = {}
        root = self.elem([0, 1] + [0] * (n - 2)) if n >= 2 else self.elem([(-modulus[0]) % p])
        if self._has_full_order(root):
            self.primitive = root
        else:
            self.primitive = self._find_primitive()
        self.trace_vec = self._build_trace_vec()
        if eager_tables is None:
            eager_tables = self.q <= LOG_TABLE_EAGER
        if eager_tables:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _shift_reduce(self, vec):
        top = vec[-1]
        shifted = [0] + list(vec[:-1])
        if top:
            for i in range(self.n):
                shifted[i] = (shifted[i] + top * self._red[0][i]) % self.p
        return tuple(v % self.p for v in shifted)

    def _has_full_order(self, x: FFElem) -> bool:
        if x.is_zero():
            return False
        one = self.one()
        return all(self.power(x, self.order // r) != one for r in self._order_factors)

    def _find_primitive(self) -> FFElem:
        for idx in range(2, self.q):
            cand = self.from_index(idx)
            if self._has_full_order(cand):
                return cand
        raise FieldError("no primitive element found (impossible for a field)")

    def _build_trace_vec(self) -> tuple[int, ...]:
        out = []
        for i in range(self.n):
            x = self.from_index(self._powers_of_p[i]) if i else self.one()
            acc = x
            y = x
            for _ in range(self.n - 1):
                y = self.frobenius(y, 1)
                acc = acc + y
            if any(acc.coeffs[1:]):
                raise FieldError("trace landed outside the prime field")
            out.append(acc.coeffs[0])
        return tuple(out)

    def _build_tables(self) -> None:
        if self.exp_table is not None:
            return
        if self.q > LOG_TABLE_MAX:
            raise FieldError("log tables capped at |F| <= 3^12")
        exp = [0] * self.order
        log = [-1] * self.q
        cur = self.one().coeffs
        g = self.primitive.coeffs
        for m in range(self.order):
            idx = self.to_index(cur)
            exp[m] = idx
            log[idx] = m
            cur = self.mul_t(cur, g)
        if self.to_index(cur) != exp[0]:
            raise FieldError("exp table did not close (primitive order wrong)")
        self.exp_table = exp
        self.log_table = log
        self._trace_of_exp = [self.trace_coeffs(self.from_index(i).coeffs) for i in exp]

    def ensure_tables(self) -> None:
        self._build_tables()

    # -- element plumbing ----------------------------------------------------

    def elem(self, coeffs) -> FFElem:
        return FFElem(self, coeffs)

    def zero(self) -> FFElem:
        return FFElem(self, [0] * self.n)

    def one(self) -> FFElem:
        return FFElem(self, [1] + [0] * (self.n - 1))

    def scalar(self, c: int) -> FFElem:
        """Embed a prime-field residue as a field element."""
        return FFElem(self, [c] + [0] * (self.n - 1))

    def from_index(self, idx: int) -> FFElem:
        if not 0 <= idx < self.q:
            raise FieldError("element index out of range")
        return FFElem(self, _digits(idx, self.p, self.n))

    def to_index(self, coeffs) -> int:
        return sum(c * self._powers_of_p[i] for i, c in enumerate(coeffs))

    def elements(self):
        """All field elements in canonical index order."""
        for idx in range(self.q):
            yield self.from_index(idx)

    def add_index(self, i: int, j: int) -> int:
        """Index of the sum of the elements with indexes i and j."""
        p = self.p
        out = 0
        mult = 1
        while i or j:
            i, a = divmod(i, p)
            j, b = divmod(j, p)
            out += ((a + b) % p) * mult
            mult *= p
        return out

    def neg_index(self, i: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while i:
            i, a = divmod(i, p)
            out += (-a % p) * mult
            mult *= p
        return out

    def shift_table(self, a_idx: int) -> list[int]:
        """perm[x] = index(x + a), built in one sweep over the field."""
        p, n, q = self.p, self.n, self.q
        perm = [0] * q
        cur = _digits(a_idx, p, n)
        cur_idx = a_idx
        xdig = [0] * n
        pw = self._powers_of_p
        for x in range(q - 1):
            perm[x] = cur_idx
            d = 0
            while xdig[d] == p - 1:
                xdig[d] = 0
                if cur[d] == p - 1:
                    cur[d] = 0
                    cur_idx -= (p - 1) * pw[d]
                else:
                    cur[d] += 1
                    cur_idx += pw[d]
                d += 1
            xdig[d] += 1
            if cur[d] == p - 1:
                cur[d] = 0
                cur_idx -= (p - 1) * pw[d]
            else:
                cur[d] += 1
                cur_idx += pw[d]
        perm[q - 1] = cur_idx
        return perm

    # -- core arithmetic -----------------------------------------------------

    def mul_t(self, a, b) -> tuple[int, ...]:
        """Product of two coefficient tuples."""
        p, n = self.p, self.n
        if n == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for e in range(2 * n - 2, n - 1, -1):
            c = prod[e] % p
            if c:
                red = self._red[e - n]
                for i in range(n):
                    prod[i] += c * red[i]
        return tuple(v % p for v in prod[:n])

    def power(self, x: FFElem, e: int) -> FFElem:
        """x^e; e may be any integer (negative requires x != 0)."""
        if x.is_zero():
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return self.one() if e == 0 else self.zero()
        if self.log_table is not None:
            m = self.log_table[x.index]
            return self.from_index(self.exp_table[(m * e) % self.order])
        e %= self.order
        result = self.one().coeffs
        base = x.coeffs
        while e:
            if e & 1:
                result = self.mul_t(result, base)
            base = self.mul_t(base, base)
            e >>= 1
        return FFElem(self, result)

    def gen_power(self, m: int) -> FFElem:
        """primitive^m."""
        return self.power(self.primitive, m)

    # -- Frobenius and traces --------------------------------------------------

    def _frob_matrix(self, e: int) -> list[list[int]]:
        e %= self.n
        if e not in self._frob_mats:
            # column i = coefficients of (alpha^i)^(p^e)
            cols = []
            for i in range(self.n):
                base = self.from_index(self._powers_of_p[i]) if i else self.one()
                img = self.power(base, self.p ** e)
                cols.append(img.coeffs)
            self._frob_mats[e] = [[cols[i][r] for i in range(self.n)] for r in range(self.n)]
        return self._frob_mats[e]

    def frobenius(self, x: FFElem, e: int) -> FFElem:
        """x^(p^(e mod n)); negative e gives the inverse automorphism."""
        e %= self.n
        if e == 0:
            return x
        if self.log_table is not None and not x.is_zero():
            m = self.log_table[x.index]
            return self.from_index(self.exp_table[(m * (self.p ** e)) % self.order])
        return FFElem(self, mat_vec(self._frob_matrix(e), list(x.coeffs), self.p))

    def rel_trace(self, x: FFElem, k: int) -> FFElem:
        """Trace onto the subfield F_{p^k}: sum of x^(p^(ik)) for i < n/k."""
        if self.n % k:
            raise FieldError("k=%d does not divide n=%d" % (k, self.n))
        if k not in self._reltr_mats:
            mats = [self._frob_matrix((i * k) % self.n) for i in range(self.n // k)]
            acc = [[sum(m[r][c] for m in mats) % self.p for c in range(self.n)]
                   for r in range(self.n)]
            self._reltr_mats[k] = acc
        return FFElem(self, mat_vec(self._reltr_mats[k], list(x.coeffs), self.p))

    def trace_coeffs(self, coeffs) -> int:
        """Absolute trace to F_p of a coefficient tuple, as an integer residue."""
        return sum(c * t for c, t in zip(coeffs, self.trace_vec)) % self.p

    def subfield_abs_trace(self, x: FFElem, k: int) -> int:
        """Tr_1^k of an element of the subfield F_{p^k} (k Frobenius terms,
        not n); the result must land in the prime field."""
        if self.n % k:
            raise FieldError("k=%d does not divide n=%d" % (k, self.n))
        acc = x
        y = x
        for _ in range(k - 1):
            y = self.frobenius(y, 1)
            acc = acc + y
        if any(acc.coeffs[1:]):
            raise FieldError("element was not in the subfield F_p^%d" % k)
        return acc.coeffs[0]

    def trace(self, x: FFElem) -> int:
        return self.trace_coeffs(x.coeffs)

    def trace_of_exp(self, m: int) -> int:
        """Tr(primitive^m) from the precomputed table."""
        self._build_tables()
        return self._trace_of_exp[m % self.order]

    # -- subfields -------------------------------------------------------------

    def subfield_indexes(self, m: int) -> list[int]:
        """Sorted element indexes of the subfield F_{p^m} inside F_{p^n}."""
        if self.n % m:
            raise FieldError("subfield degree must divide n")
        if m not in self._subfield_cache:
            self._build_tables()
            step = self.order // (self.p ** m - 1)
            idxs = {0} | {self.exp_table[i * step] for i in range(self.p ** m - 1)}
            self._subfield_cache[m] = sorted(idxs)
        return self._subfield_cache[m]

    def in_subfield(self, x: FFElem, m: int) -> bool:
        return self.frobenius(x, m) == x

    # -- misc -------------------------------------------------------------------

    def spec_string(self) -> str:
        return "p=%d n=%d mod=[%s]" % (self.p, self.n, ",".join(map(str, self.modulus)))

    def __repr__(self) -> str:
        return "FieldCtx(%s)" % self.spec_string()

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldCtx) and self.p == other.p and self.n == other.n
                and self.modulus == other.modulus and self.primitive.coeffs == other.primitive.coeffs)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))


_FIELD_CACHE: dict = {}


def get_field(p: int, n: int, modulus=None) -> FieldCtx:
    """Cached field constructor; modulus None selects the pinned default."""
    key = (p, n, tuple(c % p for c in modulus) if modulus is not None else None)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldCtx(p, n, modulus)
    return _FIELD_CACHE[key]


_FIELD_SPEC_RE = re.compile(
    r"^\s*p\s*=\s*(\d+)\s+n\s*=\s*(\d+)(?:\s+mod\s*=\s*\[([0-9,\s+-]+)\])?\s*$")


def parse_field_spec(text: str) -> FieldCtx:
    """Parse "p=3 n=4" or "p=3 n=4 mod=[2,1,0,0,1]" (coefficients low to
    high degree; omitted mod selects the pinned default modulus)."""
    m = _FIELD_SPEC_RE.match(text)
    if not m:
        raise FieldError("bad field spec: %r" % text)
    p, n = int(m.group(1)), int(m.group(2))
    modulus = None
    if m.group(3):
        modulus = tuple(int(tok) for tok in m.group(3).replace(" ", "").split(","))
    return get_field(p, n, modulus)
