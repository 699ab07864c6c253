"""Exact arithmetic in Z[w], w = exp(2*pi*i/p) a primitive p-th root of unity.

Every Walsh value computed by this package lives here.  Elements are kept
in the canonical integer basis {1, w, ..., w^(p-2)}: the relation
1 + w + ... + w^(p-1) = 0 is applied eagerly, so equality is coordinate-wise
and zero has all-zero coordinates.  No floating point anywhere: bentness
and sign classifications are certificates, not approximations.

The quadratic Gauss sum g = sum_{x in F_p} w^(x^2) realizes sqrt(p) inside
the ring (g * conj(g) = p, g^2 = (-1)^((p-1)/2) * p), which is how values
of magnitude p^(n/2) for odd n are recognized without irrational numbers.
"""

from __future__ import annotations

from functools import lru_cache


class CycInt:
    """An element of Z[w] in canonical coordinates."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords) -> None:
        self.p = p
        coords = tuple(int(c) for c in coords)
        if len(coords) != p - 1:
            raise ValueError("need %d coordinates for p=%d" % (p - 1, p))
        self.coords = coords

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def integer(cls, p: int, m: int) -> "CycInt":
        return cls(p, (m,) + (0,) * (p - 2))

    @classmethod
    def omega_pow(cls, p: int, j: int) -> "CycInt":
        """w^j reduced to canonical form."""
        j %= p
        if j < p - 1:
            return cls(p, tuple(1 if i == j else 0 for i in range(p - 1)))
        return cls(p, (-1,) * (p - 1))

    @classmethod
    def from_exponent_counts(cls, p: int, counts) -> "CycInt":
        """sum_j counts[j] * w^j for a length-p count vector."""
        top = counts[p - 1]
        return cls(p, tuple(counts[i] - top for i in range(p - 1)))

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "CycInt") -> "CycInt":
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, tuple(-a for a in self.coords))

    def __mul__(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.p, tuple(other * a for a in self.coords))
        if not isinstance(other, CycInt):
            return NotImplemented
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        acc[(i + j) % p] += a * b
        return CycInt.from_exponent_counts(p, acc)

    def __rmul__(self, other) -> "CycInt":
        return self.__mul__(other)

    def conj(self) -> "CycInt":
        """Complex conjugation w -> w^(p-1); an involutive ring automorphism."""
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.coords):
            acc[(p - i) % p] += a
        return CycInt.from_exponent_counts(p, acc)

    def norm_sq(self) -> "CycInt":
        """x * conj(x); the squared complex magnitude as a ring element."""
        return self * self.conj()

    def mul_omega(self, j: int) -> "CycInt":
        """Multiply by w^j."""
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.coords):
            acc[(i + j) % p] += a
        return CycInt.from_exponent_counts(p, acc)

    # -- predicates and views ----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        """True iff the value is a rational integer (tail coordinates zero)."""
        return not any(self.coords[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError("not a rational integer: %s" % self)
        return self.coords[0]

    def is_real(self) -> bool:
        """Conjugation-invariant, i.e. lies in the real subring."""
        return self == self.conj()

    def __eq__(self, other) -> bool:
        return isinstance(other, CycInt) and self.p == other.p and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.p, self.coords))

    def __repr__(self) -> str:
        return "CycInt(p=%d, %s)" % (self.p, self)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mon = "w" if i == 1 else "w^%d" % i
                parts.append("%d*%s" % (c, mon))
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


@lru_cache(maxsize=8)
def gauss_sum(p: int) -> CycInt:
    """The quadratic Gauss sum of F_p as an exact element of Z[w]."""
    counts = [0] * p
    for x in range(p):
        counts[(x * x) % p] += 1
    return CycInt.from_exponent_counts(p, counts)


def recognize_unit_times_power(x: CycInt, p: int, n: int):
    """Match x against the bent-coefficient normal form.

    For even n succeeds iff x = s * p^(n/2) * w^j; for odd n succeeds iff
    x * conj(gauss_sum(p)) = s * p^((n+1)/2) * w^j, which absorbs the
    imaginary unit occurring when p = 3 mod 4.  Returns (s, j) with
    s in {+1, -1} and j the dual value mod p, or None when x has no such
    form (a non-bent coefficient).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        mag = p ** (n // 2)
        probe = x
    else:
        mag = p ** ((n + 1) // 2)
        probe = x * gauss_sum(p).conj()
    coords = probe.coords
    nonzero = [i for i, c in enumerate(coords) if c]
    if len(nonzero) == 1:
        i = nonzero[0]
        c = coords[i]
        if abs(c) == mag:
            return (1 if c > 0 else -1), i
        return None
    if len(nonzero) == p - 1:
        c = coords[0]
        if abs(c) == mag and all(v == c for v in coords):
            # x = -s*mag*(1 + w + ... + w^(p-2)) = s*mag*w^(p-1)
            return (-1 if c > 0 else 1), p - 1
    return None


def unit_class(p: int, n: int) -> str:
    """Which unit multiplies w^(dual) in a bent coefficient: 'real' for
    even n or p = 1 mod 4, 'imaginary' for odd n with p = 3 mod 4."""
    if n % 2 == 0 or p % 4 == 1:
        return "real"
    return "imaginary"
