"""Second-order-derivative certificates and weakly-regular first-derivative
identity checks.

A function is "cubic-like bent" when every nonzero direction a admits a b
with D_{a,b} f a nonzero constant; this implies bentness, and for functions
of degree <= 3 it is equivalent to it.  For such functions the witness
search per direction reduces to linear algebra: with g = D_a f of degree
<= 2, the set {b : D_b g constant} is the radical of the symmetric
bi-additive form h(x, b) = g(x+b) - g(x) - g(b) + g(0), computed here as a
kernel of an n x n matrix instead of a p^n scan.  Higher-degree inputs fall
back to the direct scan, so the two paths agree wherever both apply.

The weakly-regular identity battery checks, per direction pair (b, c):
symmetry of W_{D_c f} in b and c negation, the phase identity against the
dual's derivative transform, vanishing whenever Tr(bc) != 0, and realness
plus the dual identity on Tr(bc) = 0.  Weakly regular bent functions pass
all of them; recorded violations are the machine-checkable certificate
that a bent function is NOT weakly regular.
"""

from __future__ import annotations

import itertools
import random

from .errors import PreconditionError
from .funcrep import PFunction
from .gf import FFElem
from .linalg import mat_kernel
from .walsh import extract_certificate, is_bent, walsh_fast

EXHAUSTIVE_PAIR_LIMIT = 3 ** 8


class CubicLikeCertificate:
    """Witness map a -> (b, constant) with D_{a,b} f = constant != 0."""

    __slots__ = ("witnesses", "complete")

    def __init__(self, witnesses: dict, complete: bool) -> None:
        self.witnesses = witnesses
        self.complete = complete

    def to_json(self) -> dict:
        return {
            "complete": self.complete,
            "witness_count": len(self.witnesses),
            "witnesses": {str(a): [b, c] for a, (b, c) in sorted(self.witnesses.items())},
        }

    def __repr__(self) -> str:
        return "CubicLikeCertificate(complete=%s, %d witnesses)" % (
            self.complete, len(self.witnesses))


def _first_witness_low_degree(f: PFunction, a_idx: int):
    """First b (canonical order) with D_{a,b} f a nonzero constant, for
    deg f <= 3, via the radical of the derivative's bi-additive form."""
    ctx = f.ctx
    p, n, q = ctx.p, ctx.n, ctx.q
    vals = f.values
    add = ctx.add_index
    basis = [p ** i for i in range(n)]

    def g(z_idx):
        return vals[add(z_idx, a_idx)] - vals[z_idx]

    g0 = g(0)
    gb_cache = [g(bi) for bi in basis]
    mat = []
    for i in range(n):
        row = []
        for jj in range(n):
            val = (g(add(basis[i], basis[jj])) - gb_cache[i] - gb_cache[jj] + g0) % p
            row.append(val)
        mat.append(row)
    kernel = mat_kernel(mat, p)
    if not kernel:
        candidates = [0]
    else:
        candidates = []
        for combo in itertools.product(range(p), repeat=len(kernel)):
            coords = [0] * n
            for c, vec in zip(combo, kernel):
                if c:
                    for i in range(n):
                        coords[i] = (coords[i] + c * vec[i]) % p
            candidates.append(sum(c * basis[i] for i, c in enumerate(coords)))
        candidates.sort()
    for b_idx in candidates:
        const = (g(b_idx) - g0) % p
        if const:
            return b_idx, const
    return None


def _first_witness_scan(f: PFunction, a_idx: int):
    ctx = f.ctx
    p, q = ctx.p, ctx.q
    vals = f.values
    perm_a = ctx.shift_table(a_idx)
    g = [(vals[perm_a[x]] - vals[x]) % p for x in range(q)]
    for b_idx in range(1, q):
        perm_b = ctx.shift_table(b_idx)
        const = (g[perm_b[0]] - g[0]) % p
        if const == 0:
            continue
        if all((g[perm_b[x]] - g[x]) % p == const for x in range(1, q)):
            return b_idx, const
    return None


def cubic_like_certificate(f: PFunction) -> CubicLikeCertificate:
    """Search every nonzero direction for a constant-nonzero second
    derivative; complete certificates imply bentness."""
    ctx = f.ctx
    fast = f.algebraic_degree() <= 3
    witnesses = {}
    complete = True
    for a_idx in range(1, ctx.q):
        hit = (_first_witness_low_degree(f, a_idx) if fast
               else _first_witness_scan(f, a_idx))
        if hit is None:
            complete = False
        else:
            witnesses[a_idx] = hit
    return CubicLikeCertificate(witnesses, complete)


def derivative_linear_space(f: PFunction) -> list[FFElem]:
    """E_f = {a : D_a f is constant}; closed under addition and scaling."""
    ctx = f.ctx
    p, q = ctx.p, ctx.q
    vals = f.values
    out = []
    for a_idx in range(q):
        perm = ctx.shift_table(a_idx)
        const = (vals[perm[0]] - vals[0]) % p
        if all((vals[perm[x]] - vals[x]) % p == const for x in range(1, q)):
            out.append(ctx.from_index(a_idx))
    return out


def quadratic_balance_witness(qf: PFunction):
    """For deg <= 2: a direction with constant nonzero derivative, or None.

    The scan is restricted to the linear space E_q; the returned witness
    exists iff qf is balanced."""
    if qf.algebraic_degree() > 2:
        raise PreconditionError("quadratic_balance_witness needs degree <= 2")
    vals = qf.values
    for a in derivative_linear_space(qf):
        const = (vals[a.index] - vals[0]) % qf.ctx.p
        if const:
            return a
    return None


class WrIdentityReport:
    """Outcome of the weakly-regular first-derivative identity battery.

    Of the recorded checks, only the dual-phase identity
    W_{D_c f}(b) = w^Tr(bc) W_{D_b f*}(-c) is actually implied by weak
    regularity for odd p; its violations are therefore a sound certificate
    of non-weak-regularity.  The symmetry, vanishing and realness checks
    are kept for completeness but fail already for quadratic bent
    functions, whose derivative transforms are one-point spikes at b = 2c
    (asymmetric, and supported on a point with Tr(bc) = 2 Tr(c^2) != 0 in
    general), so their violations prove nothing.
    """

    __slots__ = ("pair_count", "violations", "exhaustive")

    SOUND_CHECKS = ("dual_phase_identity",)

    def __init__(self, pair_count: int, violations: list, exhaustive: bool) -> None:
        self.pair_count = pair_count
        self.violations = violations
        self.exhaustive = exhaustive

    @property
    def clean(self) -> bool:
        return not self.violations

    @property
    def sound_violations(self) -> list:
        return [v for v in self.violations if v["check"] in self.SOUND_CHECKS]

    @property
    def sound_clean(self) -> bool:
        return not self.sound_violations

    def violations_by_check(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.violations:
            out[v["check"]] = out.get(v["check"], 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "pairs_checked": self.pair_count,
            "exhaustive": self.exhaustive,
            "violation_count": len(self.violations),
            "sound_violation_count": len(self.sound_violations),
            "violations_by_check": self.violations_by_check(),
            "violations": self.violations[:32],
        }

    def __repr__(self) -> str:
        return "WrIdentityReport(pairs=%d, violations=%d, sound=%d)" % (
            self.pair_count, len(self.violations), len(self.sound_violations))


def wr_identity_check(f: PFunction, seed: int = 0, sample: int = 10000,
                      extra_cs=None) -> WrIdentityReport:
    """Check the derivative-transform identities that every weakly regular
    bent function satisfies; violations certify non-weak-regularity.

    Exhaustive over all (b, c) when p^2n <= 3^8, otherwise a seeded sample
    of `sample` pairs; `extra_cs` adds full-b sweeps of the symmetry and
    vanishing checks for structurally interesting directions c.  When n is
    a multiple of 4 and the scan is sampled, the directions in the
    subfields of degree n/4 and n/2 are swept by default.
    """
    ctx = f.ctx
    p, q = ctx.p, ctx.q
    if extra_cs is None and q * q > EXHAUSTIVE_PAIR_LIMIT and ctx.n % 4 == 0:
        kk = ctx.n // 4
        pool = set(ctx.subfield_indexes(kk)) | set(ctx.subfield_indexes(2 * kk))
        extra_cs = sorted(i for i in pool if i)
    s = walsh_fast(f)
    if not is_bent(s):
        raise PreconditionError("wr_identity_check requires a bent function")
    fstar = extract_certificate(s).dual

    spec_c: dict[int, list] = {}
    spec_b: dict[int, list] = {}

    def deriv_spectrum(base: PFunction, idx: int, cache: dict) -> list:
        if idx not in cache:
            cache[idx] = walsh_fast(base.derivative(ctx.from_index(idx))).values
        return cache[idx]

    def tr_prod(i: int, j: int) -> int:
        return ctx.trace(ctx.from_index(i) * ctx.from_index(j))

    violations = []

    def full_check(b: int, c: int) -> None:
        wc = deriv_spectrum(f, c, spec_c)
        wcb = wc[b]
        if wcb != wc[ctx.neg_index(b)]:
            violations.append({"b": b, "c": c, "check": "symmetry_in_b"})
        wneg = deriv_spectrum(f, ctx.neg_index(c), spec_c)
        if wcb != wneg[b]:
            violations.append({"b": b, "c": c, "check": "symmetry_in_c"})
        tr = tr_prod(b, c)
        wb = deriv_spectrum(fstar, b, spec_b)
        if wcb != wb[ctx.neg_index(c)].mul_omega(tr):
            violations.append({"b": b, "c": c, "check": "dual_phase_identity"})
        if tr != 0:
            if not wcb.is_zero():
                violations.append({"b": b, "c": c, "check": "vanishing_on_nonzero_trace"})
        else:
            if wcb != wb[c]:
                violations.append({"b": b, "c": c, "check": "dual_identity_on_zero_trace"})
            if not wcb.is_real():
                violations.append({"b": b, "c": c, "check": "realness"})

    def light_check(b: int, c: int) -> None:
        wc = deriv_spectrum(f, c, spec_c)
        wcb = wc[b]
        if wcb != wc[ctx.neg_index(b)]:
            violations.append({"b": b, "c": c, "check": "symmetry_in_b"})
        if tr_prod(b, c) != 0 and not wcb.is_zero():
            violations.append({"b": b, "c": c, "check": "vanishing_on_nonzero_trace"})
        if not wcb.is_real():
            violations.append({"b": b, "c": c, "check": "realness"})

    exhaustive = q * q <= EXHAUSTIVE_PAIR_LIMIT
    count = 0
    if exhaustive:
        for c in range(q):
            for b in range(q):
                full_check(b, c)
                count += 1
    else:
        rng = random.Random(seed)
        for _ in range(sample):
            full_check(rng.randrange(q), rng.randrange(q))
            count += 1
    if extra_cs:
        for c_el in extra_cs:
            c = c_el.index if isinstance(c_el, FFElem) else int(c_el)
            for b in range(q):
                light_check(b, c)
                count += 1
    return WrIdentityReport(count, violations, exhaustive)


def quad_like_implication_check(f: PFunction, c: FFElem, d: FFElem) -> bool:
    """Given D_{c,d} f = lambda != 0 (checked), verify W_{D_c f}(b) = 0 for
    every b with Tr(bd) != lambda."""
    ctx = f.ctx
    dd = f.second_derivative(c, d)
    lam = dd.values[0]
    if lam == 0 or any(v != lam for v in dd.values):
        raise PreconditionError("D_{c,d} f is not a nonzero constant")
    spec = walsh_fast(f.derivative(c))
    for b in range(ctx.q):
        if ctx.trace(ctx.from_index(b) * d) != lam and not spec.values[b].is_zero():
            return False
    return True
