"""Exact Walsh spectra and the bent / (weakly) regular classification.

The Walsh transform used throughout is

    W_f(y) = sum_x w^(f(x) - Tr_n(x y)),   values in Z[w],

with the inverse p^n w^(f(x)) = sum_y W_f(y) w^(Tr_n(x y)).  Two evaluation
paths are provided: a direct O(p^2n) sum and a fast O(n p^(n+1)) tensor
decomposition.  The fast path writes Tr(x y) as a dot product between the
coordinates of x in the polynomial basis and the coordinates of y in the
trace-dual basis (obtained by inverting the Gram matrix [Tr(a_i a_j)]),
which turns the transform into n successive size-p DFT passes.

Every spectrum is Parseval-checked at construction
(sum_y |W(y)|^2 = p^(2n), exactly), so a constructed WalshSpectrum is
already a certificate of internal consistency.
"""

from __future__ import annotations

from .cyclo import CycInt, gauss_sum, recognize_unit_times_power, unit_class
from .errors import InternalInconsistency, PreconditionError
from .funcrep import PFunction
from .gf import FieldCtx
from .linalg import mat_inverse

NOT_BENT = "not_bent"
REGULAR = "regular"
WEAKLY_REGULAR = "weakly_regular"
NON_WEAKLY_REGULAR = "non_weakly_regular"


class WalshSpectrum:
    """Full map y -> W_f(y) as exact cyclotomic integers."""

    __slots__ = ("ctx", "values", "provenance")

    def __init__(self, ctx: FieldCtx, values, provenance: str) -> None:
        self.ctx = ctx
        self.values = list(values)
        self.provenance = provenance
        if len(self.values) != ctx.q:
            raise ValueError("spectrum must have p^n values")
        total = CycInt.zero(ctx.p)
        for v in self.values:
            total = total + v.norm_sq()
        if total != CycInt.integer(ctx.p, ctx.q * ctx.q):
            raise InternalInconsistency("Parseval failed: sum |W|^2 != p^(2n)")

    def __getitem__(self, y_index: int) -> CycInt:
        return self.values[y_index]

    def __repr__(self) -> str:
        return "WalshSpectrum(p=%d, n=%d, %s)" % (self.ctx.p, self.ctx.n, self.provenance)


def walsh_naive(f: PFunction) -> WalshSpectrum:
    """Direct evaluation of the defining double loop."""
    ctx = f.ctx
    ctx.ensure_tables()
    p, q, order = ctx.p, ctx.q, ctx.order
    exp_t, vals = ctx.exp_table, f.values
    troe = ctx._trace_of_exp
    out = [None] * q
    counts0 = [0] * p
    for v in vals:
        counts0[v] += 1
    out[0] = CycInt.from_exponent_counts(p, counts0)
    fexp = [vals[exp_t[m]] for m in range(order)]
    f0 = vals[0]
    for my in range(order):
        counts = [0] * p
        counts[f0] += 1
        for m in range(order):
            counts[(fexp[m] - troe[(m + my) % order]) % p] += 1
        out[exp_t[my]] = CycInt.from_exponent_counts(p, counts)
    return WalshSpectrum(ctx, out, "naive")


def single_walsh_value(f: PFunction, y_index: int) -> CycInt:
    """W_f(y) for one point, without materializing the whole spectrum."""
    ctx = f.ctx
    ctx.ensure_tables()
    p = ctx.p
    counts = [0] * p
    vals = f.values
    counts[vals[0]] += 1
    if y_index == 0:
        for idx in range(1, ctx.q):
            counts[vals[idx]] += 1
    else:
        exp_t, log_t, troe = ctx.exp_table, ctx.log_table, ctx._trace_of_exp
        my = log_t[y_index]
        order = ctx.order
        for m in range(order):
            counts[(vals[exp_t[m]] - troe[(m + my) % order]) % p] += 1
    return CycInt.from_exponent_counts(p, counts)


_DUAL_CACHE: dict = {}


def _dual_basis(ctx: FieldCtx) -> list[tuple[int, ...]]:
    """Coefficient vectors of the trace-dual basis of {1, alpha, ...}."""
    n = ctx.n
    powers = [ctx.one().coeffs]
    alpha = ctx.from_index(ctx.p) if n >= 2 else ctx.one()
    for _ in range(2 * n - 2):
        powers.append(ctx.mul_t(powers[-1], alpha.coeffs))
    gram = [[ctx.trace_coeffs(powers[i + j]) for j in range(n)] for i in range(n)]
    inv = mat_inverse(gram, ctx.p)
    return [tuple(row) for row in inv]


def _dual_data(ctx: FieldCtx):
    """Cached (dual basis, index permutation) per field realization."""
    key = (ctx.p, ctx.n, ctx.modulus)
    if key not in _DUAL_CACHE:
        dual = _dual_basis(ctx)
        _DUAL_CACHE[key] = (dual, _dual_index_permutation(ctx, dual))
    return _DUAL_CACHE[key]


def _passes_p3(vals: list[tuple[int, int]], n: int, sign: int) -> list[tuple[int, int]]:
    """n size-3 DFT passes with kernel w^(sign*u*v); values are (a, b) = a + b*w."""
    q = 3 ** n
    out = list(vals)
    for axis in range(n):
        stride = 3 ** axis
        block = stride * 3
        for base in range(0, q, block):
            for i0 in range(base, base + stride):
                i1 = i0 + stride
                i2 = i1 + stride
                x0, y0 = out[i0]
                x1, y1 = out[i1]
                x2, y2 = out[i2]
                # w*(a,b) = (-b, a-b); w^2*(a,b) = (b-a, -a)
                s_x = x0 + x1 + x2
                s_y = y0 + y1 + y2
                a1 = (x0 + y1 - x1 - y2, y0 - x1 + x2 - y2)  # x0 + w^2 x1 + w x2
                a2 = (x0 - y1 + y2 - x2, y0 + x1 - y1 - x2)  # x0 + w x1 + w^2 x2
                if sign < 0:
                    out[i0], out[i1], out[i2] = (s_x, s_y), a1, a2
                else:
                    out[i0], out[i1], out[i2] = (s_x, s_y), a2, a1
    return out


def _passes_generic(vals, p: int, n: int, sign: int):
    q = p ** n
    out = list(vals)
    width = p - 1
    for axis in range(n):
        stride = p ** axis
        block = stride * p
        for base in range(0, q, block):
            for off in range(base, base + stride):
                idxs = [off + t * stride for t in range(p)]
                col = [out[i] for i in idxs]
                for t_i, i in enumerate(idxs):
                    acc = [0] * width
                    for s_i in range(p):
                        m = (sign * s_i * t_i) % p
                        cv = col[s_i]
                        for c_i in range(width):
                            c = cv[c_i]
                            if c:
                                e = (c_i + m) % p
                                if e == p - 1:
                                    for l in range(width):
                                        acc[l] -= c
                                else:
                                    acc[e] += c
                    out[i] = tuple(acc)
    return out


def _dual_index_permutation(ctx: FieldCtx, dual: list[tuple[int, ...]]) -> list[int]:
    """perm[v] = index of sum_j v_j beta_j, iterated odometer-style."""
    p, n, q = ctx.p, ctx.n, ctx.q
    perm = [0] * q
    cur = [0] * n
    pw = ctx._powers_of_p
    cur_idx = 0
    vdig = [0] * n
    for v in range(q - 1):
        perm[v] = cur_idx
        d = 0
        while vdig[d] == p - 1:
            vdig[d] = 0
            for i in range(n):
                b = dual[d][i]
                if b:
                    old = cur[i]
                    new = (old + b) % p
                    cur[i] = new
                    cur_idx += (new - old) * pw[i]
            d += 1
        vdig[d] += 1
        for i in range(n):
            b = dual[d][i]
            if b:
                old = cur[i]
                new = (old + b) % p
                cur[i] = new
                cur_idx += (new - old) * pw[i]
    perm[q - 1] = cur_idx
    return perm


def walsh_fast(f: PFunction) -> WalshSpectrum:
    """Tensor-decomposed transform; exact same values as walsh_naive."""
    ctx = f.ctx
    p, n, q = ctx.p, ctx.n, ctx.q
    dual, perm = _dual_data(ctx)
    if p == 3:
        table = ((1, 0), (0, 1), (-1, -1))  # w^0, w^1, w^2 as (a, b)
        vals = [table[v] for v in f.values]
        flat = _passes_p3(vals, n, -1)
    else:
        omegas = [CycInt.omega_pow(p, j).coords for j in range(p)]
        vals = [omegas[v] for v in f.values]
        flat = _passes_generic(vals, p, n, -1)
    out = [None] * q
    for v in range(q):
        out[perm[v]] = CycInt(p, flat[v])
    return WalshSpectrum(ctx, out, "fast")


def inverse_walsh(s: WalshSpectrum) -> PFunction:
    """Recover f from its spectrum; errors if s is not a function spectrum."""
    ctx = s.ctx
    p, n, q = ctx.p, ctx.n, ctx.q
    dual, perm = _dual_data(ctx)
    on_v = [None] * q
    for v in range(q):
        on_v[v] = s.values[perm[v]].coords
    if p == 3:
        flat = _passes_p3([(c[0], c[1]) for c in on_v], n, 1)
    else:
        flat = _passes_generic(on_v, p, n, 1)
    vals = [0] * q
    for x in range(q):
        val = CycInt(p, flat[x])
        rec = None
        for j in range(p):
            if val == CycInt.omega_pow(p, j) * q:
                rec = j
                break
        if rec is None:
            raise PreconditionError(
                "inverse transform does not yield p^n * (root of unity) at index %d" % x)
        vals[x] = rec
    return PFunction(ctx, vals)


def is_bent(s: WalshSpectrum) -> bool:
    """|W_f(y)|^2 = p^n, exactly, for every y."""
    target = CycInt.integer(s.ctx.p, s.ctx.q)
    return all(v.norm_sq() == target for v in s.values)


class BentCertificate:
    """Per-point decomposition W(y) = sign(y) * unit * p^(n/2) * w^(dual(y)).

    unit_kind is 'real' (unit = 1) or 'imaginary' (unit = i, realized through
    the Gauss sum); reconstruct() rebuilds the exact spectrum values.
    """

    __slots__ = ("ctx", "dual", "signs", "unit_kind")

    def __init__(self, ctx: FieldCtx, dual: PFunction, signs: list[int], unit_kind: str) -> None:
        self.ctx = ctx
        self.dual = dual
        self.signs = signs
        self.unit_kind = unit_kind

    def reconstruct(self, y_index: int) -> CycInt:
        ctx = self.ctx
        p, n = ctx.p, ctx.n
        j = self.dual.values[y_index]
        s = self.signs[y_index]
        if n % 2 == 0:
            return CycInt.omega_pow(p, j) * (s * p ** (n // 2))
        return gauss_sum(p) * CycInt.omega_pow(p, j) * (s * p ** ((n - 1) // 2))

    def sign_histogram(self) -> dict[str, int]:
        plus = sum(1 for s in self.signs if s > 0)
        return {"plus": plus, "minus": len(self.signs) - plus}

    def is_constant_sign(self) -> bool:
        return len(set(self.signs)) == 1


def extract_certificate(s: WalshSpectrum) -> BentCertificate:
    """Decompose a bent spectrum into (dual, signs, unit kind)."""
    ctx = s.ctx
    if not is_bent(s):
        raise PreconditionError("extract_certificate requires a bent spectrum")
    duals = [0] * ctx.q
    signs = [0] * ctx.q
    for y, v in enumerate(s.values):
        rec = recognize_unit_times_power(v, ctx.p, ctx.n)
        if rec is None:
            raise InternalInconsistency(
                "bent coefficient without unit*power form at index %d" % y)
        signs[y], duals[y] = rec
    return BentCertificate(ctx, PFunction(ctx, duals), signs, unit_class(ctx.p, ctx.n))


class Classification:
    """One of not_bent, regular, weakly_regular (with its sign), or
    non_weakly_regular (with the dual-bent flag)."""

    __slots__ = ("variant", "sign", "dual_bent")

    def __init__(self, variant: str, sign: int | None = None,
                 dual_bent: bool | None = None) -> None:
        self.variant = variant
        self.sign = sign
        self.dual_bent = dual_bent

    @property
    def bent(self) -> bool:
        return self.variant != NOT_BENT

    def __eq__(self, other) -> bool:
        return (isinstance(other, Classification) and self.variant == other.variant
                and self.sign == other.sign and self.dual_bent == other.dual_bent)

    def __repr__(self) -> str:
        extra = ""
        if self.variant == WEAKLY_REGULAR:
            extra = "(sign=%+d)" % self.sign
        elif self.variant == NON_WEAKLY_REGULAR:
            extra = "(dual_bent=%s)" % self.dual_bent
        return "Classification(%s%s)" % (self.variant, extra)

    def to_json(self) -> dict:
        out = {"variant": self.variant}
        if self.sign is not None:
            out["sign"] = self.sign
        if self.dual_bent is not None:
            out["dual_bent"] = self.dual_bent
        return out


def classify(f: PFunction, spectrum: WalshSpectrum | None = None) -> Classification:
    """Spectral classification; non-bent input is a result, not an error."""
    s = spectrum if spectrum is not None else walsh_fast(f)
    if not is_bent(s):
        return Classification(NOT_BENT)
    cert = extract_certificate(s)
    if cert.is_constant_sign():
        sign = cert.signs[0]
        if sign == 1 and cert.unit_kind == "real":
            return Classification(REGULAR, sign=1, dual_bent=True)
        return Classification(WEAKLY_REGULAR, sign=sign, dual_bent=True)
    dual_ok = is_bent(walsh_fast(cert.dual))
    return Classification(NON_WEAKLY_REGULAR, dual_bent=dual_ok)


def dual_iteration_check(f: PFunction) -> dict:
    """For weakly regular bent f, follow the dual four steps around:
    f** = f(-x), f*** = f*(-x), f**** = f."""
    s = walsh_fast(f)
    if not is_bent(s):
        raise PreconditionError("dual iteration requires a bent function")
    c0 = extract_certificate(s)
    if not c0.is_constant_sign():
        raise PreconditionError("dual iteration requires a weakly regular function")
    fs = [f, c0.dual]
    for _ in range(3):
        s_i = walsh_fast(fs[-1])
        if not is_bent(s_i):
            raise PreconditionError("an iterated dual stopped being bent")
        fs.append(extract_certificate(s_i).dual)
    report = {
        "dual_dual_is_reflection": fs[2] == f.reflect(),
        "third_dual_is_reflected_dual": fs[3] == fs[1].reflect(),
        "fourth_dual_closes_cycle": fs[4] == f,
    }
    report["passed"] = all(report.values())
    return report


def bent_via_derivatives(f: PFunction) -> bool:
    """Balance of every nonzero-direction derivative (perfect nonlinearity)."""
    ctx = f.ctx
    return all(f.derivative(ctx.from_index(a)).is_balanced() for a in range(1, ctx.q))


def _all_shift_tables(ctx: FieldCtx) -> list[list[int]]:
    return [ctx.shift_table(a) for a in range(ctx.q)]


def second_derivative_triple_sum(f: PFunction) -> CycInt:
    """sum over c, d, x of w^(D_{c,d} f(x)), exactly."""
    ctx = f.ctx
    p, q = ctx.p, ctx.q
    vals = f.values
    perms = _all_shift_tables(ctx)
    counts = [0] * p
    for c in range(q):
        pc = perms[c]
        g = [(vals[pc[x]] - vals[x]) % p for x in range(q)]
        for d in range(q):
            pd = perms[d]
            for x in range(q):
                counts[(g[pd[x]] - g[x]) % p] += 1
    return CycInt.from_exponent_counts(p, counts)


def second_derivative_pointwise_sums(f: PFunction) -> list[CycInt]:
    """x -> sum over c, d of w^(D_{c,d} f(x))."""
    ctx = f.ctx
    p, q = ctx.p, ctx.q
    vals = f.values
    perms = _all_shift_tables(ctx)
    per_x = [[0] * p for _ in range(q)]
    for c in range(q):
        pc = perms[c]
        g = [(vals[pc[x]] - vals[x]) % p for x in range(q)]
        for d in range(q):
            pd = perms[d]
            for x in range(q):
                per_x[x][(g[pd[x]] - g[x]) % p] += 1
    return [CycInt.from_exponent_counts(p, row) for row in per_x]


def bent_via_second_derivative_sum(f: PFunction) -> bool:
    """True iff the triple sum equals p^(2n) exactly."""
    ctx = f.ctx
    return second_derivative_triple_sum(f) == CycInt.integer(ctx.p, ctx.q * ctx.q)
