"""Seeded invariant batteries, runnable from the CLI (property-suite) and
reused by the test suite.  Each check returns (passed, detail); quick level
trims sample sizes, full level runs the documented counts.
"""

from __future__ import annotations

import random

from .catalog import list_catalog, verify_entry
from .constructions import (TrinomialParams, mm_special_form, trinomial_bent,
                            trinomial_closed_form_walsh)
from .cyclo import CycInt, gauss_sum, recognize_unit_times_power
from .derivanalysis import (cubic_like_certificate,
                            quadratic_balance_witness, wr_identity_check)
from .funcrep import (ANF, PFunction, TraceForm, anf_to_truth, p_weight,
                      to_relative_trace_form, truth_to_anf,
                      truth_to_univariate, eval_univariate)
from .gf import get_field
from .walsh import (bent_via_derivatives, bent_via_second_derivative_sum,
                    classify, extract_certificate, is_bent, walsh_fast,
                    walsh_naive)


def _random_function(ctx, rng):
    return PFunction(ctx, [rng.randrange(ctx.p) for _ in range(ctx.q)])


def check_parseval(seed, level):
    rng = random.Random(seed)
    sizes = [(3, 3), (3, 4)] if level == "quick" else [(3, 3), (3, 4), (3, 6)]
    trials = 5 if level == "quick" else 20
    for p, n in sizes:
        ctx = get_field(p, n)
        for _ in range(trials):
            walsh_fast(_random_function(ctx, rng))  # Parseval checked at construction
    return True, "spectra constructed with exact Parseval"


def check_fast_equals_naive(seed, level):
    rng = random.Random(seed)
    ctx = get_field(3, 3)
    trials = 30 if level == "quick" else 200
    for i in range(trials):
        f = _random_function(ctx, rng)
        if walsh_naive(f).values != walsh_fast(f).values:
            return False, "disagreement at trial %d" % i
    return True, "%d random functions agree" % trials


def check_balance_via_character_sum(seed, level):
    rng = random.Random(seed)
    ctx4 = get_field(3, 4)
    for _ in range(40):
        f = _random_function(ctx4, rng)
        w0 = walsh_fast(f).values[0]
        if f.is_balanced() != w0.is_zero():
            return False, "balance mismatch"
    return True, "balance iff W(0)=0 on samples"


def check_derivative_identities(seed, level):
    rng = random.Random(seed)
    ctx = get_field(3, 3)
    trials = 10 if level == "quick" else 50
    for _ in range(trials):
        f = _random_function(ctx, rng)
        a = ctx.from_index(rng.randrange(ctx.q))
        b = ctx.from_index(rng.randrange(ctx.q))
        da = f.derivative(a)
        dab = f.second_derivative(a, b)
        # D_a f(x+b) = D_a f(x) + D_{a,b} f(x)
        if da.translate(b) != da + dab:
            return False, "chain rule failed"
        if dab != f.second_derivative(b, a):
            return False, "second derivative not symmetric"
        if not f.algebraic_degree() == 0:
            if da.algebraic_degree() > max(f.algebraic_degree() - 1, 0):
                return False, "derivative did not drop degree"
    return True, "%d random (f, a, b) triples" % trials


def check_representation_roundtrips(seed, level):
    rng = random.Random(seed)
    ctx = get_field(3, 3)
    trials = 5 if level == "quick" else 25
    for _ in range(trials):
        f = _random_function(ctx, rng)
        coeffs = truth_to_univariate(f)
        if eval_univariate(ctx, coeffs) != f:
            return False, "univariate round trip failed"
        if to_relative_trace_form(f).truth_table() != f:
            return False, "relative trace form round trip failed"
        if anf_to_truth(truth_to_anf(f)) != f:
            return False, "ANF round trip failed"
    return True, "univariate, relative-trace and ANF round trips"


def check_field_invariants(seed, level):
    rng = random.Random(seed)
    ctx = get_field(3, 4)
    for x in ctx.elements():
        for k in (1, 2, 4):
            t = ctx.rel_trace(x, k)
            if ctx.frobenius(t, k) != t:
                return False, "trace left its subfield"
    big = get_field(3, 8)
    for _ in range(10 if level == "quick" else 60):
        x = big.from_index(rng.randrange(big.q))
        for k in (2, 4):
            if big.trace(x) != big.subfield_abs_trace(big.rel_trace(x, k), k):
                return False, "trace transitivity failed"
        y = big.from_index(rng.randrange(big.q))
        e = rng.randrange(8)
        if big.frobenius(x * y, e) != big.frobenius(x, e) * big.frobenius(y, e):
            return False, "frobenius not multiplicative"
    return True, "subfield membership, transitivity, automorphism"


def check_cyclotomic_ring(seed, level):
    rng = random.Random(seed)
    for p in (3, 5, 7):
        g = gauss_sum(p)
        if g * g.conj() != CycInt.integer(p, p):
            return False, "gauss norm failed p=%d" % p
        want = CycInt.integer(p, p if p % 4 == 1 else -p)
        if g * g != want:
            return False, "gauss square failed p=%d" % p
        for _ in range(20):
            x = CycInt(p, [rng.randrange(-9, 10) for _ in range(p - 1)])
            y = CycInt(p, [rng.randrange(-9, 10) for _ in range(p - 1)])
            if x.conj().conj() != x or (x * y) != (y * x):
                return False, "ring identities failed"
        for n in (1, 2, 3, 4):
            for j in range(p):
                for sign in (1, -1):
                    if n % 2 == 0:
                        v = CycInt.omega_pow(p, j) * (sign * p ** (n // 2))
                    else:
                        v = gauss_sum(p) * CycInt.omega_pow(p, j) * (sign * p ** ((n - 1) // 2))
                    if recognize_unit_times_power(v, p, n) != (sign, j):
                        return False, "recognition round trip failed"
    return True, "conjugation, gauss sums, recognition round trips"


def check_criteria_agreement(seed, level):
    rng = random.Random(seed)
    ctx = get_field(3, 2)
    trials = 40 if level == "quick" else 200
    for _ in range(trials):
        f = _random_function(ctx, rng)
        spectral = is_bent(walsh_fast(f))
        if spectral != bent_via_derivatives(f):
            return False, "derivative criterion disagrees"
        if spectral != bent_via_second_derivative_sum(f):
            return False, "second-derivative sum criterion disagrees"
    return True, "%d random functions, three criteria agree" % trials


def check_cubic_like(seed, level):
    rng = random.Random(seed)
    ctx = get_field(3, 3)
    trials = 30 if level == "quick" else 200
    for _ in range(trials):
        coeffs = [0] * ctx.q
        for i in range(ctx.q):
            if p_weight(i, 3) <= 3:
                coeffs[i] = rng.randrange(3)
        f = anf_to_truth(ANF(ctx, coeffs))
        if f.algebraic_degree() > 3:
            return False, "generator produced degree > 3"
        cert = cubic_like_certificate(f)
        if cert.complete != is_bent(walsh_fast(f)):
            return False, "cubic-like certificate disagrees with spectrum"
    return True, "certificate completeness iff bent on %d low-degree functions" % trials


def check_quadratic_balance(seed, level):
    ctx = get_field(3, 2)
    monomials = [0, 1, 3, 2, 6, 4]  # 1, x1, x2, x1^2, x2^2, x1x2
    count = 0
    for code in range(3 ** 6):
        digs = []
        m = code
        for _ in range(6):
            m, r = divmod(m, 3)
            digs.append(r)
        coeffs = [0] * 9
        for mono, c in zip(monomials, digs):
            coeffs[mono] = c
        f = anf_to_truth(ANF(ctx, coeffs))
        witness = quadratic_balance_witness(f)
        if f.is_balanced() != (witness is not None):
            return False, "biconditional failed at pattern %d" % code
        count += 1
    return True, "exhaustive over %d quadratic patterns" % count


def check_classification_ea_invariance(seed, level):
    rng = random.Random(seed)
    ctx = get_field(3, 4)
    params = TrinomialParams(1, 2, 1)
    tctx = params.context()
    funcs = [(ctx, TraceForm(ctx, [(ctx.one(), 2)]).truth_table()),
             (tctx, trinomial_bent(params, tctx).truth_table())]
    for fctx, f in funcs:
        want = classify(f).variant
        for _ in range(3 if level == "quick" else 10):
            c = fctx.from_index(rng.randrange(fctx.q))
            const = rng.randrange(3)
            lin = TraceForm(fctx, [(c, 1)], const).truth_table()
            if classify(f + lin).variant != want:
                return False, "affine addition changed the classification"
    return True, "classification invariant under affine additions"


def check_wr_sound_identity(seed, level):
    ctx = get_field(3, 4)
    quad = TraceForm(ctx, [(ctx.one(), 2)]).truth_table()
    rep = wr_identity_check(quad)
    if not rep.sound_clean:
        return False, "dual-phase identity violated for a weakly regular function"
    f = trinomial_bent(TrinomialParams(1, 2, 1)).truth_table()
    rep2 = wr_identity_check(f)
    if rep2.sound_clean:
        return False, "trinomial produced no sound violations"
    return True, "dual-phase identity clean on weakly regular, violated on trinomial"


def check_trinomial_family(seed, level):
    cases = [(1, 0, 1), (1, 2, 1)] if level == "quick" else [(1, 0, 1), (1, 2, 1), (1, 0, 3), (2, 1, 1)]
    for k, j, t in cases:
        params = TrinomialParams(k, j, t)
        f = trinomial_bent(params).truth_table()
        if f.algebraic_degree() != 3:
            return False, "degree != 3 at %s" % (params,)
        cls = classify(f)
        if cls.variant != "non_weakly_regular":
            return False, "classification %s at %s" % (cls, params)
    return True, "%d instances all cubic and non-weakly regular" % len(cases)


def check_closed_forms(seed, level):
    for j in (0, 2):
        params = TrinomialParams(1, j, 1)
        ctx = params.context()
        f = trinomial_bent(params, ctx).truth_table()
        spec = walsh_naive(f)
        for idx in range(ctx.q):
            got = trinomial_closed_form_walsh(params, ctx.from_index(idx), ctx)
            if got != spec.values[ctx.neg_index(idx)]:
                return False, "closed form mismatch at j=%d idx=%d" % (j, idx)
    return True, "all 81 points for j in {0, 2}"


def check_catalog(seed, level):
    for entry in list_catalog():
        res = verify_entry(entry, search=False)
        if res["status"] == "mismatch":
            return False, "catalog entry %s mismatched" % entry.label
    return True, "all catalog entries verify under their pinned realization"


def check_mm_form(seed, level):
    import itertools
    ctx1 = get_field(3, 1)
    g = PFunction(ctx1, [0, 1, 1])
    h = PFunction(ctx1, [0, 2, 2])
    count = 0
    for pi in itertools.permutations(range(3)):
        for slices in ((g, g, g), (g, h, g)):
            f, rep = mm_special_form(list(slices), list(pi), ctx1, 1)
            if not is_bent(walsh_fast(f)):
                return False, "special form output not bent for pi=%s" % (pi,)
            count += 1
    return True, "special-form outputs bent for all %d slice/permutation combos" % count


def check_dual_balance(seed, level):
    ctx = get_field(3, 4)
    f = TraceForm(ctx, [(ctx.one(), 2)]).truth_table()
    dual = extract_certificate(walsh_fast(f)).dual
    for b in range(1, ctx.q):
        if not dual.derivative(ctx.from_index(b)).is_balanced():
            return False, "dual derivative unbalanced at %d" % b
    return True, "dual derivatives balanced in all 80 nonzero directions"


ALL_CHECKS = [
    ("parseval", check_parseval),
    ("fast_equals_naive", check_fast_equals_naive),
    ("balance_character_sum", check_balance_via_character_sum),
    ("derivative_identities", check_derivative_identities),
    ("representation_roundtrips", check_representation_roundtrips),
    ("field_invariants", check_field_invariants),
    ("cyclotomic_ring", check_cyclotomic_ring),
    ("criteria_agreement", check_criteria_agreement),
    ("cubic_like_certificates", check_cubic_like),
    ("quadratic_balance_biconditional", check_quadratic_balance),
    ("classification_ea_invariance", check_classification_ea_invariance),
    ("wr_sound_identity", check_wr_sound_identity),
    ("trinomial_family", check_trinomial_family),
    ("trinomial_closed_forms", check_closed_forms),
    ("catalog", check_catalog),
    ("mm_special_form", check_mm_form),
    ("dual_derivative_balance", check_dual_balance),
]


def run_suite(seed: int = 0, level: str = "quick", names=None) -> list[dict]:
    """Run the batteries; returns one record per check."""
    out = []
    for name, fn in ALL_CHECKS:
        if names and name not in names:
            continue
        try:
            passed, detail = fn(seed, level)
        except Exception as exc:  # a crash is a failure with its message
            passed, detail = False, "%s: %s" % (type(exc).__name__, exc)
        out.append({"name": name, "passed": passed, "detail": detail})
    return out
