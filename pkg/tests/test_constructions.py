import random

import pytest

from pbent.constructions import (ConcatenationFamily, TrinomialParams,
                                 add_quadratic, bent_concatenation,
                                 construction1_k1,
                                 linearized_second_derivative_coeff,
                                 lemma2_witness, mm_special_form,
                                 nonvanishing_quadratic_search,
                                 quadratic_part_function, trinomial_bent,
                                 trinomial_closed_form_walsh, trinomial_dual,
                                 trinomial_dual_degree,
                                 trinomial_first_derivative_form)
from pbent.cyclo import CycInt, recognize_unit_times_power
from pbent.errors import PreconditionError
from pbent.funcrep import ANF, PFunction, TraceForm, anf_to_truth
from pbent.gf import get_field
from pbent.walsh import (classify, extract_certificate, is_bent, walsh_fast,
                         walsh_naive, NON_WEAKLY_REGULAR, REGULAR,
                         WEAKLY_REGULAR)

F3 = get_field(3, 1)
F9 = get_field(3, 2)


def quad(ctx):
    return TraceForm(ctx, [(ctx.one(), 2)]).truth_table()


# -- trinomial family -------------------------------------------------------------


def test_params_validation():
    TrinomialParams(1, 0, 1)
    TrinomialParams(1, 2, 3)
    TrinomialParams(2, 1, 1)
    with pytest.raises(PreconditionError):
        TrinomialParams(1, 1, 1)   # j must be even for odd k
    with pytest.raises(PreconditionError):
        TrinomialParams(2, 2, 1)   # j must be odd for even k
    with pytest.raises(PreconditionError):
        TrinomialParams(1, 2, 2)   # t must be odd
    with pytest.raises(PreconditionError):
        TrinomialParams(1, 4, 1)   # j out of [0, 4k)
    with pytest.raises(PreconditionError):
        TrinomialParams(0, 0, 1)


def test_b_coefficient_relations():
    for k, j, t in ((1, 0, 1), (1, 2, 1), (1, 2, 3), (2, 1, 1), (2, 3, 1)):
        params = TrinomialParams(k, j, t)
        ctx = params.context()
        b = params.b_coefficient(ctx)
        assert ctx.frobenius(b, k) == -b
        assert ctx.rel_trace(b, k).is_zero()
        zeta = params.zeta(ctx)
        assert ctx.in_subfield(zeta, 2 * k)
        assert ctx.power(zeta, 3 ** (2 * k) - 1) == ctx.one()


def test_trinomial_k1_term_structure():
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    tf = trinomial_bent(params, ctx)
    zeta_sq = ctx.power(params.zeta(ctx), 2)
    assert tf.terms == ((ctx.one(), 5), (ctx.scalar(-1), 7), (zeta_sq, 10))


def test_trinomial_instances_cubic_bent_nwr():
    for k, j, t in ((1, 0, 1), (1, 2, 1), (1, 0, 3), (2, 1, 1)):
        params = TrinomialParams(k, j, t)
        f = trinomial_bent(params).truth_table()
        assert f.algebraic_degree() == 3
        cls = classify(f)
        assert cls.variant == NON_WEAKLY_REGULAR, (k, j, t, cls)


def test_trinomial_k2_second_derivative_route():
    # both certification routes agree on the n = 8 member
    from pbent.derivanalysis import cubic_like_certificate
    f = trinomial_bent(TrinomialParams(2, 1, 1)).truth_table()
    assert cubic_like_certificate(f).complete


def test_lemma2_witness_subfield_cases():
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    b = params.b_coefficient(ctx)
    # every c in F_9^* has a witness inside F_9^*
    for c_idx in ctx.subfield_indexes(2):
        if c_idx == 0:
            continue
        c = ctx.from_index(c_idx)
        d = lemma2_witness(c, params, ctx)
        z = b * ctx.power(c, 9) + ctx.frobenius(b, -2) * ctx.frobenius(c, -2)
        assert ctx.trace(z * d) != 0
        assert ctx.in_subfield(d, 2)
    with pytest.raises(PreconditionError):
        lemma2_witness(ctx.zero(), params, ctx)
    # a direction outside the covered cases: c not in F_9 with Tr_k^n(bc) = 0
    l = next(ctx.from_index(i) for i in range(81)
             if not ctx.in_subfield(ctx.from_index(i), 2))
    c_out = b.inverse() * (l - ctx.frobenius(l, 1))
    assert ctx.rel_trace(b * c_out, 1).is_zero()
    with pytest.raises(PreconditionError):
        lemma2_witness(c_out, params, ctx)


def test_lemma2_witness_full_field_case():
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    b = params.b_coefficient(ctx)
    count = 0
    for c_idx in range(1, 81):
        c = ctx.from_index(c_idx)
        if ctx.in_subfield(c, 2) or ctx.rel_trace(b * c, 1).is_zero():
            continue
        d = lemma2_witness(c, params, ctx)
        z = b * ctx.power(c, 9) + ctx.frobenius(b, -2) * ctx.frobenius(c, -2)
        assert ctx.trace(z * d) != 0
        count += 1
    assert count > 0


def test_first_derivative_form():
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    f = trinomial_bent(params, ctx).truth_table()
    assert trinomial_first_derivative_form(params, ctx.zero(), ctx).terms == ()
    rng = random.Random(41)
    for _ in range(8):
        c = ctx.from_index(rng.randrange(81))
        sym = trinomial_first_derivative_form(params, c, ctx).truth_table()
        assert sym == f.derivative(c)
    # for c in the prime field the derivative collapses to an affine form
    b = params.b_coefficient(ctx)
    for c_val in (1, 2):
        c = ctx.scalar(c_val)
        lin_coeff = b * ctx.power(c, 9) + ctx.frobenius(b, -2) * ctx.frobenius(c, -2)
        collapsed = TraceForm(ctx, [(b * ctx.power(c, 10), 0), (lin_coeff, 1)])
        assert collapsed.truth_table() == f.derivative(c)


def test_second_derivative_structure_for_zero_trace_directions():
    # directions c = b^-1 (l - l^(3^k)) with l outside F_9: the linearized
    # coefficient vanishes on F_3 + F_3 * (l^(3^3k) + l), and the constant
    # value follows the K formula
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    k, j = 1, 2
    f = trinomial_bent(params, ctx).truth_table()
    b = params.b_coefficient(ctx)
    rng = random.Random(42)
    tested = 0
    while tested < 6:
        l = ctx.from_index(rng.randrange(81))
        if ctx.in_subfield(l, 2):
            continue
        tested += 1
        c = b.inverse() * (l - ctx.frobenius(l, k))
        r = ctx.frobenius(l, 3 * k) + l
        assert linearized_second_derivative_coeff(params, ctx, c, r).is_zero()
        for s_val in (1, 2):
            d = r.scale(s_val)
            dd = f.second_derivative(c, d)
            kk = ((ctx.frobenius(c, 2 * k) - c) ** (3 ** k + 1)
                  + b * ctx.power(c, 3 ** j)
                  + ctx.frobenius(b, -j) * ctx.frobenius(c, -j)) * r
            want = (ctx.subfield_abs_trace(ctx.rel_trace(kk, k), k) * s_val) % 3
            assert dd.values == [want] * 81


def test_closed_form_parameter_restrictions():
    ctx = TrinomialParams(1, 2, 1).context()
    y = ctx.one()
    with pytest.raises(PreconditionError):
        trinomial_closed_form_walsh(TrinomialParams(2, 1, 1), y)
    with pytest.raises(PreconditionError):
        trinomial_closed_form_walsh(TrinomialParams(1, 2, 3), y, ctx)
    with pytest.raises(PreconditionError):
        trinomial_dual_degree(TrinomialParams(1, 2, 3))


def test_closed_form_matches_spectrum():
    for j in (0, 2):
        params = TrinomialParams(1, j, 1)
        ctx = params.context()
        f = trinomial_bent(params, ctx).truth_table()
        spec = walsh_naive(f)
        for idx in range(81):
            got = trinomial_closed_form_walsh(params, ctx.from_index(idx), ctx)
            assert got == spec.values[ctx.neg_index(idx)], (j, idx)


def test_trinomial_dual_degree_k1():
    params = TrinomialParams(1, 2, 1)
    f = trinomial_bent(params).truth_table()
    assert f.algebraic_degree() == 3
    assert trinomial_dual_degree(params) == 4


def test_special_form_decomposition_k1():
    # in coordinates (x0, x1, x2, x3') with x3' = -b a^20 (x1 + x2 - x3),
    # the function splits as G(x1, x2, x3') + x0 * x3'
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    f = trinomial_bent(params, ctx).truth_table()
    a = ctx.primitive
    b = params.b_coefficient(ctx)
    ba20 = b * ctx.power(a, 20)
    inv = ba20.inverse()
    pows = [ctx.one(), a, a * a, a * a * a]
    for x1v in range(3):
        for x2v in range(3):
            for x3pv in range(3):
                x1 = ctx.scalar(x1v)
                x2 = ctx.scalar(x2v)
                x3p = ctx.scalar(x3pv)
                x3 = x1 + x2 + inv * x3p
                seen = set()
                for x0v in range(3):
                    x = (pows[3] * x3 + pows[2] * x2 + pows[1] * x1
                         + ctx.scalar(x0v))
                    val = (f.values[x.index] - x0v * x3pv) % 3
                    seen.add(val)
                assert len(seen) == 1  # independent of x0


# -- concatenation constructions ---------------------------------------------------


def _product_pairing_walsh(f, inner_ctx, outer_ctx, s_idx, t_idx):
    """Direct W(s, t) under the pairing Tr_in(xs) + Tr_out(yt)."""
    counts = [0] * 3
    qi = inner_ctx.q
    s = inner_ctx.from_index(s_idx)
    t = outer_ctx.from_index(t_idx)
    for y in range(outer_ctx.q):
        tr_y = outer_ctx.trace(outer_ctx.from_index(y) * t)
        for x in range(qi):
            tr_x = inner_ctx.trace(inner_ctx.from_index(x) * s)
            counts[(f.values[y * qi + x] - tr_x - tr_y) % 3] += 1
    return CycInt.from_exponent_counts(3, counts)


def test_mm_special_form_bent_and_dual():
    g = PFunction(F3, [0, 1, 1])
    for pi in ([0, 1, 2], [1, 0, 2], [2, 1, 0]):
        f, rep = mm_special_form([g, g, g], pi, F3, 1)
        assert rep["bent"]
        assert is_bent(walsh_fast(f))
        assert rep["slices_dual_bent"]
        dual = rep["dual"]
        # oracle: W(s, t1, t2) under the pairing Tr(xs) + y1 t1 + y2 t2
        for s_idx in range(3):
            for t1 in range(3):
                for t2 in range(3):
                    counts = [0] * 3
                    for y2 in range(3):
                        for y1 in range(3):
                            for x in range(3):
                                tr = (F3.trace(F3.from_index(x) * F3.from_index(s_idx))
                                      + y1 * t1 + y2 * t2)
                                counts[(f.values[(y2 * 3 + y1) * 3 + x] - tr) % 3] += 1
                    w = CycInt.from_exponent_counts(3, counts)
                    rec = recognize_unit_times_power(w, 3, 3)
                    assert rec is not None
                    combined_idx = s_idx + 3 * (t1 + 3 * t2)
                    assert rec[1] == dual.values[combined_idx]


def test_mm_special_form_validation():
    g = PFunction(F3, [0, 1, 1])
    with pytest.raises(PreconditionError):
        mm_special_form([g, g, g], [0, 1, 1], F3, 1)  # not a permutation
    with pytest.raises(PreconditionError):
        mm_special_form([g, g], [0, 1, 2], F3, 1)     # wrong slice count
    lin = PFunction(F3, [0, 1, 2])
    with pytest.raises(PreconditionError):
        mm_special_form([g, lin, g], [0, 1, 2], F3, 1)  # non-bent slice


def test_construction1_matches_special_form_and_sign_mixing():
    g_plus = quad(F9)
    f_uniform, _ = construction1_k1([g_plus] * 3, F9)
    f_mm, _ = mm_special_form([g_plus] * 3, [0, 1, 2], F9, 1)
    assert f_uniform == f_mm
    assert classify(f_uniform).variant in (REGULAR, WEAKLY_REGULAR)

    # flip one slice's sign: quadratic with a nonsquare coefficient
    signs = {}
    for m in range(1, 9):
        gm = TraceForm(F9, [(F9.gen_power(m), 2)]).truth_table()
        signs[m] = extract_certificate(walsh_fast(gm)).signs[0]
    flip = next(m for m, s in signs.items()
                if s != extract_certificate(walsh_fast(g_plus)).signs[0])
    g_minus = TraceForm(F9, [(F9.gen_power(flip), 2)]).truth_table()
    f_mixed, _ = construction1_k1([g_plus, g_plus, g_minus], F9)
    assert classify(f_mixed).variant == NON_WEAKLY_REGULAR


def test_bent_concatenation_valid_family():
    # slices f_y(x) = x^2 + y x on F_3 share the unit and concatenate bent
    inner, outer = F3, F3
    slices = []
    for y in range(3):
        vals = [(x * x + y * x) % 3 for x in range(3)]
        slices.append(PFunction(inner, vals))
    f, rep = bent_concatenation(ConcatenationFamily(inner, outer, slices))
    assert rep["applicable"] and rep["bent"]
    assert is_bent(walsh_fast(f))
    dual = rep["dual"]
    for s_idx in range(3):
        for t_idx in range(3):
            w = _product_pairing_walsh(f, inner, outer, s_idx, t_idx)
            rec = recognize_unit_times_power(w, 3, 2)
            assert rec is not None and rec[1] == dual.values[t_idx * 3 + s_idx]


def test_bent_concatenation_identical_slices_not_bent():
    # f(x, y) = g(x) ignores y: sections of the dual are constant, not bent
    g = PFunction(F3, [0, 1, 1])
    f, rep = bent_concatenation(ConcatenationFamily(F3, get_field(3, 2), [g] * 9))
    assert rep["applicable"]
    assert rep["bent"] is False
    assert not is_bent(walsh_fast(f))


def test_bent_concatenation_error_and_inapplicable():
    g = PFunction(F3, [0, 1, 1])
    lin = PFunction(F3, [0, 1, 2])
    with pytest.raises(PreconditionError):
        bent_concatenation(ConcatenationFamily(F3, F3, [g, g, lin]))
    # units depending on y: mix opposite-sign quadratic slices on F_9
    g_plus = quad(F9)
    m = next(m for m in range(1, 9)
             if extract_certificate(walsh_fast(
                 TraceForm(F9, [(F9.gen_power(m), 2)]).truth_table())).signs[0]
             != extract_certificate(walsh_fast(g_plus)).signs[0])
    g_minus = TraceForm(F9, [(F9.gen_power(m), 2)]).truth_table()
    f, rep = bent_concatenation(ConcatenationFamily(F9, F3, [g_plus, g_plus, g_minus]))
    assert not rep["applicable"]
    assert "bent" not in rep


# -- quadratic addition -------------------------------------------------------------


def test_add_quadratic_zero_q():
    f = quad(F9)
    g, rep = add_quadratic(f, [F9.zero(), F9.zero()])
    assert g == f and rep["condition_holds"] and rep["spectrally_bent"]


def test_add_quadratic_n1_example():
    f = PFunction(F3, [0, 1, 1])
    g, rep = add_quadratic(f, [F3.one()])
    assert rep["condition_holds"] and rep["spectrally_bent"]
    assert g.values == [0, 2, 2]


def test_add_quadratic_requires_weakly_regular():
    trinom = trinomial_bent(TrinomialParams(1, 2, 1)).truth_table()
    ctx = trinom.ctx
    with pytest.raises(PreconditionError):
        add_quadratic(trinom, [ctx.zero()] * 4)


def test_add_quadratic_condition_is_not_sufficient_in_general():
    # q = 2x^2 never vanishes on F_3^*, yet f + q collapses to zero: the
    # stated sufficient condition has genuine false positives
    f = PFunction(F3, [0, 1, 1])
    g, rep = add_quadratic(f, [F3.scalar(2)])
    assert rep["condition_holds"] is True
    assert rep["spectrally_bent"] is False
    assert g.values == [0, 0, 0]


def test_nonvanishing_quadratic_search():
    r1 = nonvanishing_quadratic_search(3, 1)
    assert r1 is not None
    q1 = quadratic_part_function(F3, r1)
    assert all(q1.values[c] != 0 for c in range(1, 3))

    r2 = nonvanishing_quadratic_search(3, 2)
    assert r2 is not None
    q2 = quadratic_part_function(F9, r2)
    assert all(q2.values[c] != 0 for c in range(1, 9))

    assert nonvanishing_quadratic_search(3, 3) is None
    assert nonvanishing_quadratic_search(3, 5) is None


def test_paper_style_diagonal_forms_are_nonvanishing():
    # x1^2 on F_3 and x1^2 + x2^2 on F_9, built via their ANF
    anf1 = ANF(F3, [0, 0, 1])
    q1 = anf_to_truth(anf1)
    assert all(q1.values[c] != 0 for c in range(1, 3))
    coeffs = [0] * 9
    coeffs[2] = 1   # x1^2
    coeffs[6] = 1   # x2^2
    q2 = anf_to_truth(ANF(F9, coeffs))
    assert all(q2.values[c] != 0 for c in range(1, 9))
