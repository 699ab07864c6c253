import random

import pytest

from pbent.constructions import TrinomialParams, lemma2_witness, trinomial_bent
from pbent.derivanalysis import (_first_witness_low_degree, _first_witness_scan,
                                 cubic_like_certificate, derivative_linear_space,
                                 quad_like_implication_check,
                                 quadratic_balance_witness, wr_identity_check)
from pbent.errors import PreconditionError
from pbent.funcrep import ANF, PFunction, TraceForm, anf_to_truth, p_weight
from pbent.gf import get_field
from pbent.walsh import is_bent, walsh_fast

F3 = get_field(3, 1)
F9 = get_field(3, 2)
F27 = get_field(3, 3)
F81 = get_field(3, 4)


def quad(ctx):
    return TraceForm(ctx, [(ctx.one(), 2)]).truth_table()


def random_low_degree(ctx, rng, max_weight=3):
    coeffs = [rng.randrange(3) if p_weight(i, 3) <= max_weight else 0
              for i in range(ctx.q)]
    return anf_to_truth(ANF(ctx, coeffs))


def test_cubic_like_quadratic_bent_complete():
    cert = cubic_like_certificate(quad(F81))
    assert cert.complete
    assert len(cert.witnesses) == 80
    f = quad(F81)
    for a_idx, (b_idx, const) in list(cert.witnesses.items())[:10]:
        dd = f.second_derivative(F81.from_index(a_idx), F81.from_index(b_idx))
        assert dd.values == [const] * 81 and const != 0


def test_cubic_like_zero_function_incomplete():
    cert = cubic_like_certificate(PFunction.zero(F81))
    assert not cert.complete
    assert cert.witnesses == {}


def test_cubic_like_trinomial_complete():
    f = trinomial_bent(TrinomialParams(1, 2, 1)).truth_table()
    cert = cubic_like_certificate(f)
    assert cert.complete


def test_witness_paths_agree():
    # the radical shortcut must return the same first witness as the scan
    rng = random.Random(31)
    for _ in range(12):
        f = random_low_degree(F27, rng)
        for a_idx in (1, 5, 13):
            assert _first_witness_low_degree(f, a_idx) == _first_witness_scan(f, a_idx)


def test_certificate_complete_iff_bent_low_degree():
    rng = random.Random(32)
    for _ in range(40):
        f = random_low_degree(F27, rng)
        assert cubic_like_certificate(f).complete == is_bent(walsh_fast(f))


def test_derivative_linear_space():
    lin = TraceForm(F9, [(F9.gen_power(3), 1)]).truth_table()
    assert len(derivative_linear_space(lin)) == 9
    assert len(derivative_linear_space(quad(F9))) == 1  # only zero
    rng = random.Random(33)
    for _ in range(20):
        f = random_low_degree(F27, rng, max_weight=2)
        space = derivative_linear_space(f)
        idxs = {a.index for a in space}
        assert len(idxs) in (1, 3, 9, 27)
        for a in list(space)[:5]:
            for b in list(space)[:5]:
                assert (a + b).index in idxs
                assert a.scale(2).index in idxs


def test_quadratic_balance_witness():
    unbal = PFunction(F3, [0, 1, 1])
    assert quadratic_balance_witness(unbal) is None
    lin = TraceForm(F9, [(F9.one(), 1)]).truth_table()
    w = quadratic_balance_witness(lin)
    assert w is not None and F9.trace(F9.one() * w) != 0
    rng = random.Random(34)
    deep = random_low_degree(F27, rng, max_weight=4)
    while deep.algebraic_degree() <= 2:
        deep = random_low_degree(F27, rng, max_weight=4)
    with pytest.raises(PreconditionError):
        quadratic_balance_witness(deep)


def test_balance_witness_biconditional_exhaustive():
    monomials = [0, 1, 3, 2, 6, 4]  # 1, x1, x2, x1^2, x2^2, x1x2
    for code in range(3 ** 6):
        digs = []
        m = code
        for _ in range(6):
            m, r = divmod(m, 3)
            digs.append(r)
        coeffs = [0] * 9
        for mono, c in zip(monomials, digs):
            coeffs[mono] = c
        f = anf_to_truth(ANF(F9, coeffs))
        assert (quadratic_balance_witness(f) is not None) == f.is_balanced()


def test_wr_identity_sound_on_weakly_regular():
    for f in (quad(F9), quad(F81),
              TraceForm(F81, [(F81.one(), 34), (F81.one(), 2)]).truth_table()):
        rep = wr_identity_check(f)
        assert rep.sound_clean, rep.violations_by_check()


def test_wr_identity_spike_asymmetry_is_recorded():
    # quadratic derivative transforms are one-point spikes at b = 2c, which
    # breaks the symmetry and vanishing checks; pin that reality
    rep = wr_identity_check(quad(F81))
    kinds = rep.violations_by_check()
    assert kinds.get("symmetry_in_b", 0) > 0
    assert kinds.get("vanishing_on_nonzero_trace", 0) > 0
    assert kinds.get("dual_phase_identity", 0) == 0


def test_wr_identity_trinomial_violations():
    params = TrinomialParams(1, 2, 1)
    f = trinomial_bent(params).truth_table()
    rep = wr_identity_check(f)
    assert rep.exhaustive
    assert not rep.sound_clean
    assert len(rep.violations) > 0


def test_wr_identity_requires_bent():
    with pytest.raises(PreconditionError):
        wr_identity_check(PFunction.zero(F9))


def test_trinomial_derivative_spike_location():
    # for c in F_3^*, W_{D_c f} is a single spike of magnitude 3^n at
    # e = b c^(3^j) + b^(3^-j) c^(3^-j), which is nonzero
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    f = trinomial_bent(params, ctx).truth_table()
    b = params.b_coefficient(ctx)
    for c_val in (1, 2):
        c = ctx.scalar(c_val)
        e = b * ctx.power(c, 9) + ctx.frobenius(b, -2) * ctx.frobenius(c, -2)
        assert not e.is_zero()
        spec = walsh_fast(f.derivative(c))
        for y in range(81):
            if y == e.index:
                assert spec.values[y].norm_sq().as_int() == 81 ** 2
            else:
                assert spec.values[y].is_zero()
        # the spike sits away from its mirror image: the symmetry check fails
        assert spec.values[ctx.neg_index(e.index)] != spec.values[e.index]


def test_quad_like_implication():
    params = TrinomialParams(1, 2, 1)
    ctx = params.context()
    f = trinomial_bent(params, ctx).truth_table()
    c = ctx.scalar(1)
    d = lemma2_witness(c, params, ctx)
    assert quad_like_implication_check(f, c, d)

    g = quad(F9)
    # find (c, d) with constant nonzero second derivative
    found = False
    for c_idx in range(1, 9):
        for d_idx in range(1, 9):
            dd = g.second_derivative(F9.from_index(c_idx), F9.from_index(d_idx))
            if dd.values[0] != 0 and len(set(dd.values)) == 1:
                assert quad_like_implication_check(
                    g, F9.from_index(c_idx), F9.from_index(d_idx))
                found = True
                break
        if found:
            break
    assert found

    with pytest.raises(PreconditionError):
        quad_like_implication_check(g, F9.zero(), F9.zero())
