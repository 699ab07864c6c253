import random

import pytest

from pbent.gf import (FieldCtx, FieldError, default_modulus, get_field,
                      parse_field_spec, prime_factors, _CONWAY)

F9 = get_field(3, 2)
F81 = get_field(3, 4)
F81_TRI = get_field(3, 4, (2, 1, 0, 0, 1))  # x^4 + x - 1


def test_construction_rejects_bad_moduli():
    with pytest.raises(FieldError):
        FieldCtx(3, 2, (1, 2, 1))  # (x+1)^2
    with pytest.raises(FieldError):
        FieldCtx(3, 2, (1, 1))  # wrong degree
    with pytest.raises(FieldError):
        FieldCtx(4, 2)  # p not prime


def test_pinned_moduli_are_conway_compatible():
    # root^((p^n-1)/(p^d-1)) must be a root of the pinned degree-d modulus
    for (p, n), mod in _CONWAY.items():
        ctx = get_field(p, n)
        for d in range(1, n):
            if n % d or (p, d) not in _CONWAY:
                continue
            sub = _CONWAY[(p, d)]
            z = ctx.gen_power((p ** n - 1) // (p ** d - 1))
            acc = ctx.zero()
            for coeff in reversed(sub):
                acc = acc * z + ctx.scalar(coeff)
            assert acc.is_zero(), (p, n, d)


def test_mul_identity_exhaustive_f9():
    one = F9.one()
    for x in F9.elements():
        assert x * one == x


def test_primitive_order():
    for ctx in (F9, F81, get_field(5, 2), get_field(7, 2)):
        assert ctx.primitive ** ctx.order == ctx.one()
        for r in prime_factors(ctx.order):
            assert ctx.primitive ** (ctx.order // r) != ctx.one()


def test_trinomial_modulus_root_relation():
    a = F81_TRI.primitive
    assert a ** 4 == F81_TRI.one() - a


def test_inverse_and_division():
    rng = random.Random(1)
    for _ in range(50):
        x = F81.from_index(rng.randrange(1, 81))
        assert x * x.inverse() == F81.one()
    with pytest.raises(ZeroDivisionError):
        F81.zero().inverse()


def test_pow_large_exponents_reduce_mod_group_order():
    rng = random.Random(2)
    for _ in range(20):
        x = F81.from_index(rng.randrange(1, 81))
        e = rng.randrange(10 ** 6)
        assert x ** e == x ** (e % 80)
    assert F81.zero() ** 0 == F81.one()
    assert F81.zero() ** 5 == F81.zero()


def test_rel_trace_of_one():
    assert F81.rel_trace(F81.one(), 1) == F81.scalar(4 % 3)


def test_rel_trace_direct_power_sum_f9():
    z = F9.primitive
    expected = z + z * z * z
    assert F9.rel_trace(z, 1) == expected
    assert not any(expected.coeffs[1:])


def test_rel_trace_lands_in_subfield_exhaustive_f81():
    for x in F81.elements():
        for k in (1, 2):
            t = F81.rel_trace(x, k)
            assert F81.frobenius(t, k) == t
    with pytest.raises(FieldError):
        F81.rel_trace(F81.one(), 3)


def test_trace_transitivity():
    for x in F81.elements():
        assert F81.trace(x) == F81.subfield_abs_trace(F81.rel_trace(x, 2), 2)
    big = get_field(3, 8)
    rng = random.Random(3)
    for _ in range(50):
        x = big.from_index(rng.randrange(big.q))
        for k in (2, 4):
            assert big.trace(x) == big.subfield_abs_trace(big.rel_trace(x, k), k)


def test_frobenius_basics():
    rng = random.Random(4)
    for _ in range(30):
        x = F81.from_index(rng.randrange(81))
        y = F81.from_index(rng.randrange(81))
        e = rng.randrange(8)
        assert F81.frobenius(x, 0) == x
        assert F81.frobenius(x, -1) == F81.frobenius(x, 3)
        assert F81.frobenius(F81.frobenius(x, -1), 1) == x
        assert F81.frobenius(x * y, e) == F81.frobenius(x, e) * F81.frobenius(y, e)


def test_field_axioms_sampled():
    rng = random.Random(5)
    ctx = get_field(5, 2)
    for _ in range(40):
        x = ctx.from_index(rng.randrange(25))
        y = ctx.from_index(rng.randrange(25))
        z = ctx.from_index(rng.randrange(25))
        assert (x + y) * z == x * z + y * z
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)


def test_index_arithmetic_matches_elements():
    rng = random.Random(6)
    for _ in range(40):
        i, j = rng.randrange(81), rng.randrange(81)
        assert F81.add_index(i, j) == (F81.from_index(i) + F81.from_index(j)).index
        assert F81.neg_index(i) == (-F81.from_index(i)).index
    for a in (0, 1, 17, 80):
        perm = F81.shift_table(a)
        for x in (0, 1, 40, 80):
            assert perm[x] == (F81.from_index(x) + F81.from_index(a)).index


def test_subfield_indexes():
    sub = F81.subfield_indexes(2)
    assert len(sub) == 9
    for idx in sub:
        x = F81.from_index(idx)
        assert F81.in_subfield(x, 2)
    assert F81.subfield_indexes(1) == sorted(
        F81.scalar(c).index for c in range(3))


def test_log_tables_roundtrip():
    F81.ensure_tables()
    for x in range(1, 81):
        assert F81.exp_table[F81.log_table[x]] == x


def test_spec_string_roundtrip():
    ctx = parse_field_spec("p=3 n=4 mod=[2,1,0,0,1]")
    assert ctx is F81_TRI
    ctx2 = parse_field_spec(ctx.spec_string())
    assert ctx2 is ctx
    assert parse_field_spec("p=3 n=4") is F81
    with pytest.raises(FieldError):
        parse_field_spec("p=3 m=4")
    # negative coefficients reduce mod p: x^4 + x - 1 again
    ctx3 = parse_field_spec("p=3 n=4 mod=[-1,1,0,0,1]")
    assert ctx3.modulus == (2, 1, 0, 0, 1)


def test_default_modulus_fallback_search_is_primitive():
    # a degree without a pinned entry exercises the deterministic search
    mod = default_modulus(5, 5)
    ctx = FieldCtx(5, 5, mod)
    assert ctx.primitive ** ctx.order == ctx.one()


def test_enumeration_order_is_base_p_digits():
    x = F81.from_index(5)  # 5 = 2 + 1*3
    assert x.coeffs == (2, 1, 0, 0)
    assert F81.to_index((2, 1, 0, 0)) == 5
