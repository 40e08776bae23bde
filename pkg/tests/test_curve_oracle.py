from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ramcalc.artin_schreier import ASCharacter, Classification, classify
from ramcalc.conductor import swan, total_dim
from ramcalc.curve_oracle import (
    CurveError,
    CurveSpec,
    OneDimChar,
    TruncationError,
    curve_ratios,
    dimtot_1d,
    oracle_conductor,
    restrict_to_curve,
    swan_1d,
)
from ramcalc.field import FieldElem, elem_parse, make_field
from ramcalc.finite_field import fq_make

K = make_field(3)
F3 = K.fq


def curve(mu, *coeffs, fq=F3, **kw):
    return CurveSpec(mu, tuple(coeffs), fq, **kw)


def brute_restrict(f, c, mu):
    """Expand (sum c_j s^j)^alpha by repeated polynomial multiplication (alpha >= 0 only)."""
    fq = F3
    out = {}
    for al, be, code in f.items():
        poly = {0: 1}
        for _ in range(al):
            nxt = {}
            for i, x in poly.items():
                for j, y in enumerate(c):
                    if y:
                        nxt[i + j] = fq.add(nxt.get(i + j, 0), fq.mul(x, y))
            poly = nxt
        for i, x in poly.items():
            k = i + mu * be
            if k <= 0 and x:
                out[k] = fq.add(out.get(k, 0), fq.mul(code, x))
    return {k: v for k, v in out.items() if v}


def test_restriction_examples():
    f = elem_parse("x/y^9", K)
    assert restrict_to_curve(f, curve(1, 0, 1)).terms == {-8: 1}
    assert restrict_to_curve(f, curve(3, 0, 1)).terms == {-26: 1}
    assert restrict_to_curve(elem_parse("w^-2", K), curve(1, 2, 1)).terms == {-2: 1}


def test_one_dim_examples():
    assert (swan_1d(OneDimChar(F3, {-8: 1})), dimtot_1d(OneDimChar(F3, {-8: 1}))) == (8, 9)
    assert (swan_1d(OneDimChar(F3, {-9: 1})), dimtot_1d(OneDimChar(F3, {-9: 1}))) == (1, 2)
    assert (swan_1d(OneDimChar(F3, {})), dimtot_1d(OneDimChar(F3, {}))) == (0, 0)


def test_one_dim_reduction_cancels():
    # s^-9 + 2 s^-3 ~ s^-3 + 2 s^-3 = 0, leaving only s^-1
    assert swan_1d(OneDimChar(F3, {-9: 1, -3: 2, -1: 1})) == 1


def test_negative_powers_need_a_unit():
    f = elem_parse("x^-1/y", K)
    with pytest.raises(CurveError):
        restrict_to_curve(f, curve(1, 0, 1))
    g = restrict_to_curve(f, curve(1, 1, 1))
    # (1 + s)^-1 s^-1 = s^-1 - 1 + ...
    assert g.terms == {-1: 1, 0: 2}


def test_truncation_limit():
    with pytest.raises(TruncationError):
        restrict_to_curve(elem_parse("x/y^9", K), curve(3, 1, 1, truncation=10))


@given(
    st.lists(st.tuples(st.integers(1, 2), st.integers(0, 5), st.integers(-12, 1)), max_size=3),
    st.lists(st.integers(0, 2), min_size=1, max_size=4),
    st.integers(1, 3),
)
def test_restriction_matches_brute_expansion(items, coeffs, mu):
    f = FieldElem.from_terms(K, items)
    assert restrict_to_curve(f, curve(mu, *coeffs)).terms == brute_restrict(f, coeffs, mu)


def test_oracle_examples():
    res = oracle_conductor(elem_parse("x/y^9", K), mu_max=3, deg_max=2)
    assert res.dt_est == 9 and res.dt_witness.curve.mu == 1
    assert res.dt_witness.to_json()["ratio"] == "9/1"
    assert res.sw_est == Fraction(26, 3) and res.sw_ceiling == 9
    res = oracle_conductor(elem_parse("w^-2", K), mu_max=3, deg_max=2)
    assert (res.sw_est, res.dt_est) == (2, 3)


def test_constant_field_extension_is_needed():
    # u - u^3 vanishes on every F_3-point, so the leading level is invisible over F_3
    f = FieldElem.from_terms(K, [(1, 1, -1), (2, 3, -1)])
    c = ASCharacter.of(f)
    assert (swan(c), total_dim(c)) == (1, 2)
    small = oracle_conductor(f, mu_max=3, deg_max=3, ext_max=1)
    big = oracle_conductor(f, mu_max=3, deg_max=3, ext_max=2)
    assert small.dt_ceiling < 2
    assert (big.sw_ceiling, big.dt_ceiling) == (1, 2)
    assert big.dt_witness.curve.fq == fq_make(3, 2)


def test_determinism():
    f = elem_parse("x^2/y^7 + 2*x^-1/y^4", K)
    a = oracle_conductor(f, mu_max=3, deg_max=2, trials=20, seed=7)
    b = oracle_conductor(f, mu_max=3, deg_max=2, trials=20, seed=7)
    assert a.to_json() == b.to_json()


@pytest.mark.parametrize("seed", range(4))
def test_ratios_never_exceed_symbolic(seed):
    import random

    from ramcalc.corpus import random_ramified

    rng = random.Random(seed)
    for _ in range(5):
        c = random_ramified(rng, K, max_pole=15)
        sw, dt = swan(c), total_dim(c)
        for _, sw_ratio, dt_ratio in curve_ratios(c.f, mu_max=3, deg_max=2):
            assert sw_ratio <= sw and dt_ratio <= dt


@pytest.mark.parametrize("p", [3, 5])
def test_oracle_agrees_on_monomials(p):
    field = make_field(p)
    for alpha in (-2, 1, 2, p):
        for m in range(1, 2 * p + 2):
            c = ASCharacter.of(field.monomial(1, alpha, -m))
            if classify(c) is not Classification.RAMIFIED:
                continue
            res = oracle_conductor(c.f, mu_max=2, deg_max=1, ext_max=1)
            assert (res.sw_ceiling, res.dt_ceiling) == (swan(c), total_dim(c))
