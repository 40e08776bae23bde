import pytest
from hypothesis import given

from ramcalc.artin_schreier import ASCharacter, Classification, classify
from ramcalc.conductor import (
    GuardError,
    NotRamifiedError,
    cc_coefficients,
    char_form,
    conductor_report,
    refined_swan,
    swan,
    total_dim,
)
from ramcalc.curve_oracle import CurveSpec, dimtot_1d, restrict_to_curve
from ramcalc.differentials import LOG, ORDINARY, DifferentialForm
from ramcalc.field import elem_parse, frobenius_power, make_field

from conftest import field_and_elements

K = make_field(3)
K10 = make_field(3, 1, 0)
K01 = make_field(3, 0, 1)


def char(text, field=K):
    return ASCharacter.of(elem_parse(text, field))


def test_swan_examples():
    assert swan(char("x/y^9")) == 9
    assert swan(char("u/w^3", K10)) == 3
    assert swan(char("0")) == 0


def test_total_dim_examples():
    assert total_dim(char("x/y^9")) == 9
    assert total_dim(char("u/w^9", K01)) == 9
    assert total_dim(char("w^-2")) == 3
    assert total_dim(char("1")) == 0


def test_char_form_examples():
    cf = char_form(char("x/y^9"))
    assert cf.level == 9
    assert cf.form == DifferentialForm(K, ORDINARY, elem_parse("-y^-9", K), K.zero())
    cf = char_form(char("x/y"))
    assert cf.level == 2 and cf.form == DifferentialForm(K, ORDINARY, K.zero(), elem_parse("x*y^-2", K))
    cf = char_form(char("w^-2"))
    assert cf.level == 3 and cf.form == DifferentialForm(K, ORDINARY, K.zero(), elem_parse("2*w^-3", K))
    with pytest.raises(NotRamifiedError):
        char_form(char("1"))


def test_refined_swan_examples():
    r = refined_swan(char("x/y^9"))
    assert r.level == 9 and r.form == DifferentialForm(K, LOG, elem_parse("y^-9", K), K.zero())
    r = refined_swan(char("w^-2"))
    assert r.level == 2 and r.form == DifferentialForm(K, LOG, K.zero(), elem_parse("w^-2", K))
    r = refined_swan(char("u/w^3", K10))
    assert r.level == 3 and r.form == DifferentialForm(K10, LOG, elem_parse("w^-3", K10), K10.zero())


def test_cc_examples():
    cc = cc_coefficients(char("x/y^9"))
    assert (cc.zero_section_coeff, cc.divisor_coeff, cc.direction) == (-1, -9, "du")
    cc = cc_coefficients(char("u/w^3", K10))
    assert (cc.zero_section_coeff, cc.divisor_coeff, cc.direction) == (-1, -3, "du")
    cc = cc_coefficients(char("x/y"))
    assert (cc.divisor_coeff, cc.direction) == (-2, "dw")


def test_report_json():
    assert conductor_report(char("x/y^9")).to_json() == {
        "swan": 9,
        "dimtot": 9,
        "classification": "ramified",
        "char_form": {"basis": "ordinary", "du": "2/w^9", "d2": "0", "level": 9},
        "rsw": {"basis": "log", "du": "1/w^9", "d2": "0", "level": 9},
        "cc": {"divisor_coeff": -9, "direction": "du"},
    }
    rep = conductor_report(char("2")).to_json()
    assert (rep["swan"], rep["dimtot"], rep["classification"], rep["char_form"]) == (0, 0, "unramified_nontrivial", None)


def test_guard_trips_on_out_of_model_input():
    # an unreduced character flagged as reduced: the pole of df is far below sw
    bogus = ASCharacter(K, elem_parse("y^-9", K), reduced=True, witness=K.zero())
    with pytest.raises(GuardError):
        total_dim(bogus)


@pytest.mark.parametrize("p", [3, 5])
def test_monomial_law_by_enumeration(p):
    field = make_field(p)
    for alpha in range(-p, 2 * p + 1):
        for m in range(1, 3 * p + 1):
            c = ASCharacter.of(field.monomial(1, alpha, -m))
            if c.f != field.monomial(1, alpha, -m):
                continue  # not reduced
            expected = m + 1 if m % p else m
            assert total_dim(c) == expected


def test_perfect_residue_degeneration():
    for m in range(1, 40):
        for coeff in (1, 2):
            f = K.monomial(coeff, 0, -m) + K.monomial(1, 0, -1)
            c = ASCharacter.of(f)
            if classify(c) is not Classification.RAMIFIED:
                continue
            one_dim = restrict_to_curve(c.f, CurveSpec(1, (1,), K.fq))
            assert total_dim(c) == swan(c) + 1 == dimtot_1d(one_dim)


@given(field_and_elements())
def test_guard_and_char_form(data):
    _, f = data
    c = ASCharacter.of(f)
    sw, dt = swan(c), total_dim(c)
    if classify(c) is Classification.RAMIFIED:
        assert sw >= 1 and sw <= dt <= sw + 1
        cf = char_form(c)
        assert cf.level == dt and not cf.is_zero()
        assert cc_coefficients(c).divisor_coeff == -dt
    else:
        assert sw == dt == 0


@given(field_and_elements(count=2))
def test_conductors_are_class_invariants(data):
    _, f, g = data
    a = ASCharacter.of(f)
    b = ASCharacter.of(f + frobenius_power(g, 1) - g)
    assert (swan(a), total_dim(a)) == (swan(b), total_dim(b))
    if classify(a) is Classification.RAMIFIED:
        assert char_form(a) == char_form(b)
