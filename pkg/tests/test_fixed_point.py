from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nonarch.errors import ContractViolation, DomainError, InvalidParameter, NonConvergence, PreconditionError
from nonarch.fixed_point import (identity_defect, identity_holds, inverse, invert_isometry,
                                 iterate_contraction, proposition_v)
from nonarch.maps import IDENTITY, Affine, Compose, Cube, HenselPerturb, Q2Inversion, Translation
from nonarch.padic import equal_to_precision, from_rational
from nonarch.spaces import FiniteModel, QpVector, RationalLine, TrivialLine
from nonarch.valuation import NormValue

Q3 = QpVector(3, 16)


def scalar_map(fn):
    return lambda x: tuple(fn(c) for c in x)


def test_linear_contraction_to_zero():
    res = iterate_contraction(scalar_map(lambda c: 3 * c), Q3, Q3.point(1), 12)
    assert Q3.norm(res.v) <= NormValue(3, -12)
    exps = [-r.exp for r in res.residuals]
    assert exps == list(range(len(exps)))
    assert res.residual <= NormValue(3, -12)


def test_affine_contraction_closed_form():
    res = iterate_contraction(scalar_map(lambda c: 3 * c + 1), Q3, Q3.point(0), 14)
    # fixed point of a*x + c is c / (1 - a)
    assert equal_to_precision(res.v[0], from_rational(Fraction(-1, 2), 3, 16), 14)


def test_identity_rejected():
    with pytest.raises(ContractViolation) as exc:
        iterate_contraction(lambda x: x, Q3, Q3.point(2), 10)
    assert exc.value.pair is not None


def test_expanding_step_rejected():
    # contractive near 0 in the probe direction, but the orbit grows
    calls = iter([Q3.point(0), Q3.point(Fraction(1, 3))])
    with pytest.raises(ContractViolation):
        iterate_contraction(lambda x: next(calls, Q3.point(0)), Q3, Q3.point(0), 10)


def test_max_iter_exceeded():
    with pytest.raises(NonConvergence):
        iterate_contraction(scalar_map(lambda c: 3 * c), Q3, Q3.point(1), 12, max_iter=5)


def test_precision_exhausted():
    c = from_rational(1, 3, 4)  # known only modulo 3^4
    with pytest.raises(NonConvergence):
        iterate_contraction(scalar_map(lambda x: 3 * x + c), Q3, Q3.point(0), 10)


def test_exact_constants_keep_precision():
    q = QpVector(3, 4)
    res = iterate_contraction(scalar_map(lambda x: 3 * x + 1), q, q.point(0), 10)
    assert equal_to_precision(res.v[0], from_rational(Fraction(-1, 2), 3, 12), 10)


def test_needs_padic_space():
    with pytest.raises(InvalidParameter):
        iterate_contraction(lambda x: x, TrivialLine(), Fraction(0), 3)


def test_geometric_rate_bound():
    for c in (1, 2, Fraction(1, 5)):
        res = iterate_contraction(scalar_map(lambda x, c=c: 3 * x + c), Q3, Q3.point(7), 12)
        first = -res.residuals[0].exp
        assert res.iterations <= 12 - first + 1


HENSEL = HenselPerturb(3, (0, 0, 1))


def test_invert_hensel_round_trip():
    y = Q3.point(14)
    res = invert_isometry(HENSEL, Q3, y)
    assert res.verified
    assert equal_to_precision(res.v[0], from_rational(2, 3, 16), 16)


def test_invert_zero_perturbation_one_step():
    res = invert_isometry(HenselPerturb(3, (0,)), Q3, Q3.point(11))
    assert res.iterations == 1 and Q3.equal(res.v, Q3.point(11))


def test_hensel_bijective_on_model():
    m = FiniteModel(3, 4)
    image = {HENSEL.apply(m, x) for x in m.elements()}
    assert len(image) == 81
    for y in m.elements():
        x = invert_isometry(HENSEL, m, y).v
        assert HENSEL.apply(m, x) == y


def test_invert_rejects_outside_integer_ball():
    with pytest.raises(DomainError):
        invert_isometry(HENSEL, Q3, Q3.point(Fraction(1, 3)))


@settings(max_examples=30)
@given(st.integers(-10**6, 10**6), st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_invert_random_hensel(x, coeffs):
    f = HenselPerturb(3, tuple(coeffs))
    y = f.apply(Q3, Q3.point(x))
    res = invert_isometry(f, Q3, y)
    assert res.verified
    assert equal_to_precision(res.v[0], Q3.point(x)[0], 14)


def test_inverse_closed_forms():
    r = RationalLine(3)
    assert inverse(Affine(Fraction(2, 3), 1), r, Fraction(5)) == 6
    assert inverse(Translation(4), r, Fraction(1)) == -3
    assert inverse(Q2Inversion(), RationalLine(2), Fraction(1, 3)) == 3
    assert inverse(Cube(), TrivialLine(), Fraction(-8, 27)) == Fraction(-2, 3)
    f = Compose((Affine(2, 0), Translation(1)))
    assert inverse(f, r, f.apply(r, Fraction(7))) == 7
    with pytest.raises(DomainError):
        inverse(Cube(), TrivialLine(), Fraction(2))
    with pytest.raises(DomainError):
        inverse(Affine(3, 0), FiniteModel(3, 2), 1)


def closed_form_v(f, u, k):
    """Solve f(u) + f(v) = f((u+v)/k) for affine f(x) = a*x + c."""
    a, c = (Fraction(1), f.b) if isinstance(f, Translation) else (f.a, f.b)
    return -u - c * k / (a * (k - 1))


MATRIX = [IDENTITY, Translation(5), Affine(-1, 2), Affine(4, Fraction(1, 2))]


@pytest.mark.parametrize("f", MATRIX, ids=str)
@pytest.mark.parametrize("u", [0, 1, 5, Fraction(2, 7)])
def test_proposition_matches_closed_form(f, u):
    res = proposition_v(f, Q3, u, 3)
    assert res.verified and res.starts_agreed
    assert equal_to_precision(res.v[0], from_rational(closed_form_v(f, Fraction(u), 3), 3, 16), 12)


def test_proposition_exact_on_rationals():
    r = RationalLine(3)
    res = proposition_v(Affine(4, 1), r, Fraction(1), 9)
    assert res.verified
    assert r.dist(res.v, closed_form_v(Affine(4, 1), Fraction(1), 9)) <= NormValue(3, -12)


def test_proposition_hensel():
    res = proposition_v(HENSEL, Q3, 1, 3)
    assert res.verified and res.starts_agreed
    assert res.iterations <= 20 and res.residual <= NormValue(3, -12)
    assert identity_holds(HENSEL, Q3, Q3.point(1), res.v, 3, 12)


@pytest.mark.parametrize("f", MATRIX + [HENSEL], ids=str)
def test_perturbation_breaks_identity(f):
    u = Q3.point(1)
    v = proposition_v(f, Q3, u, 3).v
    for e_exp in range(0, 11):
        e = Q3.point(Fraction(3) ** e_exp)
        defect = identity_defect(f, Q3, u, Q3.add(v, e), 3)
        assert not Q3.norm_bound(defect) <= NormValue(3, -12)


@pytest.mark.parametrize("f", [Translation(1), HENSEL], ids=str)
def test_uniqueness_across_starts(f):
    results = [proposition_v(f, Q3, 2, 3, starts=[s]).v for s in (0, 1, -4, Fraction(1, 2), 3**7)]
    for v in results[1:]:
        assert Q3.dist(v, results[0]) <= NormValue(3, -12)


def test_proposition_vector_space():
    q = QpVector(5, 16, 2)
    res = proposition_v(Affine(2, 1), q, [1, 3], 5)
    assert res.verified and res.starts_agreed


def test_proposition_preconditions():
    with pytest.raises(PreconditionError):
        proposition_v(IDENTITY, TrivialLine(), 1, 3)
    with pytest.raises(PreconditionError):
        proposition_v(IDENTITY, Q3, 1, 2)
    with pytest.raises(InvalidParameter):
        proposition_v(IDENTITY, FiniteModel(3, 4), 1, 3)
    with pytest.raises(InvalidParameter):
        proposition_v(IDENTITY, Q3, 1, 0)
