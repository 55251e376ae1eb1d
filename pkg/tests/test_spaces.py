from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from nonarch.errors import IncompatibleOperands, PreconditionError, SizeGuardError
from nonarch.padic import from_rational
from nonarch.spaces import (FiniteModel, QpVector, RationalLine, TrivialLine, check_metric,
                            check_norm_axioms, is_convexity_witness, strict_convexity_witness,
                            value_set_report)
from nonarch.valuation import TRIVIAL, NormValue, abs_p

from conftest import rationals


def brute_witness(p, n):
    """Least (x, y), x < y, straight from the definition with integer valuations."""
    mod = p**n

    def v(a):
        a %= mod
        if a == 0:
            return n
        k = 0
        while a % p == 0:
            a //= p
            k += 1
        return k

    for x in range(mod):
        for y in range(x + 1, mod):
            if v(x) == v(y) == v(x + y):
                return x, y
    return None


def test_scalar_mul_examples():
    for space in (QpVector(3, 8, 2), TrivialLine(), FiniteModel(3, 3), RationalLine(5)):
        x = space.unit_point()
        assert space.norm(space.scalar_mul(0, x)).is_zero
    q = QpVector(3, 8, 2)
    x = q.point([Fraction(2, 9), 5])
    assert q.norm(q.scalar_mul(3, x)) == NormValue(3, -1) * q.norm(x)
    t = TrivialLine()
    assert t.norm(t.scalar_mul(Fraction(-7, 2), Fraction(3))) == t.norm(Fraction(3))


def test_space_norm_examples():
    assert QpVector(2, 16, 2).norm(QpVector(2, 16, 2).zero()).is_zero
    assert QpVector(2, 16, 2).norm(QpVector(2, 16, 2).point([12, Fraction(1, 2)])) == NormValue(2, 1)
    assert FiniteModel(3, 4).norm(9) == NormValue(3, -2)
    assert FiniteModel(3, 4).norm(0).is_zero
    assert TrivialLine().norm(Fraction(5)) == NormValue(TRIVIAL, 0)


def test_incompatible_points_rejected():
    with pytest.raises(IncompatibleOperands):
        FiniteModel(3, 2).add(3, 9)
    with pytest.raises(IncompatibleOperands):
        QpVector(3, 8).add((from_rational(1, 5),), (from_rational(1, 5),))


@pytest.mark.parametrize("space", [FiniteModel(3, 3), FiniteModel(5, 2), FiniteModel(2, 4)])
def test_norm_axioms_exhaustive(space):
    report = check_norm_axioms(space)
    assert report.passed
    assert report.pairs_checked == space.size * (space.size + 1) // 2


def test_norm_axioms_small_and_sampled():
    assert check_norm_axioms(FiniteModel(3, 3), [0]).passed
    rng = random.Random(0)
    q = QpVector(3, 12, 2)
    assert check_norm_axioms(q, [q.random_point(rng) for _ in range(30)],
                             [0, 1, 3, Fraction(1, 3), Fraction(-5, 9)]).passed
    t = TrivialLine()
    assert check_norm_axioms(t, [Fraction(n, 3) for n in range(-5, 6)]).passed


@pytest.mark.parametrize("p, n", [(3, 2), (3, 1), (3, 3), (5, 1), (5, 2), (7, 1), (3, 0)])
def test_witness_matches_brute_force(p, n):
    assert strict_convexity_witness(FiniteModel(p, n)) == brute_witness(p, n)


def test_witness_examples():
    assert strict_convexity_witness(FiniteModel(3, 2)) == (1, 4)
    assert strict_convexity_witness(TrivialLine(), [1, 2]) == (1, 2)
    assert strict_convexity_witness(FiniteModel(3, 0)) is None
    # three residues: 1 + 2 = 0, so no witness
    assert strict_convexity_witness(FiniteModel(3, 1)) is None


def test_witness_rejects_p2():
    with pytest.raises(PreconditionError, match=r"\|2\| = 1"):
        strict_convexity_witness(FiniteModel(2, 3))
    with pytest.raises(PreconditionError):
        strict_convexity_witness(QpVector(2, 8), [1, 3])


def test_qp_witness_exists():
    q = QpVector(3, 10)
    w = strict_convexity_witness(q, [0, 1, 3, 4])
    assert w == (q.point(1), q.point(4))
    assert is_convexity_witness(q, *w)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        strict_convexity_witness(FiniteModel(3, 13))
    with pytest.raises(SizeGuardError):
        check_norm_axioms(QpVector(3, 4))


def test_value_set_examples():
    rep = value_set_report(TrivialLine(), [0, 1, 5])
    assert rep.attained == {NormValue(TRIVIAL, None), NormValue(TRIVIAL, 0)} and rep.matches
    rep = value_set_report(FiniteModel(3, 3))
    assert rep.attained == {NormValue.zero(3), NormValue(3, -2), NormValue(3, -1), NormValue(3, 0)}
    assert rep.matches
    q = QpVector(3, 8)
    assert value_set_report(q, [1, 3]).attained == {NormValue(3, 0), NormValue(3, -1)}


@pytest.mark.parametrize("space", [FiniteModel(3, 2), FiniteModel(3, 3), FiniteModel(2, 3),
                                   FiniteModel(5, 2), FiniteModel(3, 4)])
def test_model_distance_is_ultrametric(space):
    assert check_metric(space).passed


def test_model_ultrametric_pairs_3_to_5():
    space = FiniteModel(3, 5)
    # the distance is translation invariant, so the triangle over triples
    # reduces to ||a + b|| <= max(||a||, ||b||) over pairs
    norms = [space.norm(x) for x in space.elements()]
    for a in space.elements():
        for b in space.elements():
            assert norms[(a + b) % 243] <= max(norms[a], norms[b])
            if norms[a] != norms[b]:
                assert norms[(a + b) % 243] == max(norms[a], norms[b])


@settings(max_examples=60)
@given(st.lists(st.tuples(rationals, rationals), min_size=1, max_size=4))
def test_max_norm_consistency(coords):
    q = QpVector(5, 10, 2)
    for c in coords:
        x = q.point(list(c))
        assert q.norm(x) == max(abs_p(c[0], 5), abs_p(c[1], 5))


@settings(max_examples=40)
@given(st.lists(rationals, min_size=2, max_size=8, unique=True))
def test_witness_soundness_on_samples(sample):
    for space in (RationalLine(3), TrivialLine(), RationalLine(7)):
        w = strict_convexity_witness(space, sample)
        if w is not None:
            x, y = w
            assert x != y
            assert space.norm(x) == space.norm(y) == space.norm(x + y)
