from itertools import combinations

import pytest

from nonarch.balls import (Ball, BallRelation, ball_relation, balls, chain_intersection,
                           relation_by_distance, relation_by_members)
from nonarch.errors import IncompatibleOperands, InvalidParameter
from nonarch.spaces import FiniteModel, QpVector, RationalLine, TrivialLine
from nonarch.valuation import NormValue

M = FiniteModel(3, 3)


def r(e):
    return NormValue(3, -e)


def test_recentred_ball_equal():
    assert ball_relation(Ball(M, 0, r(1)), Ball(M, 3, r(1))) is BallRelation.EQUAL


def test_relation_kinds():
    assert ball_relation(Ball(M, 0, r(2)), Ball(M, 0, r(1))) is BallRelation.FIRST_IN_SECOND
    assert ball_relation(Ball(M, 0, r(1)), Ball(M, 9, r(2))) is BallRelation.SECOND_IN_FIRST
    assert ball_relation(Ball(M, 0, r(1)), Ball(M, 1, r(1))) is BallRelation.DISJOINT


def test_chain_examples():
    chain = [Ball(M, 0, r(0)), Ball(M, 0, r(1)), Ball(M, 0, r(2))]
    assert chain_intersection(chain) == [0, 9, 18]
    single = Ball(M, 4, r(1))
    assert chain_intersection([single]) == sorted(single.members())
    smallest = [Ball(M, 5, r(e)) for e in range(3)] + [Ball(M, 5, NormValue.zero(3))]
    assert chain_intersection(smallest) == [5]


def test_chain_rejects_disjoint_pair():
    with pytest.raises(InvalidParameter, match="balls 0"):
        chain_intersection([Ball(M, 0, r(1)), Ball(M, 1, r(2))])
    with pytest.raises(InvalidParameter):
        chain_intersection([])


def test_radius_must_be_attained():
    with pytest.raises(InvalidParameter):
        Ball(M, 0, r(3))
    with pytest.raises(InvalidParameter):
        Ball(M, 0, NormValue(5, 0))
    with pytest.raises(InvalidParameter):
        Ball(TrivialLine(), TrivialLine().point(0), NormValue("trivial", -1))


def test_mixed_spaces_rejected():
    with pytest.raises(IncompatibleOperands):
        ball_relation(Ball(M, 0, r(1)), Ball(FiniteModel(3, 2), 0, r(1)))


def test_member_count():
    for e in range(3):
        assert len(Ball(M, 7, r(e)).members()) == 3 ** (3 - e)
    assert Ball(M, 7, NormValue.zero(3)).members() == {7}


ALL = balls(M)


def test_dichotomy_exhaustive():
    for b1, b2 in combinations(ALL, 2):
        # relation_by_members raises if two balls meet without nesting
        assert relation_by_members(b1.members(), b2.members()) is relation_by_distance(b1, b2)


def test_every_member_is_a_center():
    for b in ALL:
        members = b.members()
        for z in members:
            assert b.recentered(z).members() == members


def all_chains():
    distinct = {b.members(): b for b in ALL}
    for leaf in M.elements():
        path = [b for b in distinct.values() if leaf in b]
        for size in range(1, len(path) + 1):
            yield from combinations(path, size)


def test_every_chain_intersection_nonempty():
    chains = list(all_chains())
    assert len(chains) == 27 * 15
    for chain in chains:
        common = chain_intersection(chain)
        smallest = min(chain, key=lambda b: len(b.members()))
        assert common == sorted(smallest.members())


def test_analytic_relation_on_infinite_spaces():
    q = QpVector(3, 8)
    a = Ball(q, q.point(0), r(1))
    assert ball_relation(a, Ball(q, q.point(3), r(1))) is BallRelation.EQUAL
    assert ball_relation(a, Ball(q, q.point(1), r(1))) is BallRelation.DISJOINT
    rat = RationalLine(2)
    assert ball_relation(Ball(rat, rat.point(0), NormValue(2, 1)), Ball(rat, rat.point(1), NormValue(2, 0))) is BallRelation.SECOND_IN_FIRST
    t = TrivialLine()
    assert ball_relation(Ball(t, t.point(0), NormValue("trivial", 0)), Ball(t, t.point(5), NormValue.zero("trivial"))) \
        is BallRelation.SECOND_IN_FIRST
