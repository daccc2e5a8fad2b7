"""
The unit test module of minimal relations, gamma and Lambda.
"""
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from toricbound.config import build_config
from toricbound.divisor import KaehlerClass, Relation, intersect
from toricbound.errors import ComputationError, ToricError, ValidationError
from toricbound.logger import get_default_logger
from toricbound.relations import (degree_capped_relations, gamma, gamma_by_brute_force,
                                  lambda_discrepancies, lambda_lu, minimal_nonneg_relations,
                                  search_minimal_relations)
from toricbound.solver.algorithmfactory import AlgorithmFactory

from .corpus import (blowup_surface, change_basis, corpus, p1xp2, permute, single_cone,
                     unimodular)

LOG = get_default_logger('UNIT-TEST', 'DEBUG')


def test_minimal_relations(p2_fan, h2_fan, p1xp1_fan, mocker):
    #pylint:disable=missing-docstring

    LOG.info('=== Testing minimal_nonneg_relations start')

    assert minimal_nonneg_relations(p2_fan) == [Relation.of([1, 1, 1])]
    assert minimal_nonneg_relations(h2_fan) == [
        Relation.of([0, 1, 0, 1]), Relation.of([1, 0, 1, 2])
    ]
    assert minimal_nonneg_relations(p1xp1_fan) == [
        Relation.of([0, 0, 1, 1]), Relation.of([1, 1, 0, 0])
    ]

    # The exhaustive algorithm finds (0, 2, 0, 2) as well, which is not minimal
    config = build_config({
        'solver.algorithm.name': 'exhaustive',
        'solver.algorithm.exhaustive.bound': 2
    })
    spy = mocker.spy(AlgorithmFactory, 'make')
    assert minimal_nonneg_relations(h2_fan, config) == minimal_nonneg_relations(h2_fan)
    assert spy.call_count == 2

    for entry in corpus():
        rels = minimal_nonneg_relations(entry.fan)
        assert rels
        for rel in rels:
            assert rel.nonneg and rel.holds(entry.fan)
            assert not any(other != rel and all(a >= b for a, b in zip(rel.a, other.a))
                           for other in rels)

    LOG.info('=== Testing minimal_nonneg_relations end')


def test_gamma(p2_fan, h2_fan):
    #pylint:disable=missing-docstring

    LOG.info('=== Testing gamma start')

    for a, b in ((1, 1), (2, 1), (1, 3), (3, 2)):
        result = gamma(h2_fan, KaehlerClass.of([0, 0, a, b]))
        assert result.value == min(b, a + 2 * b)
        assert result.minimizer == Relation.of([0, 1, 0, 1])
        assert result.attained_by_binary

    result = gamma(p2_fan, KaehlerClass.of([0, 0, '5/2']))
    assert result.value == Fraction(5, 2)
    assert result.minimizer == Relation.of([1, 1, 1])

    # Both P1 factors tie; the lexicographically smallest relation wins
    result = gamma(corpus()[1].fan, KaehlerClass.of([1, 0, 1, 0]))
    assert result.value == 1
    assert result.minimizer == Relation.of([0, 0, 1, 1])

    result = gamma(corpus()[3].fan, KaehlerClass.of([0, 0, 1, 1]))
    assert result.value == 1
    assert result.minimizer == Relation.of([0, 1, 0, 1])

    # Only relations with a coefficient 2 attain the minimum here
    result = gamma(h2_fan, KaehlerClass.of([0, 5, 0, 0]))
    assert result.value == 0
    assert result.minimizer == Relation.of([1, 0, 1, 2])
    assert not result.attained_by_binary

    for entry in corpus():
        assert gamma(entry.fan, entry.kappa).value == entry.gamma
        scaled = entry.kappa.scale(Fraction(7, 3))
        assert gamma(entry.fan, scaled).value == entry.gamma * Fraction(7, 3)

    LOG.info('=== Testing gamma end')


def test_capped_search(h2_fan):
    #pylint:disable=missing-docstring

    LOG.info('=== Testing capped relation search start')

    rels, complete = search_minimal_relations(h2_fan)
    assert complete
    assert rels == minimal_nonneg_relations(h2_fan)

    # Level two only reaches (0, 1, 0, 1), the relation of degree four is missed
    config = build_config({'solver.algorithm.frontier.max-level': 2})
    rels, complete = search_minimal_relations(h2_fan, config)
    assert rels == [Relation.of([0, 1, 0, 1])]
    assert not complete

    kappa = KaehlerClass.of([0, 5, 0, 0])
    assert gamma(h2_fan, kappa).complete
    result = gamma(h2_fan, kappa, config)
    assert not result.complete
    assert result.value == 5
    assert result.value > gamma(h2_fan, kappa).value

    config = build_config({'solver.algorithm.name': 'exhaustive'})
    result = gamma(h2_fan, KaehlerClass.of([0, 0, 1, 1]), config)
    assert result.value == 1
    assert not result.complete

    LOG.info('=== Testing capped relation search end')


def test_gamma_errors(h2_fan):
    #pylint:disable=missing-docstring

    LOG.info('=== Testing gamma errors start')

    with pytest.raises(ValidationError) as err:
        gamma(single_cone(), KaehlerClass.of([1, 1]))
    assert err.value.code == ToricError.Code.NOT_SMOOTH_COMPLETE

    with pytest.raises(ValidationError) as err:
        gamma(h2_fan, KaehlerClass.of([0, 0, 1]))
    assert err.value.code == ToricError.Code.SHAPE_MISMATCH

    with pytest.raises(ValidationError) as err:
        gamma(h2_fan, KaehlerClass.of([-1, 0, 1, 1]))
    assert err.value.code == ToricError.Code.NEGATIVE_KAPPA

    with pytest.raises(ComputationError) as err:
        gamma_by_brute_force(h2_fan, KaehlerClass.of([0, 0, 1, 1]), 0)
    assert err.value.code == ToricError.Code.NO_RELATION

    LOG.info('=== Testing gamma errors end')


def test_lambda(p2_fan, h2_fan, p1xp1_fan):
    #pylint:disable=missing-docstring

    LOG.info('=== Testing lambda_lu start')

    assert lambda_lu(h2_fan, KaehlerClass.of([0, 0, 1, 1])) == 1
    assert lambda_lu(p2_fan, KaehlerClass.of([0, 0, 1])) == 1
    assert lambda_lu(p1xp1_fan, KaehlerClass.of([0, 1, 0, 2])) == 2
    assert lambda_lu(p1xp2(), KaehlerClass.of([0, 1, 0, 0, 2])) == 2

    assert degree_capped_relations(h2_fan) == [Relation.of([0, 1, 0, 1])]
    assert Relation.of([0, 2, 0, 2]) not in degree_capped_relations(h2_fan)
    assert Relation.of([1, 1, 0, 0]) in degree_capped_relations(p1xp1_fan)
    assert Relation.of([2, 2, 0, 0]) not in degree_capped_relations(p1xp1_fan)

    # (1, 0, 1, 2) is minimal but of degree 4 > 3
    assert lambda_discrepancies(h2_fan) == [Relation.of([1, 0, 1, 2])]
    assert lambda_discrepancies(p2_fan) == []

    for entry in corpus():
        assert lambda_lu(entry.fan, entry.kappa) >= gamma(entry.fan, entry.kappa).value

    LOG.info('=== Testing lambda_lu end')


def test_brute_force(h2_fan):
    #pylint:disable=missing-docstring

    LOG.info('=== Testing gamma_by_brute_force start')

    assert gamma_by_brute_force(h2_fan, KaehlerClass.of([0, 0, 1, 1]), 2) == 1
    # The only minimizer has a coefficient 2
    assert gamma_by_brute_force(h2_fan, KaehlerClass.of([0, 1, 0, 0]), 1) == 1
    assert gamma_by_brute_force(h2_fan, KaehlerClass.of([0, 1, 0, 0]), 2) == 0

    for entry in corpus()[:4]:
        assert gamma_by_brute_force(entry.fan, entry.kappa, 2) == entry.gamma

    LOG.info('=== Testing gamma_by_brute_force end')


@settings(max_examples=50, deadline=None)
@given(base=st.sampled_from(['P2', 'P1xP1']),
       steps=st.lists(st.integers(min_value=0, max_value=8), max_size=2),
       data=st.data())
def test_gamma_against_brute_force(base, steps, data):
    #pylint:disable=missing-docstring

    fan = blowup_surface(base, steps)
    kappa = KaehlerClass.of(
        data.draw(st.lists(st.integers(min_value=0, max_value=3),
                           min_size=fan.ray_count,
                           max_size=fan.ray_count),
                  label='kappa'))
    # The box holds every minimal relation, hence a minimizer
    bound = 1 + max(max(rel.a) for rel in minimal_nonneg_relations(fan))

    result = gamma(fan, kappa)
    assert gamma_by_brute_force(fan, kappa, bound) == result.value


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_gamma_invariance(data):
    #pylint:disable=missing-docstring

    entry = data.draw(st.sampled_from(corpus()), label='entry')
    perm = data.draw(st.permutations(range(entry.fan.ray_count)), label='perm')
    fan, kappa = permute(entry.fan, entry.kappa, perm)
    assert gamma(fan, kappa).value == entry.gamma
    assert lambda_lu(fan, kappa) == lambda_lu(entry.fan, entry.kappa)

    # kappa + alpha(m) pairs to the same value with every relation
    shift = data.draw(st.lists(st.integers(min_value=-3, max_value=3),
                               min_size=entry.fan.dim,
                               max_size=entry.fan.dim),
                      label='m')
    shifted = [k + sum(m * e for m, e in zip(shift, ray))
               for k, ray in zip(entry.kappa.kappa, entry.fan.rays)]
    for rel in minimal_nonneg_relations(entry.fan):
        assert intersect(KaehlerClass.of(shifted), rel) == intersect(entry.kappa, rel)


@settings(max_examples=30, deadline=None)
@given(entry=st.sampled_from(corpus()),
       ops=st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2)),
                    max_size=4))
def test_unimodular_invariance(entry, ops):
    #pylint:disable=missing-docstring

    fan = change_basis(entry.fan, unimodular(entry.fan.dim, ops))
    assert minimal_nonneg_relations(fan) == minimal_nonneg_relations(entry.fan)
    result = gamma(fan, entry.kappa)
    assert result.value == entry.gamma
    assert result.minimizer == gamma(entry.fan, entry.kappa).minimizer
    assert lambda_lu(fan, entry.kappa) == lambda_lu(entry.fan, entry.kappa)


@settings(max_examples=3, deadline=None, suppress_health_check=[HealthCheck.large_base_example])
@given(rnd=st.randoms(use_true_random=False))
def test_relations_pair_to_zero(rnd):
    #pylint:disable=missing-docstring

    for entry in corpus():
        rels = minimal_nonneg_relations(entry.fan) + degree_capped_relations(entry.fan)
        for _ in range(100):
            char = [rnd.randint(-10, 10) for _ in range(entry.fan.dim)]
            pairings = [sum(x * e for x, e in zip(char, ray)) for ray in entry.fan.rays]
            for rel in rels:
                assert sum(a * p for a, p in zip(rel.a, pairings)) == 0, entry.name


def test_corpus_properties():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing corpus properties start')

    config = build_config({
        'solver.algorithm.name': 'exhaustive',
        'solver.algorithm.exhaustive.bound': 4
    })
    for entry in corpus():
        rels = minimal_nonneg_relations(entry.fan)
        in_box = [rel for rel in rels if max(rel.a) <= 4]
        assert minimal_nonneg_relations(entry.fan, config) == in_box, entry.name

        result = gamma(entry.fan, entry.kappa)
        assert result.attained_by_binary, entry.name
        assert gamma_by_brute_force(entry.fan, entry.kappa, 4) == result.value

        for factor in (2, Fraction(1, 2), Fraction(3, 7)):
            scaled = entry.kappa.scale(factor)
            assert gamma(entry.fan, scaled).value == result.value * factor
            assert lambda_lu(entry.fan, scaled) == lambda_lu(entry.fan, entry.kappa) * factor

    LOG.info('=== Testing corpus properties end')


@settings(max_examples=50, deadline=None)
@given(base=st.sampled_from(['P2', 'P1xP1']),
       steps=st.lists(st.integers(min_value=0, max_value=8), max_size=2))
def test_frontier_against_exhaustive(base, steps):
    #pylint:disable=missing-docstring

    fan = blowup_surface(base, steps)
    config = build_config({
        'solver.algorithm.name': 'exhaustive',
        'solver.algorithm.exhaustive.bound': 4
    })
    rels = minimal_nonneg_relations(fan)
    assert minimal_nonneg_relations(fan, config) == [rel for rel in rels if max(rel.a) <= 4]
