"""
Common fixtures for testing
"""

import pytest

from .corpus import h2, p1xp1, p2


@pytest.fixture(scope="module")
def test_dir(request):
    #pylint:disable=missing-docstring

    return request.fspath.join('..')


@pytest.fixture(scope="module")
def fixture_dir(test_dir):
    #pylint:disable=missing-docstring, redefined-outer-name

    return '{0}/fixture'.format(test_dir)


@pytest.fixture
def p2_fan():
    #pylint:disable=missing-docstring

    return p2()


@pytest.fixture
def h2_fan():
    #pylint:disable=missing-docstring

    return h2()


@pytest.fixture
def p1xp1_fan():
    #pylint:disable=missing-docstring

    return p1xp1()
