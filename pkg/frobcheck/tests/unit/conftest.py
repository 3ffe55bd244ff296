"""Pytest customization for unit tests."""
import pytest

from frobcheck import duality
from frobcheck.functor import ObjectGrid
from frobcheck.monoidal import cyclic_base


@pytest.fixture(scope='session')
def z2():
    """The cyclic group of order 2."""
    return cyclic_base(2)


@pytest.fixture(scope='session')
def algebra_z2():
    """The group algebra of the cyclic group of order 2."""
    return duality.zmod_algebra(2)


@pytest.fixture(scope='session')
def tensor_left_z2(algebra_z2):  # pylint: disable=redefined-outer-name
    """The functor R⊗- for the group algebra of the cyclic group of order 2."""
    return duality.tensor_left_functor(algebra_z2)


@pytest.fixture()
def grid12():
    """The grid of the objects of dimension 1 and 2."""
    return ObjectGrid.from_dims('1-2')
