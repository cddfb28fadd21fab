import pytest

from hypercourant.structures import (
    flat_quaternionic,
    holomorphic_symplectic,
    nonintegrable_conjugated,
)


@pytest.fixture(scope="session")
def flat():
    return flat_quaternionic()


@pytest.fixture(scope="session")
def holsymp():
    return holomorphic_symplectic()


@pytest.fixture(scope="session")
def noni():
    return nonintegrable_conjugated()


@pytest.fixture(scope="session")
def all_triples(flat, holsymp, noni):
    return {"flat": flat, "holomorphic-symplectic": holsymp, "nonintegrable": noni}
