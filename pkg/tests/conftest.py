import pytest

from sgplink import semigroup_from_generators

# Fixed corpus used by the exhaustive theorem checks.
CORPUS_GENS = [
    (2, 3),
    (3, 4, 5),
    (3, 5),
    (4, 5, 7),
    (5, 6, 8),
    (4, 6, 9),
]


@pytest.fixture(scope="session")
def corpus():
    return [semigroup_from_generators(g) for g in CORPUS_GENS]


@pytest.fixture(scope="session")
def s568():
    return semigroup_from_generators([5, 6, 8])


@pytest.fixture(scope="session")
def naturals():
    return semigroup_from_generators([1])
