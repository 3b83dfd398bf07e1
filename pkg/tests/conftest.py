import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scrollex import fixtures, parse_instance


def load(doc):
    ext, _canonical = parse_instance(doc)
    return ext


@pytest.fixture(scope="session")
def bruns():
    return load(fixtures.bruns_instance())


@pytest.fixture(scope="session")
def square_one_edge():
    return load(fixtures.square_one_edge_instance())


@pytest.fixture(scope="session")
def triangle_ring():
    return load(fixtures.triangle_ring_instance())


@pytest.fixture(scope="session")
def triangle_ring_reoriented():
    return load(fixtures.triangle_ring_reoriented_instance())


@pytest.fixture(scope="session")
def flap_square():
    return load(fixtures.flap_square_instance())


@pytest.fixture(scope="session")
def random_extensions():
    """Twenty seeded random valid orderable extensions, <= 12 variables each."""
    docs = []
    seed = 0
    while len(docs) < 20:
        docs.append(fixtures.random_extension_instance(seed))
        seed += 1
    return [load(d) for d in docs]


@pytest.fixture(scope="session")
def cycle_extensions():
    """Seeded cycle extensions (at least one bare edge each)."""
    return [load(fixtures.random_cycle_extension_instance(s)) for s in range(12)]


@pytest.fixture(scope="session")
def corpus(bruns, square_one_edge, flap_square, random_extensions, cycle_extensions):
    """Every instance the cross-validation criteria quantify over."""
    return [bruns, square_one_edge, flap_square] + random_extensions + cycle_extensions
