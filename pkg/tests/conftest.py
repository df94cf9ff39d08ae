import pytest

from mobius_ladder import LadderSpec, all_pairs_distances, build_ladder

# The standard sweep domain: every spec the exhaustive search must cover.
SWEEP_SPECS = [(m, n)
               for n in range(2, 6)
               for m in range(n + 1, 15)
               if (m - 1) * n <= 40]


@pytest.fixture(scope="session")
def bundle():
    """Memoized (spec, ladder, matrix) triples shared across the session."""
    cache = {}

    def get(m, n):
        if (m, n) not in cache:
            spec = LadderSpec(m, n)
            ladder = build_ladder(spec)
            cache[(m, n)] = (spec, ladder, all_pairs_distances(ladder))
        return cache[(m, n)]

    return get


@pytest.fixture(scope="session")
def m74(bundle):
    return bundle(7, 4)


@pytest.fixture(scope="session")
def m102(bundle):
    return bundle(10, 2)
