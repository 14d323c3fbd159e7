import pytest

from enhcube import EnhancedHypercube


def all_params(n_max: int, n_min: int = 3) -> list[tuple[int, int]]:
    return [(n, k) for n in range(n_min, n_max + 1) for k in range(2, n + 1)]


@pytest.fixture(scope="session")
def small_graphs() -> list[EnhancedHypercube]:
    return [EnhancedHypercube(n, k) for n, k in all_params(5)]
