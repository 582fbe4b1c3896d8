import pytest

from oddmult import a_parity_series, build_table


@pytest.fixture(scope="session")
def oracle_2000():
    """Exact a(0..2000), the integer ground truth for parity spot checks."""
    return build_table(2000)


@pytest.fixture(scope="session")
def parity_10k():
    return a_parity_series(10_000)
