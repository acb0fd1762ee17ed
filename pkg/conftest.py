"""
conftest.py
───────────
Shared fixtures: the Nakayama algebras A_{2,5}, A_{3,7}, A_{3,10} with
their catalogues, the path algebra of 0 → 1, and the two maximal
1-ortho-symmetric add-sets M1, M2 over A_{3,7}.
"""

import pytest

from verify_paper import a2_path_algebra, m1, m2, nak_setting


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-catalogue panels (deselect with -m 'not slow')")


@pytest.fixture(scope="session")
def a25():
    return nak_setting(2, 2)


@pytest.fixture(scope="session")
def a37():
    return nak_setting(3, 2)


@pytest.fixture(scope="session")
def a310():
    return nak_setting(3, 3)


@pytest.fixture(scope="session")
def a2():
    """(A, P0, P1, S0, S1) for k(0 → 1)."""
    return a2_path_algebra()


@pytest.fixture(scope="session")
def M1(a37):
    return m1(a37)


@pytest.fixture(scope="session")
def M2(a37):
    return m2(a37)
