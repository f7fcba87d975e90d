import pytest

from engel_lab.ideal.spans import IdealContext, get_context


@pytest.fixture(scope="session")
def shared_ctx() -> IdealContext:
    """One span cache (mod 5) shared across the whole run.

    Slices and spans are pure functions of the degree, so sharing them only
    saves time; every test still asserts against freshly computed vectors.
    """
    return get_context(5)


@pytest.fixture(scope="session")
def shared_ctx3() -> IdealContext:
    return get_context(3)
