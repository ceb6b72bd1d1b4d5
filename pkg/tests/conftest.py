import pytest

from areamethod.prover import ProverOptions, Session


@pytest.fixture
def session() -> Session:
    return Session(ProverOptions())
