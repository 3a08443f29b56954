import pytest

from voiceflight.analysis import EstimatorConfig
from voiceflight.bench import generate_corpus


@pytest.fixture(scope="session")
def cfg():
    return EstimatorConfig()


@pytest.fixture(scope="session")
def corpus42():
    return generate_corpus(42)
