import factory.random
import pytest
from faker import Faker


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=None,
        help="Seed for the randomized property tests (defaults to settings.DEFAULT_SEED)",
    )


@pytest.fixture
def seed(request, settings):
    value = request.config.getoption("--seed")
    return settings.DEFAULT_SEED if value is None else value


@pytest.fixture(autouse=True)
def reseed_factories(seed):
    factory.random.reseed_random(seed)
    Faker.seed(seed)
    yield
