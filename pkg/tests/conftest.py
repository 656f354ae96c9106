import pytest
from loguru import logger


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    # main() binds a sink to the captured stderr of the running test
    logger.remove()
