import hypothesis

from ellipse_perimeter import PrecisionConfig

import pytest

hypothesis.settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    max_examples=100,
)
hypothesis.settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def cfg():
    """Default 50-digit oracle configuration shared across the suite."""
    return PrecisionConfig()
