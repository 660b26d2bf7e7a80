from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from korenblum import Params, reference_params

# Exact rational arithmetic makes some properties slow per example;
# judge them by example count, not wall clock.
settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def reference() -> Params:
    """The parameter pair whose certified radius improves 0.67795."""
    return reference_params()
