from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from garside.coxeter import make_group
from garside.spectra import build_descent_class_matrix

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@lru_cache(maxsize=None)
def descent_class_matrix(tag: str):
    return build_descent_class_matrix(make_group(tag))


@pytest.fixture(scope="session")
def adjp():
    """Memoized tag -> descent-class matrix, shared across the session."""
    return descent_class_matrix
