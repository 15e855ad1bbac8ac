"""Shared fixtures."""

from __future__ import annotations

import pytest

from py_polariton.cache import clear_cache
from py_polariton.models import ModelParams


@pytest.fixture(autouse=True)
def _fresh_cache():
    clear_cache()
    yield
    clear_cache()


@pytest.fixture
def calibrated_params() -> ModelParams:
    """Resonant chain in units of g, calibrated weighting."""
    return ModelParams(delta=0.0).with_convention("calibrated")
