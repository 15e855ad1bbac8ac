"""Tests for defect bands, melted windows and the floating-solid map."""

from __future__ import annotations

import logging
import math

import numpy as np
import pytest

from py_polariton.defects import (
    defect_band,
    defect_dispersion,
    floating_map,
    melted_bounds,
    melting_threshold,
    surviving_solids,
)
from py_polariton.errors import InvalidParameters
from py_polariton.models import Filling, ModelParams
from py_polariton.staircase import crystal_phase, enumerate_fillings, staircase_map


def test_defect_dispersion():
    assert defect_dispersion("particle", 2, 0.001, 0.0) == pytest.approx(-0.004)
    assert defect_dispersion("hole", 2, 0.001, math.pi / 2) == pytest.approx(0.004)
    np.testing.assert_allclose(defect_dispersion("hole", 3, 0.0, np.linspace(0, 1, 4)), np.zeros(4))
    band = defect_band("particle", 3, 0.002)
    assert band.minimum == pytest.approx(-0.012)
    k, energy = band.sample(33)
    assert k[0] == pytest.approx(-math.pi / 3)
    assert energy.min() == pytest.approx(-0.012)
    assert energy.max() == pytest.approx(0.012)
    with pytest.raises(InvalidParameters):
        defect_band("vortex", 2, 0.001)
    with pytest.raises(InvalidParameters):
        defect_band("hole", 2, -0.001)


def test_melted_bounds_shift():
    params = ModelParams().with_v_tilde(0.025)
    phase = crystal_phase(Filling(1, 2), params)
    bounds = melted_bounds(Filling(1, 2), params, j_perp=0.001)
    assert bounds.mu_down == pytest.approx(phase.mu_hole + 0.004)
    assert bounds.mu_up == pytest.approx(phase.mu_particle - 0.004)
    assert bounds.survives
    # J_perp from t·cos²θ_1 when not given
    from_t = melted_bounds(Filling(1, 2), params.replace(t=0.002))
    assert from_t.mu_down == pytest.approx(bounds.mu_down, abs=1e-12)
    assert from_t.mu_up == pytest.approx(bounds.mu_up, abs=1e-12)
    melted = melted_bounds(Filling(1, 3), params, j_perp=0.001)
    assert not melted.survives
    assert "melted" in str(melted)


def test_melting_thresholds():
    assert melting_threshold(Filling(1, 2), 0.001) == pytest.approx(0.0041147193, rel=1e-7)
    assert melting_threshold(Filling(1, 3), 0.001) == pytest.approx(0.30329212, rel=1e-7)
    assert melting_threshold(Filling(2, 3), 0.001) == melting_threshold(Filling(1, 3), 0.001)
    assert melting_threshold(Filling(1, 1), 0.001) == 0.0
    assert melting_threshold(Filling(1, 2), 0.0) == 0.0


def test_surviving_solids():
    low = [f for f in surviving_solids(1.0, 0.001, 6) if f.value <= 0.5]
    assert low == [Filling(1, 3), Filling(1, 2)]
    assert Filling(1, 1) in surviving_solids(0.0, 0.001, 6)
    assert surviving_solids(0.0, 0.001, 6) == [Filling(1, 1)]
    assert surviving_solids(0.025, 0.0, 6) == enumerate_fillings(6)


def test_threshold_separates_survival():
    """Solids survive exactly above their melting threshold."""
    rng = np.random.default_rng(7)
    fillings = enumerate_fillings(5)[:-1]
    for _ in range(1000):
        filling = fillings[int(rng.integers(len(fillings)))]
        j = rng.uniform(1e-5, 1e-2)
        threshold = melting_threshold(filling, j)
        factor = rng.choice([0.9, 1.1])
        params = ModelParams(delta=rng.uniform(-2, 2)).with_v_tilde(factor * threshold)
        assert melted_bounds(filling, params, j_perp=j).survives == (factor > 1)


def test_marginal_window_warns(caplog):
    j = 0.001
    params = ModelParams().with_v_tilde(1.05 * melting_threshold(Filling(1, 2), j))
    with caplog.at_level(logging.WARNING, logger="py_polariton.defects"):
        melted_bounds(Filling(1, 2), params, j_perp=j)
    assert "marginal" in caplog.text


def test_floating_map_reduces_to_staircase():
    params = ModelParams().with_convention("calibrated")
    zero = floating_map((-1.1, -0.85), (0.0, 0.05), 0.0, (101, 4), 6, params)
    static = staircase_map((-1.1, -0.85), (0.0, 0.05), (101, 4), 6, params)
    assert zero == static


def test_floating_map_labels():
    params = ModelParams().with_convention("calibrated")
    phase_map = floating_map((-1.1, -0.85), (0.0, 0.05), 0.001, (2001, 5), 6, params)
    assert phase_map.metadata["j_perp"] == 0.001
    mu = phase_map.mu
    labels = phase_map.labels
    assert np.all(labels[:, mu < -1.002] == "vacuum")
    assert np.all(labels[:, (mu > -1.002) & (mu < -1.0)] != "vacuum")
    assert "PF" not in set(labels[0])
    assert "uniform" in set(labels[0])
    assert phase_map.count("PF") > 0
    assert set(np.unique(labels)) <= {"vacuum", "solid", "PF", "uniform"}
    # the 1/2 solid survives at v_tilde = 0.05 while 1/4 has melted
    plateaus = phase_map.plateaus(4)
    assert Filling(1, 2) in plateaus
    assert Filling(1, 4) not in plateaus
    with pytest.raises(InvalidParameters):
        floating_map((-1.1, -0.85), (0.0, 0.05), -0.001, 10, 6)


def test_melted_width_linear_in_hopping():
    params = ModelParams().with_v_tilde(0.025)
    for filling in (Filling(1, 2), Filling(1, 3), Filling(2, 5)):
        widths = []
        for j_perp in (0.0, 1e-4, 3e-4):
            bounds = melted_bounds(filling, params, j_perp=j_perp)
            widths.append(bounds.mu_up - bounds.mu_down)
        assert widths[0] > widths[1] > widths[2]
        assert widths[1] - widths[0] == pytest.approx(-4 * filling.q * 1e-4, rel=1e-9)
        assert widths[2] - widths[0] == pytest.approx(-4 * filling.q * 3e-4, rel=1e-9)
