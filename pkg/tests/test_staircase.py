"""Tests for the zero-hopping Devil's staircase."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.special import zeta

from py_polariton.errors import InvalidParameters, WindowOverlapError
from py_polariton.models import CrystalPhase, Filling, ModelParams
from py_polariton.staircase import (
    check_windows,
    commensurate_sums,
    crystal_configuration,
    crystal_distances,
    crystal_phase,
    enumerate_fillings,
    finite_size_bound,
    incommensurate_sum,
    mu_hole,
    mu_particle,
    stability_width,
    staircase_map,
    staircase_sequence,
    static_windows,
    width_sum,
    window_coefficients,
)


def test_filling_validation_and_order():
    assert str(Filling(2, 5)) == "2/5"
    assert Filling.from_fraction(Fraction(4, 10)) == Filling(2, 5)
    assert Filling(1, 3) < Filling(2, 5)
    assert Filling(1, 1).value == 1
    for p, q in ((0, 3), (4, 3), (2, 4), (1.5, 3)):
        with pytest.raises(InvalidParameters):
            Filling(p, q)


def test_enumerate_fillings_is_farey():
    fillings = enumerate_fillings(6)
    assert [str(f) for f in fillings] == [
        "1/6", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "5/6", "1/1",
    ]
    assert enumerate_fillings(1) == [Filling(1, 1)]
    for q_max in range(1, 12):
        values = [f.value for f in enumerate_fillings(q_max)]
        assert values == sorted(set(values))
        expected = {Fraction(p, q) for q in range(1, q_max + 1) for p in range(1, q + 1)}
        assert set(values) == expected
    with pytest.raises(InvalidParameters):
        enumerate_fillings(0)


def test_crystal_distances_and_configuration():
    assert [crystal_distances(Filling(1, 3), l) for l in range(1, 4)] == [3, 6, 9]
    assert [crystal_distances(Filling(2, 5), l) for l in range(1, 4)] == [2, 5, 7]
    assert crystal_configuration(Filling(1, 3), 6) == (1, 0, 0, 1, 0, 0)
    assert crystal_configuration(Filling(2, 5), 5) == (1, 0, 1, 0, 0)
    assert crystal_configuration(Filling(1, 1), 3) == (1, 1, 1)
    with pytest.raises(InvalidParameters):
        crystal_configuration(Filling(1, 3), 7)


def test_width_constants():
    """Widths per unit repulsion, and their match with the window difference."""
    assert width_sum(2) == pytest.approx(1.9442395, rel=1e-7)
    assert width_sum(3) == pytest.approx(0.0395658, rel=1e-6)
    assert width_sum(4) == pytest.approx(0.00381329, rel=1e-5)
    assert math.isinf(width_sum(1))
    for q in range(2, 9):
        particle, hole = commensurate_sums(q)
        assert particle - hole == pytest.approx(width_sum(q), rel=1e-10)
        assert width_sum(q + 1) < width_sum(q)


def test_window_coefficients():
    hole, particle = window_coefficients(Filling(1, 3))
    assert hole == pytest.approx(0.00486610, rel=1e-6)
    assert particle == pytest.approx(0.04443191, rel=1e-6)
    hole, particle = window_coefficients(Filling(2, 5))
    assert incommensurate_sum(2, 5) == pytest.approx(0.04417501, rel=1e-6)
    assert hole == pytest.approx(0.04445784, rel=1e-6)
    assert particle == pytest.approx(0.04515047, rel=1e-6)
    hole, particle = window_coefficients(Filling(1, 1))
    assert hole == pytest.approx(2 * zeta(6), rel=1e-10)
    assert math.isinf(particle)
    hole, particle = window_coefficients(Filling(1, 1), multiplicity=(0, 0))
    assert hole == 0.0
    assert math.isinf(particle)


def test_nearest_neighbour_cutoff():
    hole, particle = window_coefficients(Filling(1, 2), range_cutoff=1)
    assert hole == 0.0
    assert particle == 2.0
    assert width_sum(2, 1) == 2.0
    assert incommensurate_sum(2, 5, 1) == 0.0


def test_crystal_phase_edges():
    params = ModelParams(delta=0.5).with_v_tilde(0.025)
    phase = crystal_phase(Filling(1, 2), params)
    onset = params.omega + params.delta / 2 - math.sqrt(params.delta**2 / 4 + params.g**2)
    assert phase.mu_hole == pytest.approx(onset + 0.025 * 0.04522329, rel=1e-7)
    assert phase.mu_particle == pytest.approx(onset + 0.025 * 1.98946283, rel=1e-7)
    assert phase.width == pytest.approx(0.025 * 1.9442395, rel=1e-7)
    assert phase.distances == (2, 4)
    assert phase.contains((phase.mu_hole + phase.mu_particle) / 2)
    assert not phase.contains(phase.mu_hole)
    full = crystal_phase(Filling(1, 1), params)
    assert math.isinf(full.mu_particle)
    assert math.isinf(full.width)


def test_second_manifold_edges():
    params = ModelParams(v1=0.5, n_max=2).with_convention("calibrated")
    onset = -math.sqrt(2) / 2
    strength = 0.5 * math.sin(math.atan2(2 * math.sqrt(2), 0.0) / 2) ** 2
    assert mu_hole(Filling(1, 2), params, n=2) == pytest.approx(onset + strength * 0.04522329 / 2, rel=1e-7)
    assert stability_width(Filling(1, 2), params, n=2) == pytest.approx(strength * 1.9442395 / 2, rel=1e-7)


def test_staircase_sequence_order():
    phases = staircase_sequence(0.025, 6, ModelParams().with_convention("calibrated"))
    assert [p.filling for p in phases] == enumerate_fillings(6)
    low = [p.filling for p in phases if p.filling.value <= Fraction(1, 2)]
    assert low == [Filling(1, 6), Filling(1, 5), Filling(1, 4), Filling(1, 3), Filling(2, 5), Filling(1, 2)]
    for lower, upper in zip(phases, phases[1:]):
        assert lower.mu_particle <= upper.mu_hole + 1e-12


def test_incommensurate_term_separates_neighbours():
    hole_2_5 = window_coefficients(Filling(2, 5))[0]
    particle_1_3 = window_coefficients(Filling(1, 3))[1]
    assert particle_1_3 < hole_2_5


def test_dropping_incommensurate_sum_overlaps():
    with pytest.raises(WindowOverlapError):
        staircase_sequence(0.025, 6, multiplicity=(0, 1))
    with pytest.raises(WindowOverlapError):
        static_windows(6, ModelParams(), multiplicity=(0, 1))


def test_windows_disjoint_for_random_parameters():
    """Ordered, disjoint windows with consistent widths over random detunings and repulsions."""
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        params = ModelParams(omega=rng.uniform(-1, 1), delta=rng.uniform(-3, 3), g=rng.uniform(0.5, 2))
        params = params.with_convention(str(rng.choice(["literal", "calibrated"])))
        v_tilde = rng.uniform(1e-4, 0.2)
        phases = staircase_sequence(v_tilde, 6, params)
        for phase in phases:
            assert phase.mu_hole < phase.mu_particle
        for lower, upper in zip(phases, phases[1:]):
            assert lower.mu_particle <= upper.mu_hole + 1e-12


def test_check_windows_rejects_overlap():
    a = CrystalPhase(Filling(1, 3), 0.0, 0.5, 0.5, (3,))
    b = CrystalPhase(Filling(1, 2), 0.4, 1.0, 0.6, (2,))
    with pytest.raises(WindowOverlapError):
        check_windows([b, a])
    inverted = CrystalPhase(Filling(1, 2), 1.0, 0.5, -0.5, (2,))
    with pytest.raises(WindowOverlapError):
        check_windows([inverted])


def test_finite_size_bound_shrinks():
    params = ModelParams().with_v_tilde(0.025)
    bounds = [finite_size_bound(L, params) for L in (6, 12, 24)]
    assert bounds[0] > bounds[1] > bounds[2] > 0
    assert finite_size_bound(12, ModelParams()) == 0.0
    with pytest.raises(InvalidParameters):
        finite_size_bound(1, params)


def test_staircase_map():
    params = ModelParams().with_convention("calibrated")
    phase_map = staircase_map((-1.1, -0.85), (0.0, 0.05), (2001, 5), 6, params)
    assert phase_map.shape == (5, 2001)
    assert phase_map.axis_name == "v_tilde"
    assert phase_map.metadata["mu_c0"] == pytest.approx(-1.0)
    labels = phase_map.labels
    below = phase_map.mu < -1.0
    assert np.all(labels[:, below] == "vacuum")
    # no repulsion: full filling straight above the onset
    assert set(labels[0, ~below]) <= {"solid", "transition"}
    assert phase_map.column(0)[-1] == Filling(1, 1)
    sequence = phase_map.plateaus(2)
    farey = enumerate_fillings(6)
    assert [farey.index(f) for f in sequence] == sorted(farey.index(f) for f in sequence)
    assert {Filling(1, 3), Filling(1, 2), Filling(1, 1)} <= set(sequence)
    rows = list(phase_map.rows())
    assert len(rows) == 5 * 2001
    assert rows[0][1] == 0.0 and rows[2001][1] == pytest.approx(0.0125)
    with pytest.raises(InvalidParameters):
        staircase_map((-1.0, -1.1), (0.0, 0.05), 10, 6)
    with pytest.raises(InvalidParameters):
        staircase_map((-1.1, -0.85), (-0.1, 0.05), 10, 6)


def test_selected_filling_grows_with_mu():
    params = ModelParams().with_convention("calibrated")
    phase_map = staircase_map((-1.2, -0.4), (0.0, 0.1), (801, 40), 8, params)
    rng = np.random.default_rng(5)
    for index in rng.choice(np.arange(1, 40), size=12, replace=False):
        values = [f.value for f in phase_map.column(int(index)) if f is not None]
        assert values
        assert values == sorted(values)
