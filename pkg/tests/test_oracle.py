"""Tests for the exhaustive ring search and exact diagonalisation."""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np
import pytest

from py_polariton.errors import InvalidParameters, OracleSizeError
from py_polariton.models import Filling, LatticeConfig, ModelParams
from py_polariton.oracle import (
    boundary_bisect,
    build_hamiltonian,
    classical_ground_state,
    configuration_energy,
    coupling_matrix,
    decode,
    dump_record,
    exact_diagonalize,
    result_record,
    ring_distance,
    sector_ground_energy,
    sector_table,
)
from py_polariton.staircase import finite_size_bound, mu_hole, mu_particle, staircase_sequence


@pytest.fixture
def staircase_params() -> ModelParams:
    return ModelParams().with_convention("calibrated").with_v_tilde(0.025)


def _mid_window(filling: Filling, params: ModelParams) -> float:
    return (mu_hole(filling, params) + mu_particle(filling, params)) / 2


def test_ring_geometry():
    assert ring_distance(0, 5, 6) == 1
    assert ring_distance(0, 3, 6) == 3
    assert ring_distance(4, 1, 7) == 3
    matrix = coupling_matrix(6, ModelParams(v1=1.0))
    np.testing.assert_array_equal(matrix, matrix.T)
    np.testing.assert_array_equal(np.diag(matrix), np.zeros(6))
    assert matrix[0, 1] == 1.0
    assert matrix[0, 3] == pytest.approx(1 / 729)
    np.testing.assert_array_equal(decode(np.array([5, 6]), 3, 2), [[1, 0, 1], [0, 1, 1]])


def test_configuration_energy_matches_pair_loop():
    """Vectorised energy against the plain pairwise loop on random rings."""
    rng = np.random.default_rng(314)
    for _ in range(1000):
        L = int(rng.integers(3, 11))
        n_max = int(rng.integers(1, 3))
        params = ModelParams(
            delta=rng.uniform(-2, 2),
            v1=rng.uniform(0, 1),
            mu=rng.uniform(-2, 0),
            n_max=n_max,
            range_cutoff=int(rng.choice([1, 2, 3])) if rng.random() < 0.3 else math.inf,
        ).with_convention(str(rng.choice(["literal", "calibrated"])))
        occupations = rng.integers(0, n_max + 1, size=L)
        config = LatticeConfig(occupations, 0.0)
        assert configuration_energy(occupations, params) == pytest.approx(config.recompute_energy(params), abs=1e-10)


def test_ground_state_is_crystal(staircase_params):
    params = staircase_params.replace(mu=_mid_window(Filling(1, 3), staircase_params))
    config = classical_ground_state(6, params)
    assert config.filling == Fraction(1, 3)
    assert config.distinct_minima() == ((0, 0, 1, 0, 0, 1),)
    assert config.degeneracy == 3
    assert config.energy == pytest.approx(configuration_energy(config.occupations, params), abs=1e-12)
    assert str(config.rotated(1)) != str(config)
    half = classical_ground_state(12, staircase_params, mu=_mid_window(Filling(1, 2), staircase_params))
    assert half.distinct_minima() == ((0, 1) * 6,)
    empty = classical_ground_state(8, staircase_params, mu=-1.5)
    assert empty.occupations == (0,) * 8
    assert empty.energy == 0.0


def test_energy_is_translation_invariant():
    rng = np.random.default_rng(2718)
    for _ in range(200):
        L = int(rng.integers(3, 11))
        params = ModelParams(delta=rng.uniform(-2, 2), v1=rng.uniform(0, 1), mu=rng.uniform(-2, 0), n_max=2)
        occupations = rng.integers(0, 3, size=L)
        energy = configuration_energy(occupations, params)
        for shift in range(L):
            assert configuration_energy(np.roll(occupations, shift), params) == pytest.approx(energy, abs=1e-12)


def test_minima_are_closed_under_rotation(staircase_params):
    params = staircase_params.replace(mu=_mid_window(Filling(1, 3), staircase_params))
    config = classical_ground_state(6, params)
    rotations = {config.rotated(shift).occupations for shift in range(6)}
    assert rotations == set(config.minima)
    for shift in range(6):
        assert config.rotated(shift).recompute_energy(params) == pytest.approx(config.energy, abs=1e-12)


def test_ground_state_bounds_random_configurations():
    """No configuration lies below the enumerated minimum."""
    rng = np.random.default_rng(1618)
    for _ in range(50):
        L = int(rng.integers(3, 9))
        n_max = int(rng.integers(1, 3))
        params = ModelParams(delta=rng.uniform(-2, 2), v1=rng.uniform(0, 1), mu=rng.uniform(-2, 0), n_max=n_max)
        ground = classical_ground_state(L, params, cache=False).energy
        for occupations in rng.integers(0, n_max + 1, size=(20, L)):
            assert ground <= configuration_energy(occupations, params) + 1e-12


def test_frozen_crystal_on_ring():
    params = ModelParams(v1=0.8, n_max=2).with_convention("calibrated")
    config = classical_ground_state(8, params, mu=-0.366)
    assert config.distinct_minima() == ((0, 2) * 4,)
    assert config.filling == Fraction(1, 2)


def test_size_guards():
    with pytest.raises(OracleSizeError) as info:
        classical_ground_state(29, ModelParams())
    assert int(info.value) == 2
    with pytest.raises(OracleSizeError):
        classical_ground_state(17, ModelParams(n_max=2))
    with pytest.raises(InvalidParameters):
        classical_ground_state(1, ModelParams())
    with pytest.raises(OracleSizeError):
        exact_diagonalize(15, ModelParams())
    with pytest.raises(InvalidParameters):
        build_hamiltonian(2, ModelParams())
    with pytest.raises(InvalidParameters):
        exact_diagonalize(4, ModelParams(), photons=99)
    with pytest.raises(InvalidParameters):
        build_hamiltonian(4, ModelParams(n_max=2), photons=-1)


def test_sector_table_cache_flag(staircase_params):
    cached = sector_table(10, staircase_params)
    assert sector_table(10, staircase_params) is cached
    fresh = sector_table(10, staircase_params, cache=False)
    assert fresh is not cached
    np.testing.assert_array_equal(fresh.energies, cached.energies)
    assert fresh.energies[0] == 0.0
    assert fresh.degeneracy[1] == 10


def test_boundary_bisect_matches_series(staircase_params):
    for q in (2, 3, 4):
        filling = Filling(1, q)
        low, high = boundary_bisect(filling, staircase_params, 12)
        assert low == pytest.approx(mu_hole(filling, staircase_params), abs=1e-4)
        assert high == pytest.approx(mu_particle(filling, staircase_params), abs=1e-4)
    low, high = boundary_bisect(Filling(1, 1), staircase_params, 6)
    assert math.isinf(high)
    assert low == pytest.approx(mu_hole(Filling(1, 1), staircase_params), abs=1e-3)
    with pytest.raises(InvalidParameters):
        boundary_bisect(Filling(1, 5), staircase_params, 12)


def test_hamiltonian_structure():
    params = ModelParams(delta=0.4, v1=0.3, t=0.05, n_max=2)
    matrix, codes = build_hamiltonian(5, params)
    assert matrix.shape == (3**5, 3**5)
    assert abs(matrix - matrix.T).max() == 0
    sector, sector_codes = build_hamiltonian(6, params.replace(n_max=1), photons=3)
    assert sector.shape == (20, 20)
    assert np.all(decode(sector_codes, 6, 2).sum(axis=1) == 3)
    static, _ = build_hamiltonian(5, params.replace(t=0.0))
    np.testing.assert_array_equal(static.toarray(), np.diag(static.diagonal()))


def test_single_particle_band():
    params = ModelParams(t=0.02)
    result = exact_diagonalize(6, params, photons=1)
    assert result.ground_energy == pytest.approx(-1.0 - 0.02)
    assert result.degeneracy == 1
    assert result.filling == pytest.approx(1 / 6)
    assert result.photon_density == pytest.approx(0.5 / 6)
    assert result.dimension == 6
    assert result.excitations == (1,)


def test_diagonalisation_agrees_with_search(staircase_params):
    params = staircase_params.replace(mu=_mid_window(Filling(1, 3), staircase_params))
    classical = classical_ground_state(6, params)
    static = exact_diagonalize(6, params)
    assert static.ground_energy == pytest.approx(classical.energy, abs=1e-12)
    assert static.degeneracy == 3
    assert static.filling == pytest.approx(1 / 3)
    hopping = exact_diagonalize(6, params.replace(t=0.01))
    assert hopping.ground_energy <= classical.energy + 1e-12
    frozen = ModelParams(v1=0.8, n_max=2, mu=-0.366).with_convention("calibrated")
    assert exact_diagonalize(6, frozen).ground_energy == pytest.approx(classical_ground_state(6, frozen).energy, abs=1e-12)


def test_defect_lowers_by_band_edge():
    params = ModelParams().with_convention("calibrated").with_v_tilde(0.025)
    params = params.replace(t=2e-3)
    reference = sector_ground_energy(12, params, 7)
    shift = exact_diagonalize(12, params, photons=7).ground_energy - reference
    assert shift == pytest.approx(-4e-3, abs=1e-3)
    with pytest.raises(InvalidParameters):
        sector_ground_energy(6, params, 7)


def test_records(staircase_params):
    config = classical_ground_state(6, staircase_params.replace(mu=_mid_window(Filling(1, 3), staircase_params)))
    record = result_record(config, 6, staircase_params)
    assert record["filling"] == "1/3"
    assert record["params"]["range_cutoff"] == "inf"
    text = dump_record(record)
    assert json.loads(text)["L"] == 6
    assert text == json.dumps(json.loads(text), sort_keys=True)
    spectrum = exact_diagonalize(4, staircase_params)
    assert result_record(spectrum, 4, staircase_params)["config"] is None


def test_doubling_the_ring_stays_within_tail_bound(staircase_params):
    bound = finite_size_bound(6, staircase_params)
    for q in (2, 3):
        filling = Filling(1, q)
        small = boundary_bisect(filling, staircase_params, 6)
        large = boundary_bisect(filling, staircase_params, 12)
        assert abs(small[0] - large[0]) < bound
        assert abs(small[1] - large[1]) < bound


def test_static_diagonalisation_selects_staircase_filling(staircase_params):
    phases = [phase for phase in staircase_sequence(0.025, 6, staircase_params) if phase.filling.p == 1 and phase.filling.q in (2, 3, 4)]
    assert [phase.filling for phase in phases] == [Filling(1, 4), Filling(1, 3), Filling(1, 2)]
    for phase in phases:
        params = staircase_params.replace(mu=(phase.mu_hole + phase.mu_particle) / 2)
        result = exact_diagonalize(12, params, 1)
        assert result.filling == pytest.approx(float(phase.filling.value), abs=1e-12)
