"""Resonant chain with up to two excitations per cavity: thresholds, frozen hopping and the phase classifier."""
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple, Union
import numpy as np
from .errors import InvalidParameters, TruncationError
from .models import CrystalPhase, Filling, ModelParams, PhaseMap, ResonantThresholds
from .model_core import effective_couplings, first_critical_point, mixing_angle
from .staircase import axis_grid, crystal_phase, enumerate_fillings, mu_hole, resolve_resolution, window_coefficients

logger = logging.getLogger(__name__)

LABELS = ('vacuum','PS','PF','uniform-1','FS','uniform-2')
FULL = Filling(1, 1)

def _require_resonance(params: ModelParams):
	if params.delta != 0:
		raise InvalidParameters('the two-excitation analysis needs delta = 0, got %r'%params.delta, params.delta)

def degeneracy_point(params: ModelParams) -> float:
	"""Chemical potential where E₁₋ = E₂₋."""
	return params.omega - math.sqrt(params.delta**2/4 + 2*params.g**2) + math.sqrt(params.delta**2/4 + params.g**2)

def inversion_limit(params: ModelParams) -> float:
	"""Chemical potential where E₃₋ = E₂₋; the two-excitation truncation is not valid above it."""
	return params.omega - math.sqrt(params.delta**2/4 + 3*params.g**2) + math.sqrt(params.delta**2/4 + 2*params.g**2)

def full_filling_coefficient(params: ModelParams) -> float:
	"""``c`` in ``mu_c1 = ω - g + c·V``."""
	return mu_hole(FULL, params.replace(v1=1.0)) - first_critical_point(params)

def critical_coupling(params: ModelParams) -> float:
	"""Interaction ``V`` at which the |1̃⟩ full-filling point meets the E₁₋ = E₂₋ degeneracy."""
	_require_resonance(params)
	return (degeneracy_point(params) - first_critical_point(params))/full_filling_coefficient(params)

def resonant_thresholds(params: ModelParams) -> ResonantThresholds:
	"""``mu_c0 … mu_c3`` and ``v_crit`` of the resonant chain."""
	_require_resonance(params)
	if params.n_max < 2:
		raise TruncationError('the |2~> thresholds need n_max = 2', params.n_max)
	thresholds = ResonantThresholds(
		first_critical_point(params),
		mu_hole(FULL, params),
		degeneracy_point(params),
		mu_hole(FULL, params, n=2),
		critical_coupling(params),
	)
	logger.debug('resonant thresholds: %s', thresholds)
	return thresholds

def frozen_window(params: ModelParams) -> Tuple[float,float]:
	"""``(mu_c2, mu_c3)``, where the |0⟩/|2̃⟩ crystal is the ground state in the strong regime."""
	thresholds = resonant_thresholds(params)
	return thresholds.mu_c2, thresholds.mu_c3

def two_crystal_window(filling: Filling, params: ModelParams) -> CrystalPhase:
	"""Window of the ``filling`` crystal of |2̃⟩ in an empty background."""
	return crystal_phase(filling, params, n=2)

def _site_state(n: int, params: ModelParams, photons: int) -> np.ndarray:
	vector = np.zeros(2*(photons + 1))
	if n == 0:
		vector[0] = 1.0
		return vector
	theta = mixing_angle(n, params.delta, params.g)
	vector[2*n] = math.cos(theta)
	vector[2*(n - 1) + 1] = -math.sin(theta)
	return vector

def _annihilation(photons: int) -> np.ndarray:
	a = np.diag(np.sqrt(np.arange(1, photons + 1, dtype=float)), 1)
	return np.kron(a, np.eye(2))

def hopping_element(bra: Sequence[int], ket: Sequence[int], params: ModelParams) -> float:
	"""
	``⟨bra| a₁† a₂ |ket⟩`` for two cavities in lower-polariton product states.

	Evaluated in the bare photon ⊗ atom basis of both cavities.

	Parameters
	----------
	bra: :class:`Sequence[int]`
		Excitation numbers ``(n₁, n₂)`` of the final state
	ket: :class:`Sequence[int]`
		Excitation numbers ``(n₁, n₂)`` of the initial state
	params: :class:`ModelParams`
		Supplies ``delta`` and ``g``
	"""
	if len(bra) != 2 or len(ket) != 2 or min(min(bra), min(ket)) < 0:
		raise InvalidParameters('bra and ket must be pairs of excitation numbers, got %r %r'%(bra, ket), (bra, ket))
	photons = max(max(bra), max(ket)) + 1
	a = _annihilation(photons)
	operator = np.kron(a.T, a)
	final = np.kron(_site_state(bra[0], params, photons), _site_state(bra[1], params, photons))
	initial = np.kron(_site_state(ket[0], params, photons), _site_state(ket[1], params, photons))
	return float(final @ operator @ initial) + 0.0

def frozen_hopping_element(params: Optional[ModelParams] = None) -> float:
	"""``⟨2̃,0| a₁† a₂ |0,2̃⟩``, which vanishes: a single hop changes the photon number of a cavity by one."""
	return hopping_element((2, 0), (0, 2), params or ModelParams(n_max=2))

class _Classifier:
	def __init__(self, params: ModelParams, q_max: int):
		_require_resonance(params)
		self.params = params
		self.limit = inversion_limit(params)
		self.mu_c0 = first_critical_point(params)
		self.mu_c1 = mu_hole(FULL, params)
		self.mu_c2 = degeneracy_point(params)
		self.mu_c3 = mu_hole(FULL, params, n=2)
		self.strong = self.mu_c1 > self.mu_c2
		self.v_tilde = effective_couplings(params)[1]
		self.windows = []
		self.two_windows = []
		for filling in enumerate_fillings(q_max):
			if filling != FULL:
				self.windows.append((filling,) + window_coefficients(filling, params.range_cutoff))
			self.two_windows.append(two_crystal_window(filling, params))

	def metadata(self) -> Dict[str,float]:
		return {'mu_c0': self.mu_c0, 'mu_c1': self.mu_c1, 'mu_c2': self.mu_c2, 'mu_c3': self.mu_c3, 'mu_inversion': self.limit, 'strong_plrri': float(self.strong)}

	def row(self, mu: np.ndarray, t: float) -> Tuple[List[str],List[Optional[Filling]]]:
		if t < 0:
			raise InvalidParameters('t must be non-negative, got %r'%t, t)
		if np.any(mu > self.limit):
			raise TruncationError('mu=%.6g is above the |3~> inversion point %.6g'%(float(np.max(mu)), self.limit), float(np.max(mu)))
		if self.params.n_max < 2 and np.any(mu > self.mu_c2):
			raise TruncationError('mu=%.6g needs the |2~> manifold but n_max = 1'%float(np.max(mu)), float(np.max(mu)))
		j = t*math.cos(mixing_angle(1, self.params.delta, self.params.g))**2
		labels: List[str] = []
		fillings: List[Optional[Filling]] = []
		for value in mu:
			if value > self.mu_c2:
				if self.strong and value < self.mu_c3:
					labels.append('FS')
					fillings.append(next((phase.filling for phase in self.two_windows if phase.contains(value)), None))
				else:
					labels.append('uniform-2')
					fillings.append(FULL)
				continue
			if value < self.mu_c0 - 2*j:
				labels.append('vacuum')
				fillings.append(None)
			elif value > self.mu_c1 + 2*j:
				labels.append('uniform-1')
				fillings.append(FULL)
			else:
				filling = None
				for f, hole, particle in self.windows:
					shift = 2*f.q*j
					if self.mu_c0 + hole*self.v_tilde + shift < value < self.mu_c0 + particle*self.v_tilde - shift:
						filling = f
						break
				if filling is not None or j == 0:
					labels.append('PS' if self.v_tilde > 0 else 'uniform-1')
				else:
					labels.append('PF' if self.v_tilde > 0 else 'uniform-1')
				fillings.append(filling)
		return labels, fillings

def classify_phase(mu: float, t: float, params: ModelParams, q_max: int = 6) -> str:
	"""
	Ground-state phase at one ``(mu, t)`` point of the resonant chain.

	Weak repulsion (``mu_c1 < mu_c2``): vacuum, solids (``PS``) and the floating solid
	(``PF``) below ``mu_c1``, uniform |1̃⟩ filling above it, uniform |2̃⟩ above ``mu_c2``.
	Strong repulsion: |1̃⟩ solids below ``mu_c2``, the frozen solid (``FS``) between
	``mu_c2`` and ``mu_c3`` whatever ``t``, uniform |2̃⟩ above ``mu_c3``.
	"""
	labels, _ = _Classifier(params, q_max).row(np.array([float(mu)]), t)
	return labels[0]

def phase_grid(mu_range: Tuple[float,float], t_range: Tuple[float,float], resolution: Union[int,Tuple[int,int]], params: ModelParams, q_max: int = 6) -> PhaseMap:
	"""``classify_phase`` over a ``(mu, t)`` grid; thresholds are attached as metadata."""
	n_mu, n_t = resolve_resolution(resolution)
	mu = axis_grid(mu_range, n_mu)
	t = axis_grid(t_range, n_t)
	classifier = _Classifier(params, q_max)
	labels = np.empty((n_t, n_mu), dtype=object)
	fillings = []
	for i, value in enumerate(t):
		row_labels, row_fillings = classifier.row(mu, float(value))
		labels[i] = row_labels
		fillings.append(row_fillings)
	return PhaseMap(mu, t, 't', labels, fillings, classifier.metadata())
