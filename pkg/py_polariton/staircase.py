"""Zero-hopping Devil's staircase of commensurate |ñ⟩ crystals."""
import logging
import math
from typing import List, Optional, Sequence, Tuple, Union
import numpy as np
from .cache import caching
from .errors import ConsistencyError, InvalidParameters, WindowOverlapError
from .models import CrystalPhase, Filling, ModelParams, StaircaseMap
from .model_core import first_critical_point, rydberg_weight
from .utils import converge_series

logger = logging.getLogger(__name__)

WIDTH_RTOL = 1e-10
OVERLAP_TOL = 1e-12

Multiplicity = Tuple[float,float]

def enumerate_fillings(q_max: int) -> List[Filling]:
	"""Every ``p/q`` in ``(0, 1]`` with ``q <= q_max``, ascending (Farey sequence without 0)."""
	if isinstance(q_max, bool) or int(q_max) != q_max or q_max < 1:
		raise InvalidParameters('q_max must be an integer >= 1, got %r'%q_max, q_max)
	q_max = int(q_max)
	a, b, c, d = 0, 1, 1, q_max
	fillings = []
	while c <= d:
		fillings.append(Filling(c, d))
		k = (q_max + b)//d
		a, b, c, d = c, d, k*c - a, k*d - b
	return fillings

def crystal_distances(filling: Filling, l: int) -> int:
	"""
	Distance ``r_l`` spanned by ``l`` consecutive gaps of the most uniform ``p/q`` crystal.

	``l·q/p`` itself when it is an integer, ``floor(l·q/p)`` otherwise.
	"""
	if isinstance(l, bool) or int(l) != l or l < 1:
		raise InvalidParameters('l must be an integer >= 1, got %r'%l, l)
	return (int(l)*filling.q)//filling.p

def crystal_configuration(filling: Filling, L: int) -> Tuple[int,...]:
	"""Occupations of the ``p/q`` crystal on a ring of ``L`` sites, particles at ``floor(k·q/p)``."""
	if L % filling.q:
		raise InvalidParameters('ring length %d is not a multiple of the period %d'%(L, filling.q), (L, filling.q))
	occupations = [0]*L
	for k in range(L*filling.p//filling.q):
		occupations[(k*filling.q)//filling.p] = 1
	return tuple(occupations)

def _unit_tail(d: int, range_cutoff: float) -> float:
	if d < 1:
		return math.inf
	if d > range_cutoff:
		return 0.0
	return 1.0/float(d)**6

@caching
def incommensurate_sum(p: int, q: int, range_cutoff: float = math.inf) -> float:
	"""Σ over ``l`` not a multiple of ``p`` of ``(r_l+1)J(r_l) - r_l J(r_l+1)`` with ``J(d) = 1/d⁶``."""
	if p == 1:
		return 0.0
	def term(k: int) -> float:
		l = k + (k - 1)//(p - 1)
		r = (l*q)//p
		return (r + 1)*_unit_tail(r, range_cutoff) - r*_unit_tail(r + 1, range_cutoff)
	return converge_series(term)

@caching
def commensurate_sums(q: int, range_cutoff: float = math.inf) -> Tuple[float,float]:
	"""
	``(particle, hole)`` sums over the multiples ``kq`` with ``J(d) = 1/d⁶``.

	The particle sum is infinite for ``q = 1``: a full lattice has no room for another particle.
	"""
	if q == 1:
		particle = math.inf
	else:
		particle = converge_series(lambda k: k*q*_unit_tail(k*q - 1, range_cutoff) - (k*q - 1)*_unit_tail(k*q, range_cutoff))
	hole = converge_series(lambda k: (k*q + 1)*_unit_tail(k*q, range_cutoff) - k*q*_unit_tail(k*q + 1, range_cutoff))
	return particle, hole

@caching
def width_sum(q: int, range_cutoff: float = math.inf) -> float:
	"""Σ_k kq[J(kq+1) + J(kq-1) - 2J(kq)] with ``J(d) = 1/d⁶``."""
	if q == 1:
		return math.inf
	return converge_series(lambda k: k*q*(_unit_tail(k*q + 1, range_cutoff) + _unit_tail(k*q - 1, range_cutoff) - 2*_unit_tail(k*q, range_cutoff)))

def window_coefficients(filling: Filling, range_cutoff: float = math.inf, multiplicity: Multiplicity = (1, 1)) -> Tuple[float,float]:
	"""
	``(hole, particle)`` offsets of the window above the onset, per unit nearest-neighbour
	repulsion, for a crystal of single excitations.

	``multiplicity`` scales the incommensurate and the commensurate sums.
	"""
	a, b = multiplicity
	incommensurate = incommensurate_sum(filling.p, filling.q, range_cutoff)
	particle, hole = commensurate_sums(filling.q, range_cutoff)
	if math.isinf(particle):
		return a*incommensurate + b*hole, math.inf
	return a*incommensurate + b*hole, a*incommensurate + b*particle

def manifold_strength(params: ModelParams, n: int = 1) -> float:
	"""Nearest-neighbour repulsion J_{n,n}(1) between two |ñ⟩."""
	w = rydberg_weight(n, params)
	return params.v1*w*w

def _edge(coefficient: float, params: ModelParams, n: int) -> float:
	if math.isinf(coefficient):
		return math.inf
	return first_critical_point(params, n) + manifold_strength(params, n)*coefficient/n

def mu_particle(filling: Filling, params: ModelParams, n: int = 1, multiplicity: Multiplicity = (1, 1)) -> float:
	"""Chemical potential above which the ``filling`` crystal of |ñ⟩ takes one more particle."""
	return _edge(window_coefficients(filling, params.range_cutoff, multiplicity)[1], params, n)

def mu_hole(filling: Filling, params: ModelParams, n: int = 1, multiplicity: Multiplicity = (1, 1)) -> float:
	"""Chemical potential below which the ``filling`` crystal of |ñ⟩ loses a particle."""
	return _edge(window_coefficients(filling, params.range_cutoff, multiplicity)[0], params, n)

def stability_width(filling: Filling, params: ModelParams, n: int = 1, multiplicity: Multiplicity = (1, 1)) -> float:
	"""Width of the stability window, summed directly (depends on ``q`` only)."""
	series = width_sum(filling.q, params.range_cutoff)
	if math.isinf(series):
		return math.inf
	return multiplicity[1]*manifold_strength(params, n)*series/n

def crystal_phase(filling: Filling, params: ModelParams, n: int = 1, multiplicity: Multiplicity = (1, 1)) -> CrystalPhase:
	"""Window of one crystal, with the two width computations checked against each other."""
	hole = mu_hole(filling, params, n, multiplicity)
	particle = mu_particle(filling, params, n, multiplicity)
	width = stability_width(filling, params, n, multiplicity)
	if not math.isinf(width) and abs((particle - hole) - width) > WIDTH_RTOL*max(1.0, abs(hole)):
		raise ConsistencyError('width of %s: window difference %.15g, series %.15g'%(filling, particle - hole, width), (particle - hole, width))
	distances = tuple(crystal_distances(filling, l) for l in range(1, filling.q + 1))
	return CrystalPhase(filling, hole, particle, width, distances, n)

def check_windows(phases: Sequence[CrystalPhase]):
	"""Raises :class:`WindowOverlapError` if the windows are not disjoint and ordered like their fillings."""
	ordered = sorted(phases, key=lambda phase: phase.filling.value)
	for phase in ordered:
		if phase.mu_particle < phase.mu_hole - OVERLAP_TOL:
			raise WindowOverlapError('window of %s is inverted'%phase.filling, phase)
	for lower, upper in zip(ordered, ordered[1:]):
		if lower.mu_particle > upper.mu_hole + OVERLAP_TOL*max(1.0, abs(upper.mu_hole)):
			raise WindowOverlapError('windows of %s and %s overlap: %.15g > %.15g'%(lower.filling, upper.filling, lower.mu_particle, upper.mu_hole), (lower, upper))

def staircase_sequence(v_tilde: float, q_max: int, params: Optional[ModelParams] = None, multiplicity: Multiplicity = (1, 1)) -> List[CrystalPhase]:
	"""Crystals with ``q <= q_max`` at one interaction strength, in ascending chemical potential."""
	params = (params or ModelParams()).with_v_tilde(v_tilde)
	phases = [crystal_phase(filling, params, multiplicity=multiplicity) for filling in enumerate_fillings(q_max)]
	check_windows(phases)
	return phases

def finite_size_bound(L: int, params: ModelParams) -> float:
	"""Bound ``2·Σ_{d >= L//2} (d+1)·J(d)`` on how far ring windows can move from the infinite-chain ones."""
	if L < 2:
		raise InvalidParameters('ring length must be at least 2, got %r'%L, L)
	scale = manifold_strength(params)
	if scale == 0:
		return 0.0
	return 2*scale*converge_series(lambda d: (d + 1)*_unit_tail(d, params.range_cutoff), start=L//2)

def axis_grid(value_range: Tuple[float,float], points: int) -> np.ndarray:
	low, high = value_range
	if points < 2:
		raise InvalidParameters('resolution must be at least 2 per axis, got %r'%points, points)
	if not high > low:
		raise InvalidParameters('empty range (%r, %r)'%(low, high), value_range)
	return np.linspace(low, high, points)

def resolve_resolution(resolution: Union[int,Tuple[int,int]]) -> Tuple[int,int]:
	"""``(mu points, second-axis points)`` from an int or a pair."""
	if isinstance(resolution, int):
		return resolution, resolution
	return int(resolution[0]), int(resolution[1])

def static_windows(q_max: int, params: ModelParams, multiplicity: Multiplicity = (1, 1)) -> List[Tuple[Filling,float,float]]:
	"""``(filling, hole, particle)`` coefficients per unit repulsion, checked for ordering."""
	if q_max < 2:
		raise InvalidParameters('q_max must be at least 2, got %r'%q_max, q_max)
	windows = []
	for filling in enumerate_fillings(q_max):
		hole, particle = window_coefficients(filling, params.range_cutoff, multiplicity)
		windows.append((filling, hole, particle))
	for filling, hole, particle in windows:
		if particle < hole:
			raise WindowOverlapError('window of %s is inverted'%filling, filling)
	for (lower, _, top), (upper, bottom, _) in zip(windows, windows[1:]):
		if top > bottom + OVERLAP_TOL:
			raise WindowOverlapError('windows of %s and %s overlap'%(lower, upper), (lower, upper))
	return windows

def staircase_map(mu_range: Tuple[float,float], v_tilde_range: Tuple[float,float], resolution: Union[int,Tuple[int,int]], q_max: int, params: Optional[ModelParams] = None, multiplicity: Multiplicity = (1, 1)) -> StaircaseMap:
	"""
	Filling of the zero-hopping ground state over a ``(mu, v_tilde)`` grid.

	Parameters
	----------
	mu_range: :class:`Tuple[float, float]`
		Lowest and highest chemical potential
	v_tilde_range: :class:`Tuple[float, float]`
		Lowest and highest renormalised nearest-neighbour repulsion
	resolution: :class:`Union[int, Tuple[int, int]]`
		Points along ``mu`` and along ``v_tilde``
	q_max: :class:`int`
		Largest crystal period resolved; other cells are ``transition``
	params: :class:`Optional[ModelParams]`
		Supplies ``omega``, ``delta``, ``g`` and ``range_cutoff``
	multiplicity: :class:`Tuple[float, float]`
		Scales the incommensurate and commensurate window sums
	"""
	params = params or ModelParams()
	n_mu, n_v = resolve_resolution(resolution)
	mu = axis_grid(mu_range, n_mu)
	v_tilde = axis_grid(v_tilde_range, n_v)
	if v_tilde[0] < 0:
		raise InvalidParameters('v_tilde must be non-negative', v_tilde_range)
	windows = static_windows(q_max, params, multiplicity)
	onset = first_critical_point(params)
	labels = np.empty((n_v, n_mu), dtype=object)
	fillings = []
	for i, v in enumerate(v_tilde):
		row: List[Optional[Filling]] = [None]*n_mu
		occupied = np.zeros(n_mu, dtype=bool)
		for filling, hole, particle in windows:
			low = onset + hole*v
			high = math.inf if math.isinf(particle) else onset + particle*v
			inside = (mu > low) & (mu < high)
			if np.any(inside & occupied):
				raise WindowOverlapError('cells claimed twice at v_tilde=%g (filling %s)'%(v, filling), filling)
			occupied |= inside
			for j in np.nonzero(inside)[0]:
				row[j] = filling
		labels[i] = np.where(occupied, 'solid', np.where(mu < onset, 'vacuum', 'transition'))
		fillings.append(row)
	logger.debug('staircase map %dx%d: %d solid cells', n_v, n_mu, int(np.count_nonzero(labels == 'solid')))
	return StaircaseMap(mu, v_tilde, labels, fillings, {'mu_c0': onset})
