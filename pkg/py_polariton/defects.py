"""Single-defect hopping corrections: melted crystal windows and the floating solid."""
import logging
import math
from typing import List, Optional, Tuple, Union
import numpy as np
from .errors import InvalidParameters
from .models import DefectBand, Filling, MeltedBounds, ModelParams, PhaseMap, StaircaseMap
from .model_core import effective_couplings, first_critical_point
from .staircase import (Multiplicity, axis_grid, enumerate_fillings, mu_hole, mu_particle, resolve_resolution,
	stability_width, static_windows, staircase_map, width_sum)

logger = logging.getLogger(__name__)

KINDS = ('particle','hole')
MARGINAL = 0.1

def _check_j(j_perp: float) -> float:
	if not j_perp >= 0:
		raise InvalidParameters('J_perp must be non-negative, got %r'%j_perp, j_perp)
	return float(j_perp)

def defect_dispersion(kind: str, q: int, j_perp: float, k):
	"""Kinetic energy ``-2q·J_⊥·cos(k·q)`` of a particle-like or hole-like defect with wave number ``k``."""
	return defect_band(kind, q, j_perp).energy(k)

def defect_band(kind: str, q: int, j_perp: float) -> DefectBand:
	if kind not in KINDS:
		raise InvalidParameters('kind must be one of %s, got %r'%(KINDS, kind), kind)
	if isinstance(q, bool) or int(q) != q or q < 1:
		raise InvalidParameters('q must be an integer >= 1, got %r'%q, q)
	return DefectBand(kind, int(q), _check_j(j_perp))

def melted_bounds(filling: Filling, params: ModelParams, j_perp: Optional[float] = None, multiplicity: Multiplicity = (1, 1)) -> MeltedBounds:
	"""
	Window of the ``filling`` crystal once the defect bands are taken into account.

	Parameters
	----------
	filling: :class:`Filling`
		The crystal
	params: :class:`ModelParams`
		Model parameters; ``J_⊥`` follows from ``params.t`` unless given
	j_perp: :class:`Optional[float]`
		Effective hopping overriding ``t·cos²θ_1``
	"""
	j = effective_couplings(params)[0] if j_perp is None else _check_j(j_perp)
	shift = -float(defect_dispersion('particle', filling.q, j, 0.0))
	bounds = MeltedBounds(filling, mu_hole(filling, params, multiplicity=multiplicity) + shift, mu_particle(filling, params, multiplicity=multiplicity) - shift)
	if j > 0:
		width = stability_width(filling, params, multiplicity=multiplicity)
		if not math.isinf(width) and abs(width - 2*shift) < MARGINAL*width:
			logger.warning('%s crystal is within %d%% of melting (width %.3g, 4qJ %.3g); perturbative bounds are marginal', filling, int(MARGINAL*100), width, 2*shift)
	return bounds

def melting_threshold(filling: Filling, j_perp: float, params: Optional[ModelParams] = None) -> float:
	"""Smallest renormalised repulsion at which the ``filling`` crystal survives the hopping ``j_perp``."""
	j = _check_j(j_perp)
	series = width_sum(filling.q, (params or ModelParams()).range_cutoff)
	if j == 0 or math.isinf(series):
		return 0.0
	return 4*filling.q*j/series

def surviving_solids(v_tilde: float, j_perp: float, q_max: int, params: Optional[ModelParams] = None) -> List[Filling]:
	"""Crystals with ``q <= q_max`` whose melted window is still open."""
	params = (params or ModelParams()).with_v_tilde(v_tilde)
	return [filling for filling in enumerate_fillings(q_max) if melted_bounds(filling, params, j_perp).survives]

def floating_map(mu_range: Tuple[float,float], v_tilde_range: Tuple[float,float], j_perp: float, resolution: Union[int,Tuple[int,int]], q_max: int, params: Optional[ModelParams] = None, multiplicity: Multiplicity = (1, 1)) -> PhaseMap:
	"""
	Phase over a ``(mu, v_tilde)`` grid at fixed hopping ``j_perp``.

	Cells inside an open melted window are ``solid``; cells below the band edge of a
	lone |1̃⟩ are ``vacuum``; the rest is ``PF``, or ``uniform`` without repulsion.
	With ``j_perp = 0`` this is :func:`staircase_map`.
	"""
	j = _check_j(j_perp)
	params = params or ModelParams()
	if j == 0:
		return staircase_map(mu_range, v_tilde_range, resolution, q_max, params, multiplicity)
	n_mu, n_v = resolve_resolution(resolution)
	mu = axis_grid(mu_range, n_mu)
	v_tilde = axis_grid(v_tilde_range, n_v)
	if v_tilde[0] < 0:
		raise InvalidParameters('v_tilde must be non-negative', v_tilde_range)
	windows = static_windows(q_max, params, multiplicity)
	onset = first_critical_point(params)
	edge = onset - 2*j
	shifts = {filling: -float(defect_dispersion('particle', filling.q, j, 0.0)) for filling, _, _ in windows}
	labels = np.empty((n_v, n_mu), dtype=object)
	fillings = []
	for i, v in enumerate(v_tilde):
		row: List[Optional[Filling]] = [None]*n_mu
		solid = np.zeros(n_mu, dtype=bool)
		for filling, hole, particle in windows:
			shift = shifts[filling]
			low = onset + hole*v + shift
			high = math.inf if math.isinf(particle) else onset + particle*v - shift
			if not high > low:
				continue
			inside = (mu > low) & (mu < high)
			solid |= inside
			for k in np.nonzero(inside)[0]:
				row[k] = filling
		other = 'PF' if v > 0 else 'uniform'
		labels[i] = np.where(solid, 'solid', np.where(mu < edge, 'vacuum', other))
		fillings.append(row)
	logger.debug('floating map %dx%d at J_perp=%g: %d PF cells', n_v, n_mu, j, int(np.count_nonzero(labels == 'PF')))
	return StaircaseMap(mu, v_tilde, labels, fillings, {'mu_c0': onset, 'j_perp': j})
