"""Single-cavity polaritons, projected couplings and parameter estimates."""
import logging
import math
from typing import List, Optional, Tuple, Union
import numpy as np
from .errors import InvalidParameters, MissingUnitFlag
from .models import ModelParams, PolaritonLevel, ExperimentalInputs, EstimatedParams

logger = logging.getLogger(__name__)

# Hardware values quoted for the nanofiber cavity array, ordinary frequencies in Hz.
QUOTED_VALUES = {'g': 2.03e9, 'gamma': 27.5e6, 'kappa': 30e6, 't': 628e6, 'v1': 500e6}
MATCH_RTOL = 0.02

def _check_n(n: int, minimum: int = 0) -> int:
	if isinstance(n, bool) or int(n) != n or n < minimum:
		raise InvalidParameters('excitation number must be an integer >= %d, got %r'%(minimum, n), n)
	return int(n)

def mixing_angle(n: int, delta: float, g: float) -> float:
	"""
	Mixing angle θ_n of the n-excitation doublet, in ``[0, π/2)``.

	``arctan(2g√n/δ)/2`` on the branch that is continuous through resonance:
	π/4 at δ = 0 and sin²θ → 1 as δ → -∞. θ_0 is 0.
	"""
	n = _check_n(n)
	if g <= 0:
		raise InvalidParameters('g must be positive, got %r'%g, g)
	if n == 0:
		return 0.0
	return float(np.arctan2(2*g*math.sqrt(n), delta)/2)

def eigen_energy(n: int, branch: str, params: ModelParams, mu: Optional[Union[float,np.ndarray]] = None):
	"""
	Energy of the dressed state |n±⟩ measured from the chemical potential.

	Parameters
	----------
	n: :class:`int`
		Excitation number
	branch: :class:`str`
		``'-'`` for the lower polariton, ``'+'`` for the upper one
	params: :class:`ModelParams`
		Model parameters
	mu: :class:`Optional[float]`
		Overrides ``params.mu``; a numpy array evaluates many chemical potentials at once
	"""
	n = _check_n(n)
	if branch not in ('+','-'):
		raise InvalidParameters('branch must be "+" or "-", got %r'%branch, branch)
	mu = params.mu if mu is None else mu
	if n == 0:
		return np.zeros_like(mu, dtype=float) if isinstance(mu, np.ndarray) else 0.0
	sign = 1.0 if branch == '+' else -1.0
	return n*(params.omega - mu) + params.delta/2 + sign*math.sqrt(params.delta**2/4 + n*params.g**2)

def rydberg_weight(n: int, params: ModelParams) -> float:
	"""Per-level factor w_n of the projected interaction, ``J = V(d)·w_n·w_n'``."""
	s = math.sin(mixing_angle(n, params.delta, params.g))
	return s*s if params.rydberg_weight_exponent == 4 else s

def rydberg_weights(params: ModelParams, n_max: Optional[int] = None) -> np.ndarray:
	"""``[w_0, w_1, …, w_nmax]`` with ``w_0 = 0``."""
	n_max = params.n_max if n_max is None else n_max
	return np.array([rydberg_weight(n, params) for n in range(n_max+1)])

def polariton_level(n: int, params: ModelParams) -> PolaritonLevel:
	"""The lower polariton |ñ⟩ at ``params.mu``."""
	theta = mixing_angle(n, params.delta, params.g)
	weight = math.sin(theta)**2 if n else 0.0
	return PolaritonLevel(n, theta, eigen_energy(n, '-', params), weight, n - weight if n else 0.0)

def jc_site_hamiltonian(n: int, params: ModelParams, mu: Optional[float] = None) -> np.ndarray:
	"""
	2x2 block of one cavity with ``n >= 1`` excitations, basis ``(|n,G⟩, |n-1,R⟩)``.

	Its lower eigenpair is ``eigen_energy(n, '-')`` with eigenvector ``(cosθ_n, -sinθ_n)``.
	"""
	n = _check_n(n, 1)
	mu = params.mu if mu is None else mu
	diagonal = n*(params.omega - mu)
	coupling = params.g*math.sqrt(n)
	return np.array([[diagonal, coupling], [coupling, diagonal + params.delta]])

def ladder_amplitude(n: int, delta: float, g: float) -> float:
	"""⟨(n+1)~| a† |ñ⟩ between lower polaritons."""
	n = _check_n(n)
	a = mixing_angle(n, delta, g)
	b = mixing_angle(n+1, delta, g)
	return math.sqrt(n+1)*math.cos(a)*math.cos(b) + math.sqrt(n)*math.sin(a)*math.sin(b)

def hopping_overlap(n: int, m: int, delta: float, g: float) -> float:
	"""Squared overlap β_{n,m} weighting a hop between adjacent manifolds ``m = n + 1``."""
	n = _check_n(n)
	if m != n+1:
		raise InvalidParameters('hopping only connects adjacent manifolds, got n=%r m=%r'%(n, m), (n, m))
	return ladder_amplitude(n, delta, g)**2

def vdw_tail(d: int, v1: float, range_cutoff: Union[int,float] = math.inf) -> float:
	"""van der Waals tail ``v1/d⁶``; zero beyond ``range_cutoff``."""
	if isinstance(d, bool) or int(d) != d or d < 1:
		raise InvalidParameters('distance must be an integer >= 1, got %r'%d, d)
	if d > range_cutoff:
		return 0.0
	return v1/float(d)**6

def effective_interaction(n: int, m: int, d: int, params: ModelParams) -> float:
	"""Projected repulsion J_{n,m}(d) between two lower polaritons ``d`` sites apart."""
	_check_n(n, 1)
	_check_n(m, 1)
	return vdw_tail(d, params.v1, params.range_cutoff)*rydberg_weight(n, params)*rydberg_weight(m, params)

def effective_couplings(params: ModelParams) -> Tuple[float,float]:
	"""``(J_perp, V_tilde)``: hopping ``t·cos²θ_1`` and nearest-neighbour repulsion J_{1,1}(1)."""
	theta = mixing_angle(1, params.delta, params.g)
	w = rydberg_weight(1, params)
	return params.t*math.cos(theta)**2, params.v1*w*w

def mean_photon_density(rho: float, theta_1: float) -> float:
	"""Photons per site of a |1̃⟩ crystal at filling ``rho``."""
	if rho < 0:
		raise InvalidParameters('filling must be non-negative, got %r'%rho, rho)
	return float(rho)*(1 - math.sin(theta_1)**2)

def first_critical_point(params: ModelParams, n: int = 1) -> float:
	"""Chemical potential where E_{n-} vanishes; for ``n = 1`` the onset of the first excitation."""
	n = _check_n(n, 1)
	return params.omega + (params.delta/2 - math.sqrt(params.delta**2/4 + n*params.g**2))/n

def estimate_parameters(inputs: ExperimentalInputs) -> EstimatedParams:
	"""
	Hamiltonian parameters of the cavity array from hardware numbers.

	Rates given as ordinary frequencies are converted to angular ones first, so every
	output is angular; :meth:`EstimatedParams.over_2pi` gives ordinary values.
	"""
	if inputs.frequency_unit is None:
		raise MissingUnitFlag('frequency_unit must be declared as "ordinary" or "angular"', None)
	scale = 2*math.pi if inputs.frequency_unit == 'ordinary' else 1.0
	gamma = inputs.n_r*inputs.gamma_atom*scale
	g0 = math.sqrt(inputs.eta_c*gamma*inputs.c/inputs.cavity_length)
	delta_p = inputs.delta_p*scale
	g = math.sqrt(inputs.n_r)*g0*(inputs.omega_rabi*scale)/delta_p
	kappa = math.pi*inputs.c/(inputs.finesse*inputs.cavity_length)
	t = kappa*math.sqrt(inputs.finesse/(2*math.pi))
	v1 = inputs.c6*scale/inputs.spacing**6
	estimated = EstimatedParams(inputs, g0=g0, g=g, gamma=gamma, kappa=kappa, t=t, v1=v1, lam=g0**2/delta_p)
	for name, formula, quoted, status in compare_with_quoted(estimated):
		if status != 'match':
			logger.warning('%s/2pi: formula gives %.4g Hz, quoted value is %.4g Hz (%s)', name, formula, quoted, status)
	return estimated

def compare_with_quoted(estimated: EstimatedParams) -> List[Tuple[str,float,float,str]]:
	"""Rows ``(name, formula/2π, quoted/2π, status)`` with status ``match``, ``discrepancy`` or ``convention unclear``."""
	rows = []
	for name, quoted in QUOTED_VALUES.items():
		formula = estimated.over_2pi(name)
		if name == 'v1':
			status = 'convention unclear'
		elif abs(formula - quoted) <= MATCH_RTOL*quoted:
			status = 'match'
		else:
			status = 'discrepancy'
		rows.append((name, formula, quoted, status))
	return rows
