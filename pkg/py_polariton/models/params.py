import math
from typing import Any, Dict, Optional, Union
from numpy import float64
from scipy import constants
from ..errors import InvalidParameters, UnknownConfigKey
from ..utils import read_config_file

CONVENTIONS = {'literal': 4, 'calibrated': 2, 'paper': 2}

class ModelParams:
	"""
	Physical and effective parameters of the chain, in units where ``g = 1`` unless stated otherwise.

	Two of ``omega``, ``epsilon`` and ``delta`` fix the third. The stored detuning is
	always ``omega - epsilon``.

	Attributes
	----------
	omega: :class:`float`
		Effective photon frequency
	epsilon: :class:`float`
		Effective two-level transition frequency
	delta: :class:`float`
		Detuning ``omega - epsilon``
	g: :class:`float`
		Collective atom-photon coupling
	mu: :class:`float`
		Chemical potential
	t: :class:`float`
		Photon hopping rate
	v1: :class:`float`
		Nearest-neighbour van der Waals strength
	n_max: :class:`int`
		Highest excitation number kept per cavity (1 or 2)
	range_cutoff: :class:`float`
		Largest interaction distance in sites, ``inf`` for the converged series
	rydberg_weight_exponent: :class:`int`
		4 weighs a pair by sin²θ·sin²θ', 2 by sinθ·sinθ'

	Operations
	----------
	**ModelParams == ModelParams**
		Field-wise equality. Instances are hashable and can key caches.
	"""
	FIELDS = ('omega','epsilon','delta','g','mu','t','v1','n_max','range_cutoff','rydberg_weight_exponent')

	def __init__(self, omega: float = 0.0, epsilon: Optional[float] = None, delta: Optional[float] = None, g: float = 1.0, mu: float = 0.0, t: float = 0.0, v1: float = 0.0, n_max: int = 1, range_cutoff: Union[int,float] = math.inf, rydberg_weight_exponent: int = 4):
		omega = _number('omega', omega)
		if epsilon is None and delta is None:
			epsilon = omega
		elif epsilon is None:
			epsilon = omega - _number('delta', delta)
		elif delta is not None:
			epsilon = _number('epsilon', epsilon)
			if abs((omega - epsilon) - _number('delta', delta)) > 1e-12:
				raise InvalidParameters('Inconsistent detuning: delta=%r but omega - epsilon = %r'%(delta, omega - epsilon), (omega, epsilon, delta))
		self._omega = float(omega)
		self._epsilon = _number('epsilon', epsilon)
		self._delta = self._omega - self._epsilon
		self._g = _number('g', g)
		self._mu = _number('mu', mu)
		self._t = _number('t', t)
		self._v1 = _number('v1', v1)
		if self._g <= 0:
			raise InvalidParameters('g must be positive, got %r'%g, g)
		if self._t < 0:
			raise InvalidParameters('t must be non-negative, got %r'%t, t)
		if self._v1 < 0:
			raise InvalidParameters('v1 must be non-negative, got %r'%v1, v1)
		if n_max not in (1, 2) or isinstance(n_max, bool):
			raise InvalidParameters('n_max must be 1 or 2, got %r'%n_max, n_max)
		self._n_max = int(n_max)
		if isinstance(range_cutoff, str) or range_cutoff is None or not range_cutoff >= 1:
			raise InvalidParameters('range_cutoff must be >= 1 or inf, got %r'%range_cutoff, range_cutoff)
		if not math.isinf(range_cutoff) and range_cutoff != int(range_cutoff):
			raise InvalidParameters('range_cutoff must be an integer number of sites, got %r'%range_cutoff, range_cutoff)
		self._range_cutoff = math.inf if math.isinf(range_cutoff) else int(range_cutoff)
		if rydberg_weight_exponent not in (2, 4):
			raise InvalidParameters('rydberg_weight_exponent must be 2 or 4, got %r'%rydberg_weight_exponent, rydberg_weight_exponent)
		self._rydberg_weight_exponent = int(rydberg_weight_exponent)

	def __eq__(self, other):
		if not isinstance(other, ModelParams):
			return NotImplemented
		return self._key() == other._key()

	def __hash__(self):
		return hash(self._key())

	def __repr__(self):
		return 'ModelParams(%s)'%', '.join('%s=%r'%(name, getattr(self, name)) for name in self.FIELDS)

	def _key(self):
		return tuple(getattr(self, name) for name in self.FIELDS)

	@property
	def omega(self) -> float:
		"""Effective photon frequency."""
		return self._omega
	@property
	def epsilon(self) -> float:
		"""Effective two-level transition frequency."""
		return self._epsilon
	@property
	def delta(self) -> float:
		"""Detuning ``omega - epsilon``."""
		return self._delta
	@property
	def g(self) -> float:
		"""Collective atom-photon coupling."""
		return self._g
	@property
	def mu(self) -> float:
		"""Chemical potential."""
		return self._mu
	@property
	def t(self) -> float:
		"""Photon hopping rate."""
		return self._t
	@property
	def v1(self) -> float:
		"""Nearest-neighbour van der Waals strength."""
		return self._v1
	@property
	def n_max(self) -> int:
		"""Photon-occupancy truncation."""
		return self._n_max
	@property
	def range_cutoff(self) -> Union[int,float]:
		"""Largest interaction distance in sites."""
		return self._range_cutoff
	@property
	def rydberg_weight_exponent(self) -> int:
		"""Total power of sinθ in the projected pair interaction."""
		return self._rydberg_weight_exponent
	@property
	def convention(self) -> str:
		"""``'literal'`` for the sin⁴ weighting, ``'calibrated'`` for the calibrated sin² weighting."""
		return 'literal' if self._rydberg_weight_exponent == 4 else 'calibrated'

	def as_dict(self) -> Dict[str,Any]:
		"""Every field as a plain mapping (``inf`` kept as a float)."""
		return {name: getattr(self, name) for name in self.FIELDS}

	def replace(self, **changes) -> 'ModelParams':
		"""Returns a copy with some fields changed. Changing ``omega`` alone keeps the detuning."""
		unknown = set(changes) - set(self.FIELDS)
		if unknown:
			raise UnknownConfigKey('Unknown parameter: %s'%sorted(unknown)[0], sorted(unknown)[0])
		base = self.as_dict()
		if 'epsilon' not in changes and ('delta' in changes or 'omega' in changes):
			base.pop('epsilon')
		else:
			base.pop('delta')
		base.update(changes)
		return ModelParams(**base)

	def with_convention(self, convention: str) -> 'ModelParams':
		"""Switches between the ``'literal'`` and ``'calibrated'`` interaction weighting."""
		if convention not in CONVENTIONS:
			raise InvalidParameters('Unknown convention %r, expected one of %s'%(convention, sorted(CONVENTIONS)), convention)
		return self.replace(rydberg_weight_exponent=CONVENTIONS[convention])

	def with_v_tilde(self, v_tilde: float) -> 'ModelParams':
		"""Returns a copy whose ``v1`` yields the renormalised nearest-neighbour strength ``v_tilde``."""
		from ..model_core import rydberg_weight
		weight = rydberg_weight(1, self)
		return self.replace(v1=float(v_tilde)/(weight*weight))

	@classmethod
	def from_dict(cls, data: Dict[str,Any]) -> 'ModelParams':
		"""Builds parameters from a flat mapping. ``convention`` is accepted as an alias of the weight exponent."""
		data = dict(data)
		for key in data:
			if key not in cls.FIELDS and key != 'convention':
				raise UnknownConfigKey('Unknown config key: %s'%key, key)
		convention = data.pop('convention', None)
		if convention is not None:
			if convention not in CONVENTIONS:
				raise InvalidParameters('Unknown convention %r, expected one of %s'%(convention, sorted(CONVENTIONS)), convention)
			data['rydberg_weight_exponent'] = CONVENTIONS[convention]
		return cls(**data)

	@classmethod
	def from_file(cls, path: str) -> 'ModelParams':
		"""Reads a flat ``key = value`` config file."""
		return cls.from_dict(read_config_file(path))

class ExperimentalInputs:
	"""
	Hardware numbers entering the parameter estimates. Lengths are in metres, ``c6`` in
	frequency·m⁶. Rates and ``c6`` are ordinary or angular frequencies according to
	``frequency_unit``, which has no default.

	Attributes
	----------
	eta_c: :class:`float`
		Channeling efficiency (the quoted value is ``2π·0.01``)
	gamma_atom: :class:`float`
		Decay of a single Rydberg atom
	n_r: :class:`float`
		Number of atoms per ensemble
	c: :class:`float`
		Speed of light
	cavity_length: :class:`float`
		Cavity length
	omega_rabi: :class:`float`
		Rabi frequency of the classical field
	delta_p: :class:`float`
		Detuning of the intermediate level
	finesse: :class:`float`
		Cavity finesse
	c6: :class:`float`
		van der Waals coefficient
	spacing: :class:`float`
		Distance between neighbouring cavities
	frequency_unit: :class:`str`
		``'ordinary'`` (f) or ``'angular'`` (2πf)
	"""
	FIELDS = ('eta_c','gamma_atom','n_r','c','cavity_length','omega_rabi','delta_p','finesse','c6','spacing','frequency_unit')
	UNITS = ('ordinary','angular')

	def __init__(self, eta_c: float = 2*math.pi*0.01, gamma_atom: float = 550.0, n_r: float = 5e4, c: float = constants.c, cavity_length: float = 10e-3, omega_rabi: float = 100e6, delta_p: float = 1e9, finesse: float = 500.0, c6: float = 610e9*1e-36, spacing: float = 2.4e-6, frequency_unit: Optional[str] = None):
		self._values = {}
		for name, value in zip(self.FIELDS[:-1], (eta_c, gamma_atom, n_r, c, cavity_length, omega_rabi, delta_p, finesse, c6, spacing)):
			value = _number(name, value)
			if value <= 0:
				raise InvalidParameters('%s must be positive, got %r'%(name, value), name)
			self._values[name] = value
		if frequency_unit is not None and frequency_unit not in self.UNITS:
			raise InvalidParameters('frequency_unit must be one of %s, got %r'%(self.UNITS, frequency_unit), frequency_unit)
		self._frequency_unit = frequency_unit

	def __getattr__(self, name):
		values = self.__dict__.get('_values', {})
		if name in values:
			return values[name]
		raise AttributeError(name)

	def __eq__(self, other):
		if not isinstance(other, ExperimentalInputs):
			return NotImplemented
		return self.as_dict() == other.as_dict()

	@property
	def frequency_unit(self) -> Optional[str]:
		"""``'ordinary'`` or ``'angular'``; ``None`` until declared."""
		return self._frequency_unit

	def as_dict(self) -> Dict[str,Any]:
		data = dict(self._values)
		data['frequency_unit'] = self._frequency_unit
		return data

	@classmethod
	def from_dict(cls, data: Dict[str,Any]) -> 'ExperimentalInputs':
		for key in data:
			if key not in cls.FIELDS:
				raise UnknownConfigKey('Unknown config key: %s'%key, key)
		return cls(**data)

class EstimatedParams:
	"""
	Hamiltonian parameters estimated from :class:`ExperimentalInputs`. Every rate is
	stored as an angular frequency; :meth:`over_2pi` gives the ordinary value.

	Attributes
	----------
	g0: :class:`float`
		Single-atom coupling
	g: :class:`float`
		Collective coupling
	gamma: :class:`float`
		Enhanced decay of the Rydberg superatom
	kappa: :class:`float`
		Cavity decay
	t: :class:`float`
		Photon hopping rate
	v1: :class:`float`
		Nearest-neighbour van der Waals strength
	lam: :class:`float`
		Stark term ``g0²/delta_p``, reported only
	inputs: :class:`ExperimentalInputs`
		The inputs used
	"""
	QUANTITIES = ('g0','g','gamma','kappa','t','v1','lam')

	def __init__(self, inputs: ExperimentalInputs, **values: float):
		self._inputs = inputs
		self._values = {name: float64(values[name]) for name in self.QUANTITIES}

	def __getattr__(self, name):
		values = self.__dict__.get('_values', {})
		if name in values:
			return values[name]
		raise AttributeError(name)

	@property
	def inputs(self) -> ExperimentalInputs:
		"""The experimental inputs."""
		return self._inputs

	def over_2pi(self, name: str) -> float:
		"""The quantity ``name`` divided by 2π."""
		return float(self._values[name]/(2*math.pi))

	def as_dict(self) -> Dict[str,float]:
		return {name: float(value) for name, value in self._values.items()}

def _number(name: str, value: Any) -> float:
	if isinstance(value, bool) or not isinstance(value, (int, float)) and not hasattr(value, '__float__'):
		raise InvalidParameters('%s must be a number, got %r'%(name, value), name)
	value = float(value)
	if math.isnan(value):
		raise InvalidParameters('%s must not be NaN'%name, name)
	return value
