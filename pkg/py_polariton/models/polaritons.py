class PolaritonLevel:
	"""
	Lower dressed state |ñ−⟩ of one cavity.

	Attributes
	----------
	n: :class:`int`
		Excitation number
	theta_n: :class:`float`
		Mixing angle in ``[0, π/2)``
	energy_minus: :class:`float`
		Grand-canonical energy of the lower branch
	rydberg_weight: :class:`float`
		Probability sin²θ of the Rydberg component
	photon_weight_minus: :class:`float`
		Mean photon number of the state

	Operations
	----------
	**str(PolaritonLevel)**
		Short label such as ``|2~>``
	"""
	def __init__(self, n: int, theta_n: float, energy_minus: float, rydberg_weight: float, photon_weight_minus: float):
		self._n = n
		self._theta_n = theta_n
		self._energy_minus = energy_minus
		self._rydberg_weight = rydberg_weight
		self._photon_weight_minus = photon_weight_minus

	def __str__(self):
		return '|%d~>'%self._n

	def __eq__(self, other):
		if not isinstance(other, PolaritonLevel):
			return NotImplemented
		return (self._n, self._theta_n, self._energy_minus) == (other._n, other._theta_n, other._energy_minus)

	@property
	def n(self) -> int:
		"""The excitation number."""
		return self._n
	@property
	def theta_n(self) -> float:
		"""The mixing angle in radians."""
		return self._theta_n
	@property
	def energy_minus(self) -> float:
		"""The energy of the lower branch at the chemical potential of the parameters."""
		return self._energy_minus
	@property
	def rydberg_weight(self) -> float:
		"""sin²θ, the weight of the Rydberg component."""
		return self._rydberg_weight
	@property
	def photon_weight_minus(self) -> float:
		"""Mean photon number ``n - sin²θ`` (0 for the vacuum)."""
		return self._photon_weight_minus
