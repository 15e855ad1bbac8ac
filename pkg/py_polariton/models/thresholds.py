class ResonantThresholds:
	"""
	Characteristic chemical potentials of the resonant chain with up to two excitations per cavity.

	Attributes
	----------
	mu_c0: :class:`float`
		Onset of the first |1̃⟩
	mu_c1: :class:`float`
		Full filling by |1̃⟩
	mu_c2: :class:`float`
		Degeneracy of the one- and two-excitation lower polaritons
	mu_c3: :class:`float`
		Full filling by |2̃⟩
	v_crit: :class:`float`
		Interaction strength at which ``mu_c1`` meets ``mu_c2``
	strong_plrri: :class:`bool`
		``mu_c1 > mu_c2``
	"""
	def __init__(self, mu_c0: float, mu_c1: float, mu_c2: float, mu_c3: float, v_crit: float):
		self._mu_c0 = mu_c0
		self._mu_c1 = mu_c1
		self._mu_c2 = mu_c2
		self._mu_c3 = mu_c3
		self._v_crit = v_crit

	def __str__(self):
		return 'mu_c1=%.6g mu_c2=%.6g mu_c3=%.6g (%s)'%(self._mu_c1, self._mu_c2, self._mu_c3, 'strong' if self.strong_plrri else 'weak')

	@property
	def mu_c0(self) -> float:
		"""Onset of the first |1̃⟩."""
		return self._mu_c0
	@property
	def mu_c1(self) -> float:
		"""Full filling by |1̃⟩."""
		return self._mu_c1
	@property
	def mu_c2(self) -> float:
		"""E₁₋ = E₂₋ degeneracy point."""
		return self._mu_c2
	@property
	def mu_c3(self) -> float:
		"""Full filling by |2̃⟩."""
		return self._mu_c3
	@property
	def v_crit(self) -> float:
		"""Interaction strength where the two regimes meet."""
		return self._v_crit
	@property
	def strong_plrri(self) -> bool:
		"""Whether the repulsion is strong enough to skip uniform |1̃⟩ filling."""
		return self._mu_c1 > self._mu_c2

	def as_dict(self):
		return {'mu_c0': self._mu_c0, 'mu_c1': self._mu_c1, 'mu_c2': self._mu_c2, 'mu_c3': self._mu_c3, 'v_crit': self._v_crit, 'strong_plrri': self.strong_plrri}
