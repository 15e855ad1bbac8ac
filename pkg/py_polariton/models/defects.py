from typing import Tuple
import numpy as np
from .fillings import Filling

class DefectBand:
	"""
	Tight-binding band of one particle-like or hole-like defect in a period-``q`` crystal.

	Attributes
	----------
	kind: :class:`str`
		``'particle'`` or ``'hole'``
	q: :class:`int`
		Period of the host crystal
	j_perp: :class:`float`
		Effective hopping
	"""
	def __init__(self, kind: str, q: int, j_perp: float):
		self._kind = kind
		self._q = q
		self._j_perp = j_perp

	def __str__(self):
		return '%s-like defect band (q=%d)'%(self._kind, self._q)

	@property
	def kind(self) -> str:
		"""``'particle'`` or ``'hole'``."""
		return self._kind
	@property
	def q(self) -> int:
		"""Period of the host crystal."""
		return self._q
	@property
	def j_perp(self) -> float:
		"""Effective hopping."""
		return self._j_perp
	@property
	def bandwidth_factor(self) -> float:
		"""``2q·J_⊥``, half the bandwidth."""
		return 2*self._q*self._j_perp
	@property
	def minimum(self) -> float:
		"""Band bottom, reached at zero wave number."""
		return -self.bandwidth_factor

	def energy(self, k):
		"""Dispersion ``-2q·J_⊥·cos(k·q)``; accepts scalars and arrays."""
		return -self.bandwidth_factor*np.cos(np.asarray(k)*self._q)

	def sample(self, points: int = 64) -> Tuple[np.ndarray,np.ndarray]:
		"""Wave numbers across ``[-π/q, π/q]`` and the band energies there."""
		k = np.linspace(-np.pi/self._q, np.pi/self._q, points)
		return k, self.energy(k)

class MeltedBounds:
	"""
	Stability window of a crystal shrunk by the defect kinetic energy.

	Attributes
	----------
	filling: :class:`Filling`
		The crystal
	mu_down: :class:`float`
		Lower edge ``mu_hole + 2q·J_⊥``
	mu_up: :class:`float`
		Upper edge ``mu_particle - 2q·J_⊥``
	survives: :class:`bool`
		Whether the window is still open
	"""
	def __init__(self, filling: Filling, mu_down: float, mu_up: float):
		self._filling = filling
		self._mu_down = mu_down
		self._mu_up = mu_up

	def __str__(self):
		return 'rho=%s on (%.12g, %.12g)%s'%(self._filling, self._mu_down, self._mu_up, '' if self.survives else ' melted')

	def __eq__(self, other):
		if not isinstance(other, MeltedBounds):
			return NotImplemented
		return (self._filling, self._mu_down, self._mu_up) == (other._filling, other._mu_down, other._mu_up)

	@property
	def filling(self) -> Filling:
		"""The crystal."""
		return self._filling
	@property
	def mu_down(self) -> float:
		"""Lower edge."""
		return self._mu_down
	@property
	def mu_up(self) -> float:
		"""Upper edge."""
		return self._mu_up
	@property
	def survives(self) -> bool:
		"""``mu_up > mu_down``."""
		return self._mu_up > self._mu_down
