import math
from fractions import Fraction
from typing import Tuple
from ..errors import InvalidParameters

class Filling:
	"""
	Rational filling factor ``p/q`` of a commensurate crystal.

	Attributes
	----------
	p: :class:`int`
		Occupied sites per period
	q: :class:`int`
		Period of the crystal
	value: :class:`fractions.Fraction`
		The exact fraction

	Operations
	----------
	**str(Filling)**
		``'p/q'``
	**Filling < Filling**
		Ordering by value
	"""
	def __init__(self, p: int, q: int):
		if isinstance(p, bool) or isinstance(q, bool) or int(p) != p or int(q) != q:
			raise InvalidParameters('Filling needs integers, got %r/%r'%(p, q), (p, q))
		p, q = int(p), int(q)
		if q < 1 or p < 1 or p > q:
			raise InvalidParameters('Filling must satisfy 0 < p <= q, got %d/%d'%(p, q), (p, q))
		if math.gcd(p, q) != 1:
			raise InvalidParameters('Filling %d/%d is not in lowest terms'%(p, q), (p, q))
		self._p = p
		self._q = q

	@classmethod
	def from_fraction(cls, value: Fraction) -> 'Filling':
		value = Fraction(value)
		return cls(value.numerator, value.denominator)

	def __str__(self):
		return '%d/%d'%(self._p, self._q)

	def __repr__(self):
		return 'Filling(%d, %d)'%(self._p, self._q)

	def __eq__(self, other):
		if not isinstance(other, Filling):
			return NotImplemented
		return (self._p, self._q) == (other._p, other._q)

	def __lt__(self, other: 'Filling'):
		return self.value < other.value

	def __hash__(self):
		return hash((self._p, self._q))

	@property
	def p(self) -> int:
		"""Occupied sites per period."""
		return self._p
	@property
	def q(self) -> int:
		"""Period of the crystal."""
		return self._q
	@property
	def value(self) -> Fraction:
		"""The filling as an exact fraction."""
		return Fraction(self._p, self._q)

class CrystalPhase:
	"""
	A commensurate crystal with its chemical-potential stability window.

	Attributes
	----------
	filling: :class:`Filling`
		The filling factor
	mu_hole: :class:`float`
		Boundary with the crystal missing one particle
	mu_particle: :class:`float`
		Boundary with the crystal carrying one extra particle
	width: :class:`float`
		``mu_particle - mu_hole`` from the independent width series
	distances: :class:`Tuple[int, ...]`
		``r_l`` for ``l = 1…q``
	n: :class:`int`
		Excitation manifold of the occupied sites
	"""
	def __init__(self, filling: Filling, mu_hole: float, mu_particle: float, width: float, distances: Tuple[int,...], n: int = 1):
		self._filling = filling
		self._mu_hole = mu_hole
		self._mu_particle = mu_particle
		self._width = width
		self._distances = tuple(distances)
		self._n = n

	def __str__(self):
		return 'rho=%s on (%.12g, %.12g)'%(self._filling, self._mu_hole, self._mu_particle)

	def __eq__(self, other):
		if not isinstance(other, CrystalPhase):
			return NotImplemented
		return (self._filling, self._mu_hole, self._mu_particle, self._n) == (other._filling, other._mu_hole, other._mu_particle, other._n)

	def contains(self, mu: float) -> bool:
		"""Whether ``mu`` lies strictly inside the window."""
		return self._mu_hole < mu < self._mu_particle

	@property
	def filling(self) -> Filling:
		"""The filling factor."""
		return self._filling
	@property
	def mu_hole(self) -> float:
		"""Lower edge of the window."""
		return self._mu_hole
	@property
	def mu_particle(self) -> float:
		"""Upper edge of the window."""
		return self._mu_particle
	@property
	def width(self) -> float:
		"""Width of the window."""
		return self._width
	@property
	def distances(self) -> Tuple[int,...]:
		"""The distances ``r_1 … r_q``."""
		return self._distances
	@property
	def n(self) -> int:
		"""The excitation manifold."""
		return self._n
