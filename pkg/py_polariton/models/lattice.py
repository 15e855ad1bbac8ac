from fractions import Fraction
from typing import Optional, Sequence, Tuple
from .params import ModelParams

class LatticeConfig:
	"""
	Occupation pattern of a periodic ring with its grand-canonical energy.

	Attributes
	----------
	occupations: :class:`Tuple[int, ...]`
		Excitation number per site, the lexicographically first minimum
	energy: :class:`float`
		Energy of the pattern
	minima: :class:`Tuple[Tuple[int, ...], ...]`
		Every minimising pattern found, sorted lexicographically
	degeneracy: :class:`int`
		Number of minimising patterns (may exceed ``len(minima)`` when the list was capped)

	Operations
	----------
	**str(LatticeConfig)**
		The occupations as a digit string, e.g. ``'100100'``
	"""
	def __init__(self, occupations: Sequence[int], energy: float, minima: Optional[Sequence[Sequence[int]]] = None, degeneracy: Optional[int] = None):
		self._occupations = tuple(int(n) for n in occupations)
		self._energy = float(energy)
		self._minima = tuple(sorted(tuple(int(n) for n in m) for m in minima)) if minima else (self._occupations,)
		self._degeneracy = degeneracy if degeneracy is not None else len(self._minima)

	def __str__(self):
		return ''.join(str(n) for n in self._occupations)

	def __eq__(self, other):
		if not isinstance(other, LatticeConfig):
			return NotImplemented
		return self._occupations == other._occupations and self._energy == other._energy

	@property
	def L(self) -> int:
		"""Ring length."""
		return len(self._occupations)
	@property
	def occupations(self) -> Tuple[int,...]:
		"""Excitation number per site."""
		return self._occupations
	@property
	def energy(self) -> float:
		"""Grand-canonical energy."""
		return self._energy
	@property
	def minima(self) -> Tuple[Tuple[int,...],...]:
		"""Every minimising pattern found."""
		return self._minima
	@property
	def degeneracy(self) -> int:
		"""Number of minimising patterns."""
		return self._degeneracy
	@property
	def excitations(self) -> int:
		"""Total excitation number."""
		return sum(self._occupations)
	@property
	def filling(self) -> Optional[Fraction]:
		"""Fraction of occupied sites, ``None`` when the minima disagree on it."""
		values = {sum(1 for n in m if n) for m in self._minima}
		if len(values) != 1:
			return None
		return Fraction(values.pop(), self.L)

	def rotated(self, shift: int) -> 'LatticeConfig':
		"""The pattern moved by ``shift`` sites, same energy."""
		shift %= self.L
		occupations = self._occupations[shift:]+self._occupations[:shift]
		return LatticeConfig(occupations, self._energy)

	def canonical(self, occupations: Optional[Sequence[int]] = None) -> Tuple[int,...]:
		"""Lexicographically smallest rotation of ``occupations`` (default: this pattern)."""
		pattern = tuple(occupations) if occupations is not None else self._occupations
		return min(pattern[i:]+pattern[:i] for i in range(len(pattern)))

	def distinct_minima(self) -> Tuple[Tuple[int,...],...]:
		"""The minima with rotated copies merged."""
		return tuple(sorted({self.canonical(m) for m in self._minima}))

	def recompute_energy(self, params: ModelParams) -> float:
		"""Energy of the pattern from a plain pairwise loop over the ring."""
		from ..model_core import effective_interaction, eigen_energy
		L = self.L
		total = 0.0
		for n in self._occupations:
			total += eigen_energy(n, '-', params)
		for i in range(L):
			for j in range(i+1, L):
				a, b = self._occupations[i], self._occupations[j]
				if a and b:
					total += effective_interaction(a, b, min(j-i, L-(j-i)), params)
		return total

class SpectrumResult:
	"""
	Ground-state data of an exact diagonalisation.

	Attributes
	----------
	ground_energy: :class:`float`
		Lowest eigenvalue
	filling: :class:`float`
		Occupied sites per site in the ground state
	photon_density: :class:`float`
		Mean photon number per site in the ground state
	degeneracy: :class:`int`
		Number of eigenvalues within 1e-10 of the lowest
	dimension: :class:`int`
		Dimension of the diagonalised space
	excitations: :class:`Tuple[int, ...]`
		Excitation-number sectors hosting a ground state
	"""
	def __init__(self, ground_energy: float, filling: float, photon_density: float, degeneracy: int, dimension: int, excitations: Tuple[int,...] = ()):
		self._ground_energy = float(ground_energy)
		self._filling = float(filling)
		self._photon_density = float(photon_density)
		self._degeneracy = int(degeneracy)
		self._dimension = int(dimension)
		self._excitations = tuple(excitations)

	def __str__(self):
		return 'E0=%.12g (dim=%d, degeneracy=%d)'%(self._ground_energy, self._dimension, self._degeneracy)

	@property
	def ground_energy(self) -> float:
		"""Lowest eigenvalue."""
		return self._ground_energy
	@property
	def filling(self) -> float:
		"""Ground-state filling ⟨n⟩/L."""
		return self._filling
	@property
	def photon_density(self) -> float:
		"""Ground-state ⟨a†a⟩/L."""
		return self._photon_density
	@property
	def degeneracy(self) -> int:
		"""Ground-state degeneracy."""
		return self._degeneracy
	@property
	def dimension(self) -> int:
		"""Dimension of the diagonalised space."""
		return self._dimension
	@property
	def excitations(self) -> Tuple[int,...]:
		"""Sectors hosting a ground state."""
		return self._excitations
