from typing import Dict, Iterator, List, Optional, Tuple
import numpy as np
from .fillings import Filling

class PhaseMap:
	"""
	Rectangular grid over ``mu`` and a second axis (``v_tilde`` or ``t``) with a
	label and an optional filling per cell. Cells are indexed ``[axis, mu]``.

	Attributes
	----------
	mu: :class:`numpy.ndarray`
		Chemical potential samples
	axis: :class:`numpy.ndarray`
		Samples of the second axis
	axis_name: :class:`str`
		Name of the second axis, used as CSV column
	labels: :class:`numpy.ndarray`
		``(len(axis), len(mu))`` array of labels
	fillings: :class:`List[List[Optional[Filling]]]`
		Filling per cell, ``None`` where the cell has no commensurate crystal
	metadata: :class:`Dict[str, float]`
		Extra scalars reported with the map (thresholds, couplings)

	Operations
	----------
	**PhaseMap == PhaseMap**
		Same axes, labels and fillings
	"""
	def __init__(self, mu: np.ndarray, axis: np.ndarray, axis_name: str, labels: np.ndarray, fillings: List[List[Optional[Filling]]], metadata: Optional[Dict[str,float]] = None):
		self._mu = np.asarray(mu, dtype=float)
		self._axis = np.asarray(axis, dtype=float)
		self._axis_name = axis_name
		self._labels = np.asarray(labels, dtype=object)
		self._fillings = fillings
		self._metadata = dict(metadata or {})

	def __eq__(self, other):
		if not isinstance(other, PhaseMap):
			return NotImplemented
		return (self._axis_name == other._axis_name and np.array_equal(self._mu, other._mu) and np.array_equal(self._axis, other._axis)
			and np.array_equal(self._labels, other._labels) and self._fillings == other._fillings)

	@property
	def mu(self) -> np.ndarray:
		"""Chemical potential samples."""
		return self._mu
	@property
	def axis(self) -> np.ndarray:
		"""Samples of the second axis."""
		return self._axis
	@property
	def axis_name(self) -> str:
		"""Name of the second axis."""
		return self._axis_name
	@property
	def labels(self) -> np.ndarray:
		"""Label per cell."""
		return self._labels
	@property
	def fillings(self) -> List[List[Optional[Filling]]]:
		"""Filling per cell."""
		return self._fillings
	@property
	def metadata(self) -> Dict[str,float]:
		"""Scalars reported with the map."""
		return self._metadata
	@property
	def shape(self) -> Tuple[int,int]:
		return (len(self._axis), len(self._mu))

	def column(self, index: int) -> List[Optional[Filling]]:
		"""Fillings along ``mu`` at the ``index``-th sample of the second axis."""
		return list(self._fillings[index])

	def plateaus(self, index: int) -> List[Filling]:
		"""Distinct fillings met along ``mu`` at one axis sample, in ascending ``mu``."""
		sequence = []
		for filling in self._fillings[index]:
			if filling is not None and (not sequence or sequence[-1] != filling):
				sequence.append(filling)
		return sequence

	def count(self, label: str) -> int:
		"""Number of cells carrying ``label``."""
		return int(np.count_nonzero(self._labels == label))

	def rows(self) -> Iterator[Tuple[float,float,Optional[int],Optional[int],Optional[float],str]]:
		"""Yields ``(mu, axis, p, q, rho, label)``, second axis outer, ``mu`` inner."""
		for i, value in enumerate(self._axis):
			for j, mu in enumerate(self._mu):
				filling = self._fillings[i][j]
				if filling is None:
					yield (float(mu), float(value), None, None, None, self._labels[i, j])
				else:
					yield (float(mu), float(value), filling.p, filling.q, filling.p/filling.q, self._labels[i, j])

class StaircaseMap(PhaseMap):
	"""A :class:`PhaseMap` over ``(mu, v_tilde)``."""
	def __init__(self, mu: np.ndarray, v_tilde: np.ndarray, labels: np.ndarray, fillings: List[List[Optional[Filling]]], metadata: Optional[Dict[str,float]] = None):
		super().__init__(mu, v_tilde, 'v_tilde', labels, fillings, metadata)

	@property
	def v_tilde(self) -> np.ndarray:
		"""Samples of the renormalised interaction strength."""
		return self._axis
