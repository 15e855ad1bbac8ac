"""Brute-force ground states on small rings: exhaustive classical search and exact diagonalisation."""
import json
import logging
import math
from typing import Any, Dict, List, Optional, Tuple
import numpy as np
import scipy.linalg
import scipy.sparse
from .cache import caching
from .errors import ConsistencyError, InvalidParameters, OracleSizeError
from .models import Filling, LatticeConfig, ModelParams, SpectrumResult
from .model_core import eigen_energy, first_critical_point, hopping_overlap, rydberg_weights, vdw_tail
from .utils import run_partitioned, split_range

logger = logging.getLogger(__name__)

MAX_RING = {1: 28, 2: 16}
MAX_DIMENSION = 20000
CHUNK = 1 << 16
WORKERS = 4
ENERGY_TOL = 1e-12
SPECTRUM_TOL = 1e-10
BISECT_TOL = 1e-6
MAX_MINIMA = 4096

def ring_distance(i: int, j: int, L: int) -> int:
	"""Minimum-image distance between sites ``i`` and ``j``."""
	d = abs(i - j) % L
	return min(d, L - d)

def coupling_matrix(L: int, params: ModelParams) -> np.ndarray:
	"""``V(d(i, j))`` for every pair of ring sites, zero on the diagonal."""
	matrix = np.zeros((L, L))
	for i in range(L):
		for j in range(L):
			if i != j:
				matrix[i, j] = vdw_tail(ring_distance(i, j, L), params.v1, params.range_cutoff)
	return matrix

def decode(codes: np.ndarray, L: int, base: int) -> np.ndarray:
	"""Occupations of configuration indices; site 0 is the least significant digit."""
	occupations = np.empty((len(codes), L), dtype=np.int64)
	rest = np.array(codes, dtype=np.int64)
	for i in range(L):
		occupations[:, i] = rest % base
		rest //= base
	return occupations

def _check_size(L: int, n_max: int):
	if n_max not in MAX_RING:
		raise InvalidParameters('n_max must be 1 or 2, got %r'%n_max, n_max)
	if isinstance(L, bool) or int(L) != L or L < 2:
		raise InvalidParameters('ring length must be an integer >= 2, got %r'%L, L)
	if L > MAX_RING[n_max]:
		raise OracleSizeError('exhaustive search limited to L <= %d for n_max = %d, got L = %d'%(MAX_RING[n_max], n_max, L), L)

def configuration_energy(occupations, params: ModelParams, mu: Optional[float] = None) -> float:
	"""Grand-canonical energy of one ring configuration (vectorised)."""
	occupations = np.asarray(occupations, dtype=np.int64)
	L = len(occupations)
	weights = rydberg_weights(params, max(1, int(occupations.max(initial=0))))
	w = weights[occupations]
	single = sum(eigen_energy(int(n), '-', params, mu) for n in occupations)
	return float(single + 0.5*w @ coupling_matrix(L, params) @ w)

class SectorTable:
	"""
	Lowest interaction energy per excitation-count sector of a ring, with its minimisers.

	Attributes
	----------
	L: :class:`int`
		Ring length
	n_max: :class:`int`
		Highest excitation per site
	counts: :class:`numpy.ndarray`
		``(sectors, n_max)`` number of sites holding 1 … n_max excitations
	energies: :class:`numpy.ndarray`
		Lowest interaction energy per sector (``inf`` for impossible sectors)
	minima: :class:`List[List[int]]`
		Configuration indices reaching it, capped at ``MAX_MINIMA``
	degeneracy: :class:`numpy.ndarray`
		Number of configurations reaching it
	"""
	def __init__(self, L: int, n_max: int, energies: np.ndarray, minima: List[List[int]], degeneracy: np.ndarray):
		self._L = L
		self._n_max = n_max
		self._energies = energies
		self._minima = minima
		self._degeneracy = degeneracy
		index = np.arange(len(energies))
		self._counts = np.stack([(index//(L + 1)**k) % (L + 1) for k in range(n_max)], axis=1)

	@property
	def L(self) -> int:
		return self._L
	@property
	def n_max(self) -> int:
		return self._n_max
	@property
	def counts(self) -> np.ndarray:
		return self._counts
	@property
	def energies(self) -> np.ndarray:
		return self._energies
	@property
	def minima(self) -> List[List[int]]:
		return self._minima
	@property
	def degeneracy(self) -> np.ndarray:
		return self._degeneracy

	def grand_energies(self, params: ModelParams, mu: Optional[float] = None) -> np.ndarray:
		"""Ground energy of every sector at the chemical potential ``mu``."""
		levels = np.array([eigen_energy(n, '-', params, mu) for n in range(1, self._n_max + 1)])
		return self._counts @ levels + self._energies

def _scan(start: int, stop: int, L: int, n_max: int, weights: np.ndarray, matrix: np.ndarray, sectors: int) -> Dict[int,List]:
	found: Dict[int,List] = {}
	for begin in range(start, stop, CHUNK):
		codes = np.arange(begin, min(stop, begin + CHUNK), dtype=np.int64)
		occupations = decode(codes, L, n_max + 1)
		w = weights[occupations]
		energy = 0.5*np.einsum('ij,ij->i', w @ matrix, w)
		sector = np.zeros(len(codes), dtype=np.int64)
		for k in range(1, n_max + 1):
			sector += np.count_nonzero(occupations == k, axis=1)*(L + 1)**(k - 1)
		lowest = np.full(sectors, np.inf)
		np.minimum.at(lowest, sector, energy)
		close = energy <= lowest[sector] + ENERGY_TOL
		for s in np.unique(sector[close]):
			mask = close & (sector == s)
			entry = [float(lowest[s]), int(np.count_nonzero(mask)), codes[mask][:MAX_MINIMA].tolist(), energy[mask][:MAX_MINIMA].tolist()]
			found[int(s)] = _merge_entry(found.get(int(s)), entry)
	return found

def _merge_entry(old: Optional[List], new: List) -> List:
	if old is None:
		return new
	low = min(old[0], new[0])
	codes, values, count = [], [], 0
	for entry in (old, new):
		if entry[0] <= low + ENERGY_TOL:
			count += entry[1]
			for code, value in zip(entry[2], entry[3]):
				if value <= low + ENERGY_TOL and len(codes) < MAX_MINIMA:
					codes.append(code)
					values.append(value)
	return [low, count, codes, values]

@caching
def _sector_table(L: int, n_max: int, weights: Tuple[float,...], v1: float, range_cutoff: float) -> SectorTable:
	params = ModelParams(v1=v1, range_cutoff=range_cutoff)
	matrix = coupling_matrix(L, params)
	weights = np.array(weights)
	total = (n_max + 1)**L
	sectors = (L + 1)**n_max
	ranges = split_range(total, WORKERS if total > CHUNK else 1)
	logger.debug('enumerating %d configurations of L=%d in %d ranges', total, L, len(ranges))
	parts = run_partitioned(lambda start, stop: _scan(start, stop, L, n_max, weights, matrix, sectors), ranges)
	merged: Dict[int,List] = {}
	for part in parts:
		for s, entry in part.items():
			merged[s] = _merge_entry(merged.get(s), entry)
	energies = np.full(sectors, np.inf)
	degeneracy = np.zeros(sectors, dtype=np.int64)
	minima: List[List[int]] = [[] for _ in range(sectors)]
	for s, (low, count, codes, _) in merged.items():
		energies[s] = low
		degeneracy[s] = count
		minima[s] = codes
	return SectorTable(L, n_max, energies, minima, degeneracy)

def sector_table(L: int, params: ModelParams, n_max: Optional[int] = None, *, cache: bool = True) -> SectorTable:
	"""Exhaustive per-sector minima of the interaction energy; independent of ``mu`` and cached."""
	n_max = params.n_max if n_max is None else n_max
	_check_size(L, n_max)
	weights = tuple(float(w) for w in rydberg_weights(params, n_max))
	return _sector_table(int(L), n_max, weights, params.v1, params.range_cutoff, cache=cache)

def classical_ground_state(L: int, params: ModelParams, n_max: Optional[int] = None, mu: Optional[float] = None, *, cache: bool = True) -> LatticeConfig:
	"""
	Global minimum of the zero-hopping energy on a ring of ``L`` sites, found by enumerating
	all ``(n_max+1)^L`` configurations.

	Every configuration within ``1e-12`` of the minimum is returned in ``minima``. The
	winner is checked against a from-scratch pairwise recomputation.
	"""
	n_max = params.n_max if n_max is None else n_max
	table = sector_table(L, params, n_max, cache=cache)
	energies = table.grand_energies(params, mu)
	lowest = float(np.min(energies))
	winners = np.nonzero(energies <= lowest + ENERGY_TOL*max(1.0, abs(lowest)))[0]
	codes = [code for s in winners for code in table.minima[s]]
	minima = sorted(tuple(int(n) for n in row) for row in decode(np.array(codes), L, n_max + 1))
	config = LatticeConfig(minima[0], lowest, minima, int(sum(table.degeneracy[s] for s in winners)))
	check_params = params if mu is None else params.replace(mu=mu)
	recomputed = config.recompute_energy(check_params)
	if abs(recomputed - lowest) > ENERGY_TOL*max(1.0, abs(lowest)):
		raise ConsistencyError('enumerated energy %.15g differs from recomputed %.15g'%(lowest, recomputed), config)
	if config.filling is None:
		logger.warning('ring of %d sites at mu=%.12g has degenerate minima with different fillings', L, params.mu if mu is None else mu)
	return config

def occupied_sites(L: int, params: ModelParams, mu: float) -> int:
	"""Occupied sites of the single-excitation ground state at ``mu`` (the smallest on ties)."""
	table = sector_table(L, params, 1)
	energies = table.grand_energies(params, mu)
	lowest = float(np.min(energies))
	winners = np.nonzero(energies <= lowest + ENERGY_TOL*max(1.0, abs(lowest)))[0]
	return int(table.counts[winners, 0].min())

def _bisect(predicate, low: float, high: float, tol: float) -> float:
	# predicate is False at low, True at high and monotone in between
	iterations = 0
	while high - low > tol:
		middle = (low + high)/2
		if predicate(middle):
			high = middle
		else:
			low = middle
		iterations += 1
	logger.debug('bisection converged after %d steps', iterations)
	return (low + high)/2

def boundary_bisect(filling: Filling, params: ModelParams, L: int, tol: float = BISECT_TOL) -> Tuple[float,float]:
	"""
	Stability window ``(mu_low, mu_high)`` of the ``filling`` crystal on a ring, by bisection
	on the ground-state particle number of the exhaustive search.

	``mu_high`` is ``inf`` for the full lattice.
	"""
	if L % filling.q:
		raise InvalidParameters('ring length %d is not a multiple of the period %d'%(L, filling.q), (L, filling.q))
	target = L*filling.p//filling.q
	onset = first_critical_point(params)
	table = sector_table(L, params, 1)
	low = onset - 1.0
	high = onset + float(np.max(table.energies[np.isfinite(table.energies)])) + 1.0
	lower = _bisect(lambda mu: occupied_sites(L, params, mu) >= target, low, high, tol)
	if target == L:
		return lower, math.inf
	upper = _bisect(lambda mu: occupied_sites(L, params, mu) > target, low, high, tol)
	return lower, upper

def basis_size(L: int, n_max: int) -> int:
	return (n_max + 1)**L

def build_hamiltonian(L: int, params: ModelParams, n_max: Optional[int] = None, photons: Optional[int] = None) -> Tuple[scipy.sparse.csr_matrix,np.ndarray]:
	"""
	Sparse projected Hamiltonian of a ring and the configuration indices spanning it.

	Diagonal: lower-polariton energies plus the projected repulsion. Off-diagonal: a
	hop moves one excitation between neighbours, ``(n+1, n) ↔ (n, n+1)``, with
	amplitude ``-t·β_{n,n+1}``. ``photons`` restricts the basis to one total excitation number.
	"""
	n_max = params.n_max if n_max is None else n_max
	if n_max not in MAX_RING:
		raise InvalidParameters('n_max must be 1 or 2, got %r'%n_max, n_max)
	if L < 3:
		raise InvalidParameters('exact diagonalisation needs L >= 3, got %r'%L, L)
	if basis_size(L, n_max) > MAX_DIMENSION:
		raise OracleSizeError('basis of %d states exceeds %d'%(basis_size(L, n_max), MAX_DIMENSION), basis_size(L, n_max))
	base = n_max + 1
	codes = np.arange(basis_size(L, n_max), dtype=np.int64)
	occupations = decode(codes, L, base)
	if photons is not None:
		keep = occupations.sum(axis=1) == photons
		codes, occupations = codes[keep], occupations[keep]
		if len(codes) == 0:
			raise InvalidParameters('no configuration of L=%d with n_max=%d carries %r excitations'%(L, n_max, photons), photons)
	position = {int(code): k for k, code in enumerate(codes)}
	weights = rydberg_weights(params, n_max)
	w = weights[occupations]
	levels = np.array([eigen_energy(n, '-', params) for n in range(base)])
	diagonal = levels[occupations].sum(axis=1) + 0.5*np.einsum('ij,ij->i', w @ coupling_matrix(L, params), w)
	rows, cols, values = list(range(len(codes))), list(range(len(codes))), diagonal.tolist()
	amplitudes = [-params.t*hopping_overlap(n, n + 1, params.delta, params.g) for n in range(n_max)]
	powers = base**np.arange(L, dtype=np.int64)
	if params.t > 0:
		for k, occupation in enumerate(occupations):
			for i in range(L):
				j = (i + 1) % L
				a, b = occupation[i], occupation[j]
				if abs(a - b) != 1:
					continue
				target = int(codes[k] + (b - a)*powers[i] + (a - b)*powers[j])
				rows.append(position[target])
				cols.append(k)
				values.append(amplitudes[min(a, b)])
	matrix = scipy.sparse.csr_matrix((values, (rows, cols)), shape=(len(codes), len(codes)))
	if matrix.nnz and abs(matrix - matrix.T).max() != 0:
		raise ConsistencyError('Hamiltonian is not symmetric', L)
	return matrix, codes

def exact_diagonalize(L: int, params: ModelParams, n_max: Optional[int] = None, photons: Optional[int] = None) -> SpectrumResult:
	"""
	Ground state of the projected Hamiltonian on a ring, sector by sector in the
	conserved excitation number.
	"""
	n_max = params.n_max if n_max is None else n_max
	matrix, codes = build_hamiltonian(L, params, n_max, photons)
	occupations = decode(codes, L, n_max + 1)
	totals = occupations.sum(axis=1)
	theta_weights = rydberg_weights(params.replace(rydberg_weight_exponent=4), n_max)
	photon_count = (occupations - theta_weights[occupations]).sum(axis=1)
	filled = np.count_nonzero(occupations, axis=1)
	results = []
	for sector in np.unique(totals):
		index = np.nonzero(totals == sector)[0]
		block = matrix[index][:, index].toarray()
		values, vectors = scipy.linalg.eigh(block)
		results.append((sector, index, values, vectors))
	ground = min(values[0] for _, _, values, _ in results)
	degeneracy, filling, density, sectors = 0, 0.0, 0.0, []
	for sector, index, values, vectors in results:
		close = np.nonzero(values <= ground + SPECTRUM_TOL)[0]
		if len(close) == 0:
			continue
		sectors.append(int(sector))
		for c in close:
			probability = vectors[:, c]**2
			filling += float(probability @ filled[index])
			density += float(probability @ photon_count[index])
		degeneracy += len(close)
	logger.debug('exact diagonalisation of L=%d: dimension %d, E0=%.12g', L, len(codes), ground)
	return SpectrumResult(ground, filling/(degeneracy*L), density/(degeneracy*L), degeneracy, len(codes), tuple(sectors))

def result_record(result: Any, L: int, params: ModelParams, n_max: Optional[int] = None) -> Dict[str,Any]:
	"""JSON-ready record ``{L, n_max, params, ground_energy, filling, config, degeneracy}``."""
	n_max = params.n_max if n_max is None else n_max
	record: Dict[str,Any] = {'L': L, 'n_max': n_max, 'params': {k: (str(v) if isinstance(v, float) and math.isinf(v) else v) for k, v in params.as_dict().items()}}
	if isinstance(result, LatticeConfig):
		filling = result.filling
		record.update(ground_energy=result.energy, filling=None if filling is None else str(filling), config=str(result), degeneracy=result.degeneracy)
	else:
		record.update(ground_energy=result.ground_energy, filling=result.filling, config=None, degeneracy=result.degeneracy)
	return record

def dump_record(record: Dict[str,Any]) -> str:
	return json.dumps(record, sort_keys=True)

def sector_ground_energy(L: int, params: ModelParams, excitations: int, n_max: int = 1) -> float:
	"""Lowest zero-hopping energy among configurations carrying ``excitations`` in total."""
	table = sector_table(L, params, n_max)
	totals = table.counts @ np.arange(1, n_max + 1)
	energies = table.grand_energies(params)[totals == excitations]
	if not np.any(np.isfinite(energies)):
		raise InvalidParameters('no configuration of %d sites carries %d excitations'%(L, excitations), excitations)
	return float(np.min(energies))
