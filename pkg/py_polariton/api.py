from typing import List, Optional, Tuple
from .errors import *
from .models import *
from . import model_core, staircase, defects, frozen, oracle

class PolaritonChain:
	"""
	Entry point bound to one set of :class:`ModelParams`.

	Each attribute groups the operations of one part of the model, evaluated at the
	chain's parameters.
	"""
	def __init__(self, params: Optional[ModelParams] = None):
		self._params = params or ModelParams()
		self.core = CoreEndpoint(self)
		self.staircase = StaircaseEndpoint(self)
		self.defects = DefectsEndpoint(self)
		self.frozen = FrozenEndpoint(self)
		self.oracle = OracleEndpoint(self)

	@property
	def params(self) -> ModelParams:
		return self._params
	@params.setter
	def params(self, params: ModelParams):
		if not isinstance(params, ModelParams):
			raise InvalidParameters('Expected ModelParams, got %s'%type(params).__name__, params)
		self._params = params

	@classmethod
	def from_file(cls, path: str) -> 'PolaritonChain':
		"""Builds a chain from a ``key = value`` config file."""
		return cls(ModelParams.from_file(path))

class BaseEndpoint:
	def __init__(self, client: PolaritonChain):
		self._client = client

	@property
	def client(self) -> PolaritonChain:
		"""The chain of this endpoint"""
		return self._client

class CoreEndpoint(BaseEndpoint):
	def level(self, n: int) -> PolaritonLevel:
		"""The lower polariton with ``n`` excitations."""
		return model_core.polariton_level(n, self._client.params)

	def couplings(self) -> Tuple[float,float]:
		"""``(J_perp, V_tilde)``."""
		return model_core.effective_couplings(self._client.params)

	def interaction(self, n: int, m: int, d: int) -> float:
		return model_core.effective_interaction(n, m, d, self._client.params)

	def onset(self, n: int = 1) -> float:
		"""Chemical potential where the lower ``n``-excitation polariton becomes favourable."""
		return model_core.first_critical_point(self._client.params, n)

	def estimate(self, inputs: ExperimentalInputs) -> EstimatedParams:
		"""Hamiltonian parameters from hardware numbers; independent of the chain's parameters."""
		return model_core.estimate_parameters(inputs)

class StaircaseEndpoint(BaseEndpoint):
	def fillings(self, q_max: int = 6) -> List[Filling]:
		return staircase.enumerate_fillings(q_max)

	def phase(self, filling: Filling, n: int = 1) -> CrystalPhase:
		"""Stability window of a crystal.

		Parameters
		----------
		filling : `Filling`
			The crystal
		n : `int`
			Excitation manifold of the occupied sites
		"""
		return staircase.crystal_phase(filling, self._client.params, n)

	def sequence(self, q_max: int = 6) -> List[CrystalPhase]:
		"""Crystals in ascending chemical potential at the chain's repulsion."""
		v_tilde = model_core.effective_couplings(self._client.params)[1]
		return staircase.staircase_sequence(v_tilde, q_max, self._client.params)

	def map(self, mu_range: Tuple[float,float], v_tilde_range: Tuple[float,float], resolution=400, q_max: int = 6) -> StaircaseMap:
		return staircase.staircase_map(mu_range, v_tilde_range, resolution, q_max, self._client.params)

class DefectsEndpoint(BaseEndpoint):
	def melted(self, filling: Filling) -> MeltedBounds:
		"""Window of a crystal with the defect bands of ``t·cos²θ_1`` taken into account."""
		return defects.melted_bounds(filling, self._client.params)

	def threshold(self, filling: Filling) -> float:
		j_perp = model_core.effective_couplings(self._client.params)[0]
		return defects.melting_threshold(filling, j_perp, self._client.params)

	def map(self, mu_range: Tuple[float,float], v_tilde_range: Tuple[float,float], resolution=400, q_max: int = 6) -> PhaseMap:
		j_perp = model_core.effective_couplings(self._client.params)[0]
		return defects.floating_map(mu_range, v_tilde_range, j_perp, resolution, q_max, self._client.params)

class FrozenEndpoint(BaseEndpoint):
	def thresholds(self) -> ResonantThresholds:
		return frozen.resonant_thresholds(self._client.params)

	def hopping(self, bra: Tuple[int,int], ket: Tuple[int,int]) -> float:
		"""``⟨bra| a₁† a₂ |ket⟩`` between two-cavity polariton product states."""
		return frozen.hopping_element(bra, ket, self._client.params)

	def classify(self, mu: Optional[float] = None, t: Optional[float] = None, q_max: int = 6) -> str:
		"""Phase label at ``mu`` and ``t`` (the chain's values by default)."""
		params = self._client.params
		return frozen.classify_phase(params.mu if mu is None else mu, params.t if t is None else t, params, q_max)

class OracleEndpoint(BaseEndpoint):
	def ground_state(self, L: int, *, cache: Optional[bool] = True) -> LatticeConfig:
		"""Exhaustive zero-hopping ground state on a ring.

		Parameters
		----------
		L : `int`
			Ring length
		cache : `Optional[bool]`
			If `True` reuses the enumeration of previous calls with the same ring and couplings.
			If `False` enumerates again and drops the stored enumeration
		"""
		return oracle.classical_ground_state(L, self._client.params, cache=cache)

	def window(self, filling: Filling, L: int) -> Tuple[float,float]:
		return oracle.boundary_bisect(filling, self._client.params, L)

	def spectrum(self, L: int, photons: Optional[int] = None) -> SpectrumResult:
		return oracle.exact_diagonalize(L, self._client.params, photons=photons)
