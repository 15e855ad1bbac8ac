import json
import math
from typing import Any, Dict, Optional
from .params import ModelParams

class RunManifest:
	"""
	Provenance record written next to every output file.

	Attributes
	----------
	subcommand: :class:`str`
		CLI subcommand that produced the output
	config_path: :class:`Optional[str]`
		Config file used, if any
	params: :class:`ModelParams`
		Parameters after config and flags were resolved
	grid: :class:`Dict[str, Any]`
		Axis ranges and resolution
	output_path: :class:`Optional[str]`
		File the manifest describes
	conventions: :class:`Dict[str, Any]`
		Interaction convention and other switches
	version: :class:`str`
		Package version
	wall_clock: :class:`float`
		Seconds spent producing the output
	"""
	def __init__(self, subcommand: str, config_path: Optional[str], params: ModelParams, grid: Dict[str,Any], output_path: Optional[str], conventions: Dict[str,Any], version: str, wall_clock: float = 0.0):
		self._subcommand = subcommand
		self._config_path = config_path
		self._params = params
		self._grid = dict(grid)
		self._output_path = output_path
		self._conventions = dict(conventions)
		self._version = version
		self._wall_clock = wall_clock

	@property
	def subcommand(self) -> str:
		return self._subcommand
	@property
	def config_path(self) -> Optional[str]:
		return self._config_path
	@property
	def params(self) -> ModelParams:
		return self._params
	@property
	def grid(self) -> Dict[str,Any]:
		return self._grid
	@property
	def output_path(self) -> Optional[str]:
		return self._output_path
	@property
	def conventions(self) -> Dict[str,Any]:
		return self._conventions
	@property
	def version(self) -> str:
		return self._version
	@property
	def wall_clock(self) -> float:
		"""Seconds spent. Excluded from determinism comparisons."""
		return self._wall_clock
	@wall_clock.setter
	def wall_clock(self, value: float):
		self._wall_clock = float(value)

	def as_dict(self, include_clock: bool = True) -> Dict[str,Any]:
		data = {
			'subcommand': self._subcommand,
			'config_path': self._config_path,
			'params': {k: _jsonable(v) for k, v in self._params.as_dict().items()},
			'grid': {k: _jsonable(v) for k, v in self._grid.items()},
			'output_path': self._output_path,
			'conventions': {k: _jsonable(v) for k, v in self._conventions.items()},
			'version': self._version,
		}
		if include_clock:
			data['wall_clock'] = self._wall_clock
		return data

	def to_json(self, include_clock: bool = True) -> str:
		return json.dumps(self.as_dict(include_clock), sort_keys=True, indent=2)

def _jsonable(value: Any) -> Any:
	if isinstance(value, dict):
		return {str(k): _jsonable(v) for k, v in value.items()}
	if isinstance(value, (list, tuple)):
		return [_jsonable(v) for v in value]
	if isinstance(value, float) and math.isinf(value):
		return 'inf' if value > 0 else '-inf'
	if hasattr(value, 'item'):
		return value.item()
	return value
