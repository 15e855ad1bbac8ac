"""Command-line front end: phase-map data files, validation report and parameter table."""
import argparse
import csv
import json
import logging
import os
import sys
import time
from typing import Any, Dict, Optional, Sequence, Tuple
from . import __version__
from .errors import InvalidParameters, PolaritonError, UnknownConfigKey, ValidationFailed
from .models import ExperimentalInputs, ModelParams, PhaseMap, RunManifest, CONVENTIONS
from .model_core import compare_with_quoted, estimate_parameters
from .staircase import staircase_map
from .defects import floating_map, melting_threshold
from .frozen import phase_grid, resonant_thresholds
from .oracle import dump_record
from .validation import run_validation
from .utils import format_number, read_config_file

logger = logging.getLogger(__name__)

DEFAULTS = {
	'grid': '400x400',
	'mu': (-1.1, -0.85),
	'vt': (0.0, 0.05),
	'phase5_mu': (-1.1, -0.32),
	't': (0.0, 0.02),
	'jperp': 0.001,
	'qmax': 6,
	'v_weak': 0.1,
	'v_strong': 0.8,
	'ring': 12,
}

def parse_grid(text: str) -> Tuple[int,int]:
	"""``'WxH'`` to ``(mu points, second-axis points)``."""
	try:
		width, height = (int(part) for part in text.lower().split('x'))
	except ValueError:
		raise InvalidParameters('grid must look like WxH, got %r'%text, text)
	if width < 2 or height < 2:
		raise InvalidParameters('grid needs at least 2 points per axis, got %r'%text, text)
	return width, height

def parse_multiplicity(text: str) -> Tuple[float,float]:
	try:
		a, b = (float(part) for part in text.split(','))
	except ValueError:
		raise InvalidParameters('multiplicity must look like a,b, got %r'%text, text)
	if a < 0 or b < 0:
		raise InvalidParameters('multiplicity factors must be non-negative, got %r'%text, text)
	return a, b

def load_config(path: Optional[str]) -> Tuple[Dict[str,Any],Dict[str,Any]]:
	"""Splits a config file into model keys and experimental keys; anything else is an error."""
	if path is None:
		return {}, {}
	model, hardware = {}, {}
	for key, value in read_config_file(path).items():
		if key in ModelParams.FIELDS or key == 'convention':
			model[key] = value
		elif key in ExperimentalInputs.FIELDS:
			hardware[key] = value
		else:
			raise UnknownConfigKey('%s: unknown config key %r'%(path, key), key)
	return model, hardware

def resolve_params(args: argparse.Namespace, model: Dict[str,Any]) -> ModelParams:
	"""Config values over the CLI defaults (calibrated convention, ω = δ = 0, g = 1), then flags."""
	data = dict(model)
	if 'convention' not in data and 'rydberg_weight_exponent' not in data:
		data['convention'] = 'calibrated'
	params = ModelParams.from_dict(data)
	if args.convention is not None:
		params = params.with_convention(args.convention)
	return params

def write_csv(phase_map: PhaseMap, path: str):
	"""One row per cell, second axis outer; blank ``p``, ``q``, ``rho`` outside crystals."""
	with open(path, 'w', newline='') as f:
		writer = csv.writer(f, lineterminator='\n')
		writer.writerow(['mu', phase_map.axis_name, 'p', 'q', 'rho', 'label'])
		for mu, value, p, q, rho, label in phase_map.rows():
			writer.writerow([format_number(mu), format_number(value), '' if p is None else p, '' if q is None else q, '' if rho is None else format_number(rho), label])
	logger.info('wrote %d rows to %s', phase_map.shape[0]*phase_map.shape[1], path)

def write_manifest(manifest: RunManifest, path: str):
	with open(path + '.manifest.json', 'w') as f:
		f.write(manifest.to_json() + '\n')

def _manifest(args: argparse.Namespace, params: ModelParams, grid: Dict[str,Any], out: Optional[str], **conventions) -> RunManifest:
	conventions.setdefault('convention', params.convention)
	return RunManifest(args.command, args.config, params, grid, out, conventions, __version__)

def _range(args: argparse.Namespace, name: str, default: Tuple[float,float]) -> Tuple[float,float]:
	low = getattr(args, name + '_min')
	high = getattr(args, name + '_max')
	return (default[0] if low is None else low, default[1] if high is None else high)

def cmd_staircase(args: argparse.Namespace, params: ModelParams) -> int:
	start = time.perf_counter()
	resolution = parse_grid(args.grid)
	mu_range, vt_range = _range(args, 'mu', DEFAULTS['mu']), _range(args, 'vt', DEFAULTS['vt'])
	phase_map = staircase_map(mu_range, vt_range, resolution, args.qmax, params)
	write_csv(phase_map, args.out)
	manifest = _manifest(args, params, {'mu': mu_range, 'v_tilde': vt_range, 'resolution': resolution, 'q_max': args.qmax}, args.out)
	manifest.wall_clock = time.perf_counter() - start
	write_manifest(manifest, args.out)
	return 0

def cmd_melt(args: argparse.Namespace, params: ModelParams) -> int:
	start = time.perf_counter()
	if args.jperp < 0:
		raise InvalidParameters('--jperp must be non-negative, got %r'%args.jperp, args.jperp)
	resolution = parse_grid(args.grid)
	mu_range, vt_range = _range(args, 'mu', DEFAULTS['mu']), _range(args, 'vt', DEFAULTS['vt'])
	phase_map = floating_map(mu_range, vt_range, args.jperp, resolution, args.qmax, params)
	write_csv(phase_map, args.out)
	thresholds = {}
	for filling in sorted({f for row in phase_map.fillings for f in row if f is not None}):
		thresholds[str(filling)] = melting_threshold(filling, args.jperp, params)
	manifest = _manifest(args, params, {'mu': mu_range, 'v_tilde': vt_range, 'resolution': resolution, 'q_max': args.qmax}, args.out, j_perp=args.jperp, melting_thresholds=thresholds)
	manifest.wall_clock = time.perf_counter() - start
	write_manifest(manifest, args.out)
	return 0

def _suffixed(path: str, suffix: str) -> str:
	root, ext = os.path.splitext(path)
	return '%s_%s%s'%(root, suffix, ext or '.csv')

def cmd_phase5(args: argparse.Namespace, params: ModelParams) -> int:
	if params.delta != 0:
		raise InvalidParameters('phase5 needs a resonant configuration, got delta=%r'%params.delta, params.delta)
	resolution = parse_grid(args.grid)
	mu_range, t_range = _range(args, 'mu', DEFAULTS['phase5_mu']), _range(args, 't', DEFAULTS['t'])
	params = params.replace(n_max=2)
	for regime, v1 in (('weak', args.v_weak), ('strong', args.v_strong)):
		start = time.perf_counter()
		regime_params = params.replace(v1=v1)
		out = _suffixed(args.out, regime)
		phase_map = phase_grid(mu_range, t_range, resolution, regime_params, args.qmax)
		write_csv(phase_map, out)
		thresholds = resonant_thresholds(regime_params).as_dict()
		manifest = _manifest(args, regime_params, {'mu': mu_range, 't': t_range, 'resolution': resolution, 'q_max': args.qmax}, out, regime=regime, thresholds=thresholds)
		manifest.wall_clock = time.perf_counter() - start
		write_manifest(manifest, out)
	return 0

def cmd_validate(args: argparse.Namespace, params: ModelParams) -> int:
	start = time.perf_counter()
	multiplicity = parse_multiplicity(args.multiplicity)
	checks = run_validation(params, args.ring, multiplicity)
	manifest = _manifest(args, params, {'ring': args.ring}, args.out, multiplicity=list(multiplicity))
	manifest.wall_clock = time.perf_counter() - start
	passed = all(check.passed for check in checks)
	report = {'passed': passed, 'checks': [check.as_dict() for check in checks], 'manifest': manifest.as_dict()}
	text = json.dumps(report, sort_keys=True, indent=2)
	if args.out:
		with open(args.out, 'w') as f:
			f.write(text + '\n')
		records = [record for check in checks for record in check.records]
		with open(args.out + '.records.jsonl', 'w') as f:
			for record in records:
				f.write(dump_record(record) + '\n')
		logger.info('wrote validation report to %s and %d oracle records', args.out, len(records))
	else:
		print(text)
	if not passed:
		failed = [check.name for check in checks if not check.passed]
		raise ValidationFailed('validation failed: %s'%', '.join(failed), failed)
	return 0

def _frequency(value: float) -> str:
	for scale, unit in ((1e9, 'GHz'), (1e6, 'MHz'), (1e3, 'kHz')):
		if abs(value) >= scale:
			return '%.4g %s'%(value/scale, unit)
	return '%.4g Hz'%value

def cmd_params(args: argparse.Namespace, hardware: Dict[str,Any]) -> int:
	if args.frequency_unit is not None:
		hardware = dict(hardware, frequency_unit=args.frequency_unit)
	estimated = estimate_parameters(ExperimentalInputs.from_dict(hardware))
	rows = [('quantity', 'formula /2pi', 'quoted /2pi', 'status')]
	for name, formula, quoted, status in compare_with_quoted(estimated):
		rows.append((name, _frequency(formula), _frequency(quoted), status))
	for name in ('g0', 'lam'):
		rows.append((name, _frequency(estimated.over_2pi(name)), '-', 'reported'))
	widths = [max(len(row[k]) for row in rows) for k in range(4)]
	for row in rows:
		print('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
	return 0

def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(prog='py-polariton', description='Ground-state phases of the Jaynes-Cummings-Hubbard chain with van der Waals photon repulsion (g = 1 units).')
	parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--config', metavar='PATH', help='flat "key = value" file of ModelParams (and, for params, hardware) keys')
	common.add_argument('--convention', choices=sorted(CONVENTIONS), default=None, help='interaction weighting; paper is a synonym of calibrated (default: calibrated unless the config sets one)')
	common.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging')
	grid = argparse.ArgumentParser(add_help=False)
	grid.add_argument('--grid', default=DEFAULTS['grid'], help='WxH points along mu and the second axis (default %(default)s)')
	grid.add_argument('--mu-min', type=float, default=None, help='lowest mu (default %g, phase5 %g)'%(DEFAULTS['mu'][0], DEFAULTS['phase5_mu'][0]))
	grid.add_argument('--mu-max', type=float, default=None, help='highest mu (default %g, phase5 %g)'%(DEFAULTS['mu'][1], DEFAULTS['phase5_mu'][1]))
	grid.add_argument('--qmax', type=int, default=DEFAULTS['qmax'], help='largest crystal period resolved (default %(default)s)')
	subparsers = parser.add_subparsers(dest='command', required=True)

	staircase = subparsers.add_parser('staircase', parents=[common, grid], help='zero-hopping filling map over (mu, v_tilde)')
	melt = subparsers.add_parser('melt', parents=[common, grid], help='solid, floating-solid and vacuum map at fixed J_perp')
	for sub, out in ((staircase, 'staircase.csv'), (melt, 'melt.csv')):
		sub.add_argument('--vt-min', type=float, default=None, help='lowest v_tilde (default %g)'%DEFAULTS['vt'][0])
		sub.add_argument('--vt-max', type=float, default=None, help='highest v_tilde (default %g)'%DEFAULTS['vt'][1])
		sub.add_argument('--out', default=out, help='CSV output (default %(default)s)')
	melt.add_argument('--jperp', type=float, default=DEFAULTS['jperp'], help='effective hopping J_perp (default %(default)s)')

	phase5 = subparsers.add_parser('phase5', parents=[common, grid], help='resonant (mu, t) classification for a weak and a strong repulsion')
	phase5.add_argument('--t-min', type=float, default=None, help='lowest t (default %g)'%DEFAULTS['t'][0])
	phase5.add_argument('--t-max', type=float, default=None, help='highest t (default %g)'%DEFAULTS['t'][1])
	phase5.add_argument('--v-weak', type=float, default=DEFAULTS['v_weak'], help='V of the weak set (default %(default)s)')
	phase5.add_argument('--v-strong', type=float, default=DEFAULTS['v_strong'], help='V of the strong set (default %(default)s)')
	phase5.add_argument('--out', default='phase5.csv', help='output stem, _weak and _strong are appended (default %(default)s)')

	validate = subparsers.add_parser('validate', parents=[common], help='analytic results against the brute-force solvers')
	validate.add_argument('--ring', type=int, default=DEFAULTS['ring'], help='ring length of the exhaustive checks (default %(default)s)')
	validate.add_argument('--multiplicity', default='1,1', help='factors on the incommensurate,commensurate window sums (default %(default)s)')
	validate.add_argument('--out', default=None, help='JSON report (default: standard output)')

	params = subparsers.add_parser('params', parents=[common], help='Hamiltonian parameters from hardware numbers')
	params.add_argument('--frequency-unit', choices=ExperimentalInputs.UNITS, default=None, help='whether rates in the config are ordinary or angular frequencies')
	return parser

def main(argv: Optional[Sequence[str]] = None) -> int:
	parser = build_parser()
	args = parser.parse_args(argv)
	level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
	logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
	try:
		model, hardware = load_config(args.config)
		if args.command == 'params':
			return cmd_params(args, hardware)
		params = resolve_params(args, model)
		return {'staircase': cmd_staircase, 'melt': cmd_melt, 'phase5': cmd_phase5, 'validate': cmd_validate}[args.command](args, params)
	except PolaritonError as exc:
		logger.error('%s', exc)
		print('error: %s'%exc, file=sys.stderr)
		return int(exc)

if __name__ == '__main__':
	sys.exit(main())
