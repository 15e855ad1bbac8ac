import logging
import math
import threading
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar
from .errors import ConvergenceError, InvalidParameters

logger = logging.getLogger(__name__)

T = TypeVar('T')

SERIES_RTOL = 1e-12
MAX_SERIES_TERMS = 10**6

def converge_series(term: Callable[[int], float], start: int = 1, last: Optional[float] = None, rtol: float = SERIES_RTOL, max_terms: int = MAX_SERIES_TERMS) -> float:
		"""
		Sums a series of non-negative, non-increasing terms.

		Parameters
		----------
		term: :class:`Callable[[int], float]`
			The k-th term of the series
		start: :class:`int`
			First index
		last: :class:`Optional[float]`
			Last index whose term can be non-zero (``None`` or ``inf`` for an open series)
		rtol: :class:`float`
			Summation stops once a term drops to ``rtol`` times the accumulated value
		max_terms: :class:`int`
			Hard limit on the number of evaluated terms
		"""
		if last is not None and math.isinf(last):
			last = None
		acc = 0.0
		k = start
		count = 0
		while True:
			if last is not None and k > last:
				break
			value = term(k)
			acc += value
			count += 1
			if last is None and acc != 0 and abs(value) <= rtol*abs(acc):
				break
			if last is None and acc == 0 and value == 0 and count > 1:
				break
			if count >= max_terms:
				raise ConvergenceError('Series did not converge within %d terms'%max_terms, count)
			k += 1
		logger.debug('series converged after %d terms (sum=%.15g)', count, acc)
		return acc

def split_range(total: int, parts: int) -> List[Tuple[int,int]]:
		"""Splits ``range(total)`` into at most ``parts`` contiguous ``(start, stop)`` pieces."""
		parts = max(1, min(parts, total)) if total > 0 else 1
		step, extra = divmod(total, parts)
		ranges = []
		start = 0
		for i in range(parts):
			stop = start + step + (1 if i < extra else 0)
			ranges.append((start, stop))
			start = stop
		return ranges

def run_partitioned(func: Callable[[int,int], T], ranges: Sequence[Tuple[int,int]], run_thread: Optional[bool] = True) -> List[T]:
		"""
		Evaluates ``func(start, stop)`` for every range and returns the results in range order

		Parameters
		----------
		func: :class:`Callable[[int,int], T]`
			Worker applied to a half-open index range
		ranges: :class:`Sequence[Tuple[int,int]]`
			Disjoint index ranges
		run_thread: :class:`bool`
			Whether to run every range in its own Thread
		"""
		if not run_thread or len(ranges) <= 1:
			return [func(start,stop) for start,stop in ranges]
		container: List[Optional[T]] = [None]*len(ranges)
		failures = []
		def _run_loop(index: int, start: int, stop: int):
			try:
				container[index] = func(start,stop)
			except Exception as exc:
				failures.append((index,exc))
		threads = [threading.Thread(target=_run_loop,args=(i,start,stop),daemon=True) for i,(start,stop) in enumerate(ranges)]
		for thread in threads:
			thread.start()
		for thread in threads:
			thread.join()
		if failures:
			raise min(failures,key=lambda item: item[0])[1]
		return container

def parse_value(raw: str):
		"""Converts a config value to ``int``, ``float``, ``inf`` or keeps it as ``str``."""
		text = raw.strip()
		if text.lower() in ('inf','infinity','+inf'):
			return math.inf
		for cast in (int, float):
			try:
				return cast(text)
			except ValueError:
				pass
		return text.strip('"').strip("'")

def read_config_file(path: str) -> Dict[str,object]:
		"""
		Reads a flat ``key = value`` file. Blank lines and ``#`` comments are skipped

		Parameters
		----------
		path: :class:`str`
			Path of the file
		"""
		values: Dict[str,object] = {}
		try:
			with open(path,'r') as f:
				lines = f.readlines()
		except OSError as exc:
			raise InvalidParameters('Cannot read config file %s: %s'%(path,exc),path)
		for number,line in enumerate(lines,1):
			line = line.split('#',1)[0].strip()
			if not line:
				continue
			if '=' not in line:
				raise InvalidParameters('%s:%d: expected "key = value"'%(path,number),line)
			key,raw = line.split('=',1)
			values[key.strip()] = parse_value(raw)
		return values

def format_number(value: float) -> str:
		"""Formats a float with 12 significant digits."""
		return '%.12g'%value
