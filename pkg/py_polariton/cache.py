from collections import OrderedDict
from typing import Callable
from functools import wraps

MAX_ENTRIES = 256

cache = OrderedDict()

def caching(func: Callable):
	"""Memoises a pure function on its arguments.

	The wrapped function takes a keyword-only ``cache`` flag. ``True`` (the default)
	returns the stored value or computes and stores it, ``False`` evicts the stored
	value and computes without storing. At most ``MAX_ENTRIES`` values are kept; the
	least recently used one goes first.
	"""
	@wraps(func)
	def wrapper(*args, **kwargs):
		is_cached = kwargs.pop('cache',True)
		values = (func.__name__,)+args+tuple(sorted(kwargs.items()))
		if is_cached:
			if values in cache:
				cache.move_to_end(values)
				return cache[values]
			cache[values] = func(*args,**kwargs)
			while len(cache) > MAX_ENTRIES:
				cache.popitem(last=False)
			return cache[values]
		else:
			cache.pop(values,None)
		return func(*args,**kwargs)
	return wrapper

def clear_cache():
	"""Drops every memoised value."""
	cache.clear()
