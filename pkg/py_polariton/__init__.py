__version__ = '1.0.0'

from .api import PolaritonChain
from . import errors, utils
from .models import *
