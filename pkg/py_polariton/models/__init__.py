from .params import ModelParams, ExperimentalInputs, EstimatedParams, CONVENTIONS
from .polaritons import PolaritonLevel
from .fillings import Filling, CrystalPhase
from .maps import PhaseMap, StaircaseMap
from .defects import DefectBand, MeltedBounds
from .thresholds import ResonantThresholds
from .lattice import LatticeConfig, SpectrumResult
from .manifest import RunManifest
