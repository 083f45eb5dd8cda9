from . import configurations

from .modems import *
from .stbcs import *
from .precoders import *
from .beamformers import *
from .channels import *
from .detectors import *
from .metrics import *
from .simulations import *
from .spectrals import *
from .validations import *

from . import (
    beamformers,
    channels,
    detectors,
    metrics,
    modems,
    precoders,
    simulations,
    spectrals,
    stbcs,
    validations,
)

from mutwo import core_utilities

__all__ = core_utilities.get_all(
    beamformers,
    channels,
    detectors,
    metrics,
    modems,
    precoders,
    simulations,
    spectrals,
    stbcs,
    validations,
)

# Force flat structure
del (
    beamformers,
    channels,
    core_utilities,
    detectors,
    metrics,
    modems,
    precoders,
    simulations,
    spectrals,
    stbcs,
    validations,
)
