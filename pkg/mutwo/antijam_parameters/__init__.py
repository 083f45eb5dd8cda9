from . import constants
from . import configurations

from .constellations import *
from .grids import *
from .codes import *
from .precoders import *
from .beams import *
from .channels import *
from .receivers import *
from .simulations import *

from . import (
    beams,
    channels,
    codes,
    constellations,
    grids,
    precoders,
    receivers,
    simulations,
)

from mutwo import core_utilities

__all__ = core_utilities.get_all(
    beams,
    channels,
    codes,
    constellations,
    grids,
    precoders,
    receivers,
    simulations,
)

# Force flat structure
del (
    beams,
    channels,
    codes,
    constellations,
    core_utilities,
    grids,
    precoders,
    receivers,
    simulations,
)
