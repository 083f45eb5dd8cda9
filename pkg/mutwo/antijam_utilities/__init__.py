from .exceptions import *
from .numerics import *
from .parsers import *

from . import exceptions
from . import numerics
from . import parsers

__all__ = exceptions.__all__ + numerics.__all__ + parsers.__all__

# Force flat structure
del exceptions, numerics, parsers
