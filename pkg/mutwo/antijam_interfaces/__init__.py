from .cli import *

from . import cli

__all__ = cli.__all__

# Force flat structure
del cli
