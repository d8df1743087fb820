#
# This file is part of quantale-tools.
#
""" Finite quantales, the quantaloids derived from them, and the relations they enrich. """

from .types.quantale import Quantale
from .zoo            import quantale_by_name

__all__ = ['Quantale', 'quantale_by_name']
