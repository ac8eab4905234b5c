"""Closed tours of free (p, q)-leapers on 2(p+q) boards and their tilings."""

from . import fold, geom, keygraph, render, splice, tile, verify
from .geom import Leaper
from .splice import Tour

__all__ = [
    "Leaper",
    "Tour",
    "fold",
    "geom",
    "keygraph",
    "render",
    "splice",
    "tile",
    "verify",
]
