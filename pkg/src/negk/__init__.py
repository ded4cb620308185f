"""Negative K-theory K_{-1}(Z[G]) of integral group rings of finite groups."""

from .catalog import CatalogEntry, load_catalog
from .families import builtin_group
from .group import FiniteGroup, group_from_generators
from .presentation import group_from_presentation
from .schur import KMinusOneResult, UnsupportedGroupError, format_k_minus_one, k_minus_one

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry", "FiniteGroup", "KMinusOneResult", "UnsupportedGroupError", "builtin_group",
    "format_k_minus_one", "group_from_generators", "group_from_presentation", "k_minus_one",
    "load_catalog",
]
