"""Exact computation of extensions between rank-one modules over rank-two Lie conformal algebras."""

from .algebra import AlgebraSpec, check_jacobi, check_skew_symmetry, make_family
from .catalog import catalog_entries, instantiate_entry, load_catalog, verify_catalog, verify_entry
from .modspec import ModuleSpec, check_module, free, make_module, trivial
from .polyring import Poly, parse_poly
from .scalar import Scalar, parse_scalar
from .solver import ExtResult, ext_dimension

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "ModuleSpec", "Poly", "Scalar", "ExtResult",
    "make_family", "check_skew_symmetry", "check_jacobi",
    "make_module", "trivial", "free", "check_module",
    "parse_poly", "parse_scalar", "ext_dimension",
    "load_catalog", "catalog_entries", "instantiate_entry", "verify_entry", "verify_catalog",
]
