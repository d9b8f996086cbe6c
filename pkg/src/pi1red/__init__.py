"""Algebraic fundamental groups of reductive groups from root data.

Exact integer arithmetic throughout: finitely generated abelian groups,
finite-group modules and their cohomology, two-term complexes, root data,
t-resolutions and the derived invariants built from them.
"""
from .lattice import AbHom, FgAbGroup, LatticeError, is_exact, render_sequence
from .rootdata import (RootDatum, RootDatumError, fundamental_invariants, parse_group_spec,
                       pi1_group, standard_group)
from .resolutions import (GroupHomData, ResolutionError, SESData, TResolution, check_pi1_exact,
                          pi1_functor, t_resolution_from_torus, t_resolution_generic)

__version__ = "0.1.0"

__all__ = [
    "AbHom", "FgAbGroup", "LatticeError", "is_exact", "render_sequence",
    "RootDatum", "RootDatumError", "fundamental_invariants", "parse_group_spec",
    "pi1_group", "standard_group",
    "GroupHomData", "ResolutionError", "SESData", "TResolution", "check_pi1_exact",
    "pi1_functor", "t_resolution_from_torus", "t_resolution_generic",
]
