"""Abelian cohomology at the lattice level.

The complex ``T_* -> R_*`` of a resolution, placed in degrees ``(-1, 0)``,
is a complex of Gamma-lattices; its Gamma-hypercohomology is the lattice
model of abelian cohomology.  The coefficient sheaf ``G_m`` is not modeled:
the values computed here are the universal Gamma-module and Ext/Tor data
from which the scheme-theoretic groups are obtained by further derived
tensoring.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .complexes import dual_complex, hypercohomology, hypercohomology_sequence
from .gammamod import GammaMap, cohomology_long_sequence, group_cohomology
from .lattice import AbHom, FgAbGroup, LatticeError, derived_dual, render_sequence
from .resolutions import (ResolutionError, SESData, TResolution, check_pi1_exact, cochar_complex,
                          pi1_functor, t_resolution_from_torus)
from .rootdata import RootDatum, fundamental_invariants

DEGREES = (-1, 0, 1, 2)


@dataclass
class AbCohProfile:
    """Hypercohomology of ``T_* -> R_*`` and the derived dual of ``pi_1``."""
    datum: RootDatum
    resolution: TResolution
    values: Dict[int, FgAbGroup]
    dual_values: Dict[int, FgAbGroup]
    sequences: Dict[str, List[AbHom]] = field(repr=False, default_factory=dict)

    def to_json(self) -> dict:
        return {
            "group": self.datum.name or "",
            "resolution": self.resolution.kind,
            "H": {str(i): str(v) for i, v in sorted(self.values.items())},
            "H_dual": {str(i): str(v) for i, v in sorted(self.dual_values.items())},
        }

    def render(self) -> str:
        lines = [f"H^{i} = {self.values[i]}" for i in sorted(self.values)]
        lines += [f"H^{i}(dual) = {self.dual_values[i]}" for i in sorted(self.dual_values)]
        return "\n".join(lines)


def ab_cohomology_profile(d: RootDatum, r: Optional[TResolution] = None,
                          degrees=DEGREES) -> AbCohProfile:
    """``H^i`` for ``i`` in ``degrees`` with both long exact sequences verified.

    Cross-checked against ``H^i(Gamma, pi_1)`` (the complex is
    quasi-isomorphic to ``pi_1`` in degree 0).
    """
    if r is None:
        r = t_resolution_from_torus(d)
    if r.base != d:
        raise ResolutionError("resolution of a different group")
    if d.gamma is not None and r.h_action is None:
        raise ResolutionError("resolution is not Gamma-equivariant")
    C = cochar_complex(r)
    top = max(degrees)
    values = {i: hypercohomology(C, i) for i in degrees}
    pi1_mod = fundamental_invariants(d).pi1_module
    for i in degrees:
        expected = FgAbGroup.zero() if i < 0 else group_cohomology(pi1_mod, i)
        if not values[i].isomorphic(expected):
            raise LatticeError(f"H^{i} = {values[i]} but H^{i}(Gamma, pi_1) = {expected}")
    D = dual_complex(C)
    dual_values = {i: hypercohomology(D, i) for i in range(D.base_degree, D.base_degree + 3)}
    seqs = {
        "torus": hypercohomology_sequence(C, top),
        "dual": hypercohomology_sequence(D, D.base_degree + 2),
    }
    return AbCohProfile(d, r, values, dual_values, seqs)


def profiles_agree(p: AbCohProfile, q: AbCohProfile) -> bool:
    return all(p.values[i].isomorphic(q.values[i]) for i in p.values if i in q.values) and \
        all(p.dual_values[i].isomorphic(q.dual_values[i]) for i in p.dual_values
            if i in q.dual_values)


def dual_profile(d: RootDatum) -> Tuple[FgAbGroup, FgAbGroup]:
    """``(Hom(pi_1, Z), Ext(pi_1, Z))``, checked against ``(G^tor)_*`` and ``mu(-1)``."""
    inv = fundamental_invariants(d)
    hom, ext = derived_dual(inv.pi1)
    if hom.free_rank != inv.cochar_torus_quotient.free_rank:
        raise LatticeError("free part of the dual does not match (G^tor)_*")
    if not ext.isomorphic(inv.mu_minus_one):
        raise LatticeError("torsion part of the dual does not match mu(-1)")
    return hom, ext


def ab_long_sequence(s: SESData) -> List[AbHom]:
    """Gamma-cohomology long exact sequence of ``0 -> pi_1(G_1) -> pi_1(G_2) -> pi_1(G_3) -> 0``."""
    check_pi1_exact(s)
    M1 = fundamental_invariants(s.G1).pi1_module
    M2 = fundamental_invariants(s.G2).pi1_module
    M3 = fundamental_invariants(s.G3).pi1_module
    G = M2.group
    M1, M3 = _on_group(M1, G), _on_group(M3, G)
    a = pi1_functor(s.iota)
    b = pi1_functor(s.quot)
    i = GammaMap(M1, M2, AbHom(M1.carrier, M2.carrier, a.matrix))
    p = GammaMap(M2, M3, AbHom(M2.carrier, M3.carrier, b.matrix))
    return cohomology_long_sequence(i, p)


def _on_group(M, G):
    """Rank-0 pieces carry no action; put them on ``G`` trivially."""
    if M.group == G:
        return M
    from .gammamod import GammaModule
    if M.carrier.ngens == 0 or M.group.order == 1:
        return GammaModule.trivial(G, M.carrier)
    raise ResolutionError("modules over different groups")


def render_long_sequence(seq: List[AbHom]) -> str:
    return render_sequence(seq)
