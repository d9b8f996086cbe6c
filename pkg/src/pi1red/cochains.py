"""Cohomology of cochain complexes of presented abelian groups.

Shared by group cohomology, hypercohomology and mapping cones: given the
differentials around one term, compute the cohomology group together with
the cycle inclusion, so that cochain maps induce maps on cohomology and
short exact sequences of complexes give connecting maps.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .lattice import AbHom, FgAbGroup, LatticeError, factor_through, kernel, cokernel, preimage


class Cohomology:
    """``ker(d_out) / im(d_in)`` at one term of a cochain complex.

    Generators of ``group`` are the basis of the cycle lattice, so a class is
    named by the coordinates of a cycle in that basis.
    """

    def __init__(self, d_in: Optional[AbHom], d_out: AbHom):
        self.cochains = d_out.source
        self.cycles_group, self.cycles = kernel(d_out)
        if d_in is None:
            self.group = self.cycles_group
            self.boundaries = None
        else:
            self.boundaries = factor_through(d_in, self.cycles)
            self.group, _ = cokernel(self.boundaries)

    def class_of(self, x: Sequence[int]):
        c = preimage(self.cycles, x)
        if c is None:
            raise LatticeError("cochain is not a cocycle")
        return c

    def representative(self, j: int):
        return self.cycles.column(j)

    def induced(self, other: "Cohomology", chain_map: AbHom) -> AbHom:
        cols = [other.class_of(chain_map(self.cycles.column(j)))
                for j in range(self.cycles_group.ngens)]
        return AbHom.from_columns(self.group, other.group, cols)


def connecting_map(h_c: Cohomology, h_a: Cohomology, p: AbHom, d_b: AbHom, i_next: AbHom) -> AbHom:
    """Connecting map ``H^n(C) -> H^{n+1}(A)`` of ``0 -> A -> B -> C -> 0``.

    ``p`` is ``B^n -> C^n``, ``d_b`` is ``B^n -> B^{n+1}`` and ``i_next`` is
    ``A^{n+1} -> B^{n+1}``.
    """
    cols = []
    for j in range(h_c.cycles_group.ngens):
        b = preimage(p, h_c.cycles.column(j))
        if b is None:
            raise LatticeError("cocycle does not lift through the surjection")
        a = preimage(i_next, d_b(b))
        if a is None:
            raise LatticeError("coboundary of the lift is not in the subcomplex")
        cols.append(h_a.class_of(a))
    return AbHom.from_columns(h_c.group, h_a.group, cols)


def zero_group() -> FgAbGroup:
    return FgAbGroup.zero()
