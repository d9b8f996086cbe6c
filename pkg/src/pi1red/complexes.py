"""Two-term complexes of Gamma-modules.

Conventions
-----------
* A complex ``K`` has terms ``K^d -> K^{d+1}``; ``base_degree`` is ``d``.
* Mapping cone of ``f: P -> Q``: ``C(f)^n = P^{n+1} (+) Q^n`` with
  ``d(p, q) = (-d_P p, f p + d_Q q)``.
* Shift: ``K[n]^k = K^{k+n}`` with differential multiplied by ``(-1)^n``.
* Dual: ``(K^vee)^k = Hom(K^{-k}, Z)`` with differential ``-d^T`` and the
  contragredient action ``g -> (g^{-1})^T``.  The minus sign is what makes
  ``C(f)^vee`` and ``C(f^vee)[-1]`` agree term by term once the two middle
  summands are swapped.
* Hypercohomology: total complex ``Tot^n = C^{n-d}(K^d) (+) C^{n-d-1}(K^{d+1})``
  with ``D(x, y) = (delta x, dK x - delta y)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from . import intmat as im
from .cochains import Cohomology, connecting_map
from .gammamod import (FiniteGroup, GammaMap, GammaModule, bar_differential, cochain_group,
                       cochain_map, equivariant_hom)
from .lattice import (AbHom, FgAbGroup, LatticeError, NotExact, cokernel, direct_sum,
                      factor_through, is_exact, kernel, zero_into, zero_out_of)

MAX_BAR_DEGREE = 4


class ComplexError(LatticeError):
    pass


def _as_module(M: Union[GammaModule, FgAbGroup], group: Optional[FiniteGroup]) -> GammaModule:
    if isinstance(M, GammaModule):
        return M
    return GammaModule.trivial(group or FiniteGroup.trivial(), M)


class TwoTermComplex:
    """``term0 -> term1`` placed in degrees ``(base_degree, base_degree + 1)``."""

    def __init__(self, base_degree: int, term0, term1, differential, group: Optional[FiniteGroup] = None):
        if isinstance(term0, GammaModule):
            group = term0.group
        elif isinstance(term1, GammaModule):
            group = term1.group
        self.term0 = _as_module(term0, group)
        self.term1 = _as_module(term1, group)
        d = differential.hom if isinstance(differential, GammaMap) else differential
        self.differential = equivariant_hom(self.term0, self.term1, d).hom
        self.base_degree = base_degree

    @property
    def group(self) -> FiniteGroup:
        return self.term0.group

    def cohomology(self) -> Tuple[FgAbGroup, FgAbGroup]:
        """``(H^d, H^{d+1}) = (ker, cok)`` of the differential."""
        return kernel(self.differential)[0], cokernel(self.differential)[0]

    def as_complex(self) -> "Complex":
        return Complex(self.base_degree, [self.term0, self.term1], [self.differential])

    def is_free(self) -> bool:
        return self.term0.carrier.is_free() and self.term1.carrier.is_free() \
            and not self.term0.carrier.relations and not self.term1.carrier.relations

    def __repr__(self) -> str:
        return (f"TwoTermComplex(deg {self.base_degree}: {self.term0.carrier} -> "
                f"{self.term1.carrier}, {[list(r) for r in self.differential.matrix]})")

    def to_json(self) -> dict:
        return {
            "base_degree": self.base_degree,
            "term0": self.term0.to_json(),
            "term1": self.term1.to_json(),
            "differential": [list(r) for r in self.differential.matrix],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TwoTermComplex":
        if "group" in data or "term0" in data and isinstance(data["term0"], dict) \
                and "action" in data["term0"]:
            t0 = GammaModule.from_json(data["term0"])
            t1 = GammaModule.from_json(data["term1"])
        else:
            t0 = FgAbGroup(data["term0"]["ngens"], data["term0"].get("relations", []))
            t1 = FgAbGroup(data["term1"]["ngens"], data["term1"].get("relations", []))
        t0m = t0.carrier if isinstance(t0, GammaModule) else t0
        t1m = t1.carrier if isinstance(t1, GammaModule) else t1
        return cls(data.get("base_degree", 0), t0, t1, AbHom(t0m, t1m, data["differential"]))


class Complex:
    """A bounded complex ``terms[0] -> terms[1] -> ...`` starting in degree ``start``."""

    def __init__(self, start: int, terms: Sequence[GammaModule], diffs: Sequence[AbHom]):
        if len(diffs) != len(terms) - 1:
            raise ComplexError("need one differential between consecutive terms")
        for k in range(len(diffs) - 1):
            if not (diffs[k + 1] @ diffs[k]).is_zero():
                raise ComplexError(f"d o d != 0 at degree {start + k + 1}")
        self.start = start
        self.terms = list(terms)
        self.diffs = list(diffs)

    def degrees(self) -> range:
        return range(self.start, self.start + len(self.terms))

    def term(self, k: int) -> GammaModule:
        return self.terms[k - self.start]

    def is_acyclic(self) -> bool:
        seq = [zero_into(self.terms[0].carrier)] + self.diffs + [zero_out_of(self.terms[-1].carrier)]
        return bool(is_exact(seq))

    def shift(self, n: int) -> "Complex":
        s = -1 if n % 2 else 1
        return Complex(self.start - n, self.terms, [d if s == 1 else -d for d in self.diffs])

    def dual(self) -> "Complex":
        for M in self.terms:
            if M.carrier.relations:
                raise ComplexError("dual of non-lattice")
        terms = [dual_module(M) for M in reversed(self.terms)]
        diffs = []
        for k, d in enumerate(reversed(self.diffs)):
            src, tgt = d.target.ngens, d.source.ngens
            mt = [[-d.matrix[i][j] for i in range(src)] for j in range(tgt)]
            diffs.append(AbHom(terms[k].carrier, terms[k + 1].carrier, mt))
        return Complex(-(self.start + len(self.terms) - 1), terms, diffs)


def dual_module(M: GammaModule) -> GammaModule:
    """``Hom(M, Z)`` for a free carrier, with the contragredient action."""
    if M.carrier.relations:
        raise ComplexError("dual of non-lattice")
    n = M.carrier.ngens
    G = M.group
    acts = []
    for g in range(G.order):
        a = M.action[G.inv(g)].matrix
        acts.append([[a[j][i] for j in range(n)] for i in range(n)] if n else [])
    return GammaModule(G, FgAbGroup.free(n), acts)


@dataclass
class ComplexMorphism:
    """Components ``f0: P^d -> Q^d`` and ``f1: P^{d+1} -> Q^{d+1}``."""
    source: TwoTermComplex
    target: TwoTermComplex
    f0: AbHom
    f1: AbHom

    def __post_init__(self):
        if self.source.base_degree != self.target.base_degree:
            raise ComplexError("degree mismatch")
        equivariant_hom(self.source.term0, self.target.term0, self.f0)
        equivariant_hom(self.source.term1, self.target.term1, self.f1)
        if not (self.f1 @ self.source.differential).equals(self.target.differential @ self.f0):
            raise ComplexError("morphism does not commute with the differentials")

    def __matmul__(self, other: "ComplexMorphism") -> "ComplexMorphism":
        return ComplexMorphism(other.source, self.target, self.f0 @ other.f0, self.f1 @ other.f1)

    @classmethod
    def identity(cls, C: TwoTermComplex) -> "ComplexMorphism":
        return cls(C, C, AbHom.identity(C.term0.carrier), AbHom.identity(C.term1.carrier))


def cone(f: ComplexMorphism) -> Complex:
    """Mapping cone, a complex in degrees ``d-1, d, d+1``."""
    P, Q = f.source, f.target
    if P.base_degree != Q.base_degree:
        raise ComplexError("degree mismatch")
    mid = _sum_module(P.term1, Q.term0)
    p0, p1 = P.term0.carrier.ngens, P.term1.carrier.ngens
    q0, q1 = Q.term0.carrier.ngens, Q.term1.carrier.ngens
    dP, dQ = P.differential.matrix, Q.differential.matrix
    top = [[-v for v in row] for row in dP] + [list(r) for r in f.f0.matrix]
    d_first = AbHom(P.term0.carrier, mid.carrier, top if p1 + q0 else [])
    rows = [list(f.f1.matrix[i]) + list(dQ[i]) for i in range(q1)]
    d_second = AbHom(mid.carrier, Q.term1.carrier, rows)
    return Complex(P.base_degree - 1, [P.term0, mid, Q.term1], [d_first, d_second])


def _sum_module(A: GammaModule, B: GammaModule) -> GammaModule:
    carrier = direct_sum(A.carrier, B.carrier)
    acts = []
    for g in range(A.group.order):
        acts.append(AbHom(carrier, carrier, im.block_diag([
            (A.action[g].matrix, A.carrier.ngens, A.carrier.ngens),
            (B.action[g].matrix, B.carrier.ngens, B.carrier.ngens)]), check=False))
    return GammaModule(A.group, carrier, acts)


def induced_maps(f: ComplexMorphism) -> Tuple[AbHom, AbHom]:
    """Maps induced by ``f`` on ``H^d`` and ``H^{d+1}``."""
    KP, kp = kernel(f.source.differential)
    KQ, kq = kernel(f.target.differential)
    h0 = factor_through(f.f0 @ kp, kq)
    CP, _ = cokernel(f.source.differential)
    CQ, _ = cokernel(f.target.differential)
    h1 = AbHom(CP, CQ, f.f1.matrix)
    return h0, h1


def is_quasi_isomorphism(f: ComplexMorphism) -> bool:
    """Decided twice, via the induced maps and via acyclicity of the cone."""
    h0, h1 = induced_maps(f)
    direct = h0.is_isomorphism() and h1.is_isomorphism()
    via_cone = cone(f).is_acyclic()
    if direct != via_cone:
        raise ComplexError("cone criterion disagrees with induced maps")
    return direct


def dual_complex(C: TwoTermComplex) -> TwoTermComplex:
    """Degreewise ``Hom(-, Z)``; lives in degrees ``(-d-1, -d)``."""
    if not C.is_free():
        raise ComplexError("dual of non-lattice")
    D = C.as_complex().dual()
    return TwoTermComplex(D.start, D.terms[0], D.terms[1], D.diffs[0])


def dual_morphism(f: ComplexMorphism) -> ComplexMorphism:
    """``f^vee: Q^vee -> P^vee`` (transposed components)."""
    P, Q = dual_complex(f.source), dual_complex(f.target)
    g0 = AbHom(Q.term0.carrier, P.term0.carrier, im.transpose(f.f1.matrix, f.f1.source.ngens)
               if f.f1.matrix else im.zeros(f.f1.source.ngens, 0))
    g1 = AbHom(Q.term1.carrier, P.term1.carrier, im.transpose(f.f0.matrix, f.f0.source.ngens)
               if f.f0.matrix else im.zeros(f.f0.source.ngens, 0))
    return ComplexMorphism(Q, P, g0, g1)


def cone_shift_identity(f: ComplexMorphism) -> bool:
    """Whether ``C(f)^vee`` equals ``C(f^vee)[-1]`` term by term.

    The middle terms are ``P^{d+1,vee} (+) Q^{d,vee}`` and
    ``Q^{d,vee} (+) P^{d+1,vee}``; they are compared through the swap of
    summands, everything else bit for bit.
    """
    lhs = cone(f).dual()
    rhs = cone(dual_morphism(f)).shift(-1)
    if lhs.start != rhs.start or len(lhs.terms) != len(rhs.terms):
        return False
    a = f.source.term1.carrier.ngens   # rank of P^{d+1}
    b = f.target.term0.carrier.ngens   # rank of Q^d
    # permutation sending rhs middle coordinates (Q^d first) to lhs order (P^{d+1} first)
    perm = list(range(b, b + a)) + list(range(b))
    for L, R in zip(lhs.terms, rhs.terms):
        if L.carrier.ngens != R.carrier.ngens:
            return False
    d1l, d1r = lhs.diffs[0].matrix, rhs.diffs[0].matrix
    if [list(r) for r in d1l] != [list(d1r[perm[i]]) for i in range(a + b)]:
        return False
    d2l, d2r = lhs.diffs[1].matrix, rhs.diffs[1].matrix
    if [list(r) for r in d2l] != [[row[perm[j]] for j in range(a + b)] for row in d2r]:
        return False
    for g in range(f.source.group.order):
        ml, mr = lhs.terms[1].action[g].matrix, rhs.terms[1].action[g].matrix
        if [list(r) for r in ml] != [[mr[perm[i]][perm[j]] for j in range(a + b)]
                                     for i in range(a + b)]:
            return False
        for k in (0, 2):
            if lhs.terms[k].action[g].matrix != rhs.terms[k].action[g].matrix:
                return False
    return True


# ------------------------------------------------------------------------------
# hypercohomology
# ------------------------------------------------------------------------------

def _check_degree(C: TwoTermComplex, n: int) -> None:
    if not C.base_degree <= n <= C.base_degree + MAX_BAR_DEGREE - 1:
        raise ComplexError("unsupported degree")


def tot_group(C: TwoTermComplex, n: int) -> FgAbGroup:
    p = n - C.base_degree
    parts = []
    if p >= 0:
        parts.append(cochain_group(C.term0, p))
    else:
        parts.append(FgAbGroup.zero())
    parts.append(cochain_group(C.term1, p - 1) if p >= 1 else FgAbGroup.zero())
    return direct_sum(*parts)


def tot_differential(C: TwoTermComplex, n: int) -> AbHom:
    """``D: Tot^n -> Tot^{n+1}``."""
    p = n - C.base_degree
    src, tgt = tot_group(C, n), tot_group(C, n + 1)
    if p < 0:
        return AbHom.zero(src, tgt)
    d0 = bar_differential(C.term0, p)
    dK = cochain_map(GammaMap(C.term0, C.term1, C.differential), p)
    x_in, x_out = d0.source.ngens, d0.target.ngens
    y_out = dK.target.ngens
    rows = [list(r) + [0] * (src.ngens - x_in) for r in d0.matrix]
    if p >= 1:
        d1 = bar_differential(C.term1, p - 1)
        for i in range(y_out):
            rows.append(list(dK.matrix[i]) + [-v for v in d1.matrix[i]])
    else:
        for i in range(y_out):
            rows.append(list(dK.matrix[i]))
    return AbHom(src, tgt, rows, check=False)


def hypercohomology_data(C: TwoTermComplex, n: int) -> Cohomology:
    _check_degree(C, n)
    d_in = tot_differential(C, n - 1) if n > C.base_degree else None
    return Cohomology(d_in, tot_differential(C, n))


def hypercohomology(C: TwoTermComplex, i: int) -> FgAbGroup:
    """``H^i`` of the total complex of ``C^*(Gamma, K)``."""
    return hypercohomology_data(C, i).group


def _signed_bar(M: GammaModule, k: int) -> AbHom:
    return -bar_differential(M, k)


def hypercohomology_sequence(C: TwoTermComplex, top: int) -> List[AbHom]:
    """Long exact sequence ``... -> H^m(K^d) -> H^m(K^{d+1}) -> H^{m+d+1} -> H^{m+1}(K^d) -> ...``.

    Starts with ``0 -> H^d`` and ends at ``H^top``; comes from the short exact
    sequence of total complexes ``0 -> C(K^{d+1})[-d-1] -> Tot -> C(K^d)[-d] -> 0``.
    """
    d = C.base_degree
    _check_degree(C, top)
    Hs = {n: hypercohomology_data(C, n) for n in range(d, top + 1)}
    seq: List[AbHom] = [zero_into(Hs[d].group)]
    for n in range(d, top + 1):
        m = n - d
        # H^n(Tot) -> H^m(K^d)
        h0 = Cohomology(bar_differential(C.term0, m - 1) if m else None, bar_differential(C.term0, m))
        proj = _tot_projection(C, n)
        seq.append(Hs[n].induced(h0, proj))
        if n == top:
            break
        # connecting H^m(K^d) -> H^m(K^{d+1}) (subcomplex in Tot degree n+1)
        h1 = Cohomology(_signed_bar(C.term1, m - 1) if m else None, _signed_bar(C.term1, m))
        delta = connecting_map(h0, h1, proj, tot_differential(C, n), _tot_inclusion(C, n + 1))
        seq.append(delta)
        seq.append(h1.induced(Hs[n + 1], _tot_inclusion(C, n + 1)))
    cert = is_exact(seq)
    if not cert:
        raise NotExact(f"hypercohomology sequence not exact at node {cert.node}")
    return seq


def _tot_projection(C: TwoTermComplex, n: int) -> AbHom:
    p = n - C.base_degree
    src = tot_group(C, n)
    tgt = cochain_group(C.term0, p)
    k = tgt.ngens
    rows = [[1 if j == i else 0 for j in range(src.ngens)] for i in range(k)]
    return AbHom(src, tgt, rows, check=False)


def _tot_inclusion(C: TwoTermComplex, n: int) -> AbHom:
    p = n - C.base_degree
    src = cochain_group(C.term1, p - 1)
    tgt = tot_group(C, n)
    off = tgt.ngens - src.ngens
    rows = [[1 if i - off == j else 0 for j in range(src.ngens)] for i in range(tgt.ngens)]
    return AbHom(src, tgt, rows, check=False)
