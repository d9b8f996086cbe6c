"""Central extensions by tori with simply connected derived group, and the
fundamental group computed from them.

Everything is encoded on cocharacter lattices.  A resolution of ``G``
records the lattice ``X_H^vee`` of the total group, the surjection
``p: X_H^vee -> X_G^vee`` and the inclusion of the kernel torus
``T_* -> X_H^vee``.  Then ``R_* = X_H^vee / Q_H^vee`` are the cocharacters of
``H^tor`` and ``pi_1 = cok[T_* -> R_*]``.

The explicit construction realizes ``H`` as the quotient of
``rad(G) x G~ x T`` by ``mu_1 = ker[rad(G) x G~ -> G]`` embedded
antidiagonally.  In ambient coordinates ``(a, b, t)`` (radical, simple
coroots, kernel torus) the lattice ``X_H^vee`` is spanned by ``Z^{k+l+s}``
and the vectors ``(y, -E^T y)`` with ``y`` running over ``M^{-1} Z^n``,
where ``M = [Rad | Cor]`` and the columns of ``E`` generate ``mu_1^*``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from . import intmat as im
from .complexes import ComplexMorphism, TwoTermComplex, dual_morphism, is_quasi_isomorphism
from .gammamod import FiniteGroup, GammaModule
from .lattice import (AbHom, FgAbGroup, LatticeError, NotExact, is_exact, render_sequence,
                      short_exact, snake_sequence, zero_into, zero_out_of)
from .rootdata import (RootDatum, RootDatumError, coroot_inclusion, fundamental_invariants, pair,
                       pi1_group)


class ResolutionError(LatticeError):
    pass


def _free(n: int) -> FgAbGroup:
    return FgAbGroup.free(n)


def _mat(cols: Sequence[Sequence[int]], nrows: int) -> List[List[int]]:
    return im.from_columns(cols, nrows) if cols else im.zeros(nrows, 0)


def _inv_t(A: Sequence[Sequence[int]]) -> List[List[int]]:
    n = len(A)
    return im.transpose(im.inverse_unimodular(A), n) if n else []


# ------------------------------------------------------------------------------
# homomorphisms of groups
# ------------------------------------------------------------------------------

class GroupHomData:
    """A torus-compatible homomorphism, given by its map of cocharacter lattices."""

    def __init__(self, source: RootDatum, target: RootDatum, cochar_map, normal: bool = False):
        self.source = source
        self.target = target
        self.normal = normal
        n1, n2 = source.rank, target.rank
        K = [list(r) for r in cochar_map] if n2 else []
        if len(K) != n2 or any(len(r) != n1 for r in K):
            raise ResolutionError(f"cochar map must be {n2}x{n1}")
        self.matrix = K
        self.hom = AbHom(_free(n1), _free(n2), K if n2 else [])
        q2 = im.hermite_normal_form([list(c) for c in target.coroots], n2)
        tcor = set(target.coroots)
        for c in source.coroots:
            img = im.matvec(K, c) if n2 else []
            if im.hnf_member(q2, img) is None:
                raise ResolutionError("cochar map does not send Q^vee into Q^vee")
            if normal and tuple(img) not in tcor:
                raise ResolutionError("normal map must send coroots to coroots")

    @classmethod
    def identity(cls, d: RootDatum) -> "GroupHomData":
        return cls(d, d, im.identity(d.rank), normal=True)

    def __matmul__(self, other: "GroupHomData") -> "GroupHomData":
        if other.target != self.source:
            raise ResolutionError("homomorphisms are not composable")
        K = im.matmul(self.matrix, other.matrix, other.source.rank) if self.target.rank else []
        return GroupHomData(other.source, self.target, K)

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "cochar_map": self.matrix, "normal": self.normal}

    @classmethod
    def from_json(cls, data: dict) -> "GroupHomData":
        return cls(RootDatum.from_json(data["source"]), RootDatum.from_json(data["target"]),
                   data["cochar_map"], data.get("normal", False))


# ------------------------------------------------------------------------------
# t-resolutions
# ------------------------------------------------------------------------------

class TResolution:
    """``1 -> T -> H -> G -> 1`` on cocharacters.

    ``proj`` is ``X_H^vee -> X_G^vee``, ``t_incl`` is ``T_* -> X_H^vee``;
    ``root_match[i]`` is the index of the root of ``G`` matching root ``i``
    of ``H``.  ``h_action``/``t_action`` are the Gamma-actions on
    ``X_H^vee`` and ``T_*`` (``None`` when Gamma is trivial).
    """

    def __init__(self, base: RootDatum, total: RootDatum, proj: AbHom, t_incl: AbHom,
                 root_match: Sequence[int], h_action=None, t_action=None, kind: str = "",
                 check: bool = True):
        self.base = base
        self.total = total
        self.proj = proj
        self.t_incl = t_incl
        self.root_match = list(root_match)
        self.h_action = h_action
        self.t_action = t_action
        self.kind = kind
        self.ambient = None
        if check:
            validate_resolution(self)

    @property
    def kernel_rank(self) -> int:
        return self.t_incl.source.ngens

    @property
    def T_star(self) -> FgAbGroup:
        return _free(self.kernel_rank)

    @property
    def R_star(self) -> FgAbGroup:
        return FgAbGroup(self.total.rank, [list(c) for c in self.total.coroots])

    @property
    def pi1(self) -> FgAbGroup:
        N = self.total.rank
        rels = [list(c) for c in self.total.coroots] + [list(c) for c in self.t_incl.columns()]
        return FgAbGroup(N, rels)

    @property
    def char_injection(self) -> AbHom:
        n, N = self.base.rank, self.total.rank
        return AbHom(_free(n), _free(N), im.transpose(self.proj.matrix, N) if n else im.zeros(N, 0))

    def t_to_r(self) -> AbHom:
        return AbHom(self.T_star, self.R_star, self.t_incl.matrix)

    @property
    def group(self) -> FiniteGroup:
        return self.base.gamma or FiniteGroup.trivial()

    def __repr__(self) -> str:
        return (f"TResolution({self.kind or 'custom'} of {self.base.name or 'G'}: "
                f"rank H = {self.total.rank}, rank T = {self.kernel_rank})")

    def to_json(self) -> dict:
        d = {"base": self.base.to_json(), "total": self.total.to_json(),
             "proj": [list(r) for r in self.proj.matrix],
             "t_incl": [list(r) for r in self.t_incl.matrix],
             "root_match": self.root_match, "kind": self.kind}
        if self.h_action is not None:
            d["h_action"] = self.h_action
            d["t_action"] = self.t_action
        return d

    @classmethod
    def from_json(cls, data: dict) -> "TResolution":
        base = RootDatum.from_json(data["base"])
        total = RootDatum.from_json(data["total"])
        n, N = base.rank, total.rank
        t = data["t_incl"]
        s = len(t[0]) if t else 0
        return cls(base, total, AbHom(_free(N), _free(n), data["proj"]),
                   AbHom(_free(s), _free(N), t), data["root_match"],
                   data.get("h_action"), data.get("t_action"), data.get("kind", ""))


def validate_resolution(r: TResolution) -> TResolution:
    G, H = r.base, r.total
    n, N = G.rank, H.rank
    if r.proj.source.ngens != N or r.proj.target.ngens != n:
        raise ResolutionError("projection has the wrong shape")
    cert = short_exact(r.t_incl, r.proj)
    if not cert:
        raise ResolutionError(f"0 -> T_* -> X_H^vee -> X_G^vee -> 0 not exact ({cert.reason})")
    for a in H.roots:
        for c in r.t_incl.columns():
            if pair(a, c):
                raise ResolutionError("kernel torus is not central")
    if FgAbGroup(N, [list(c) for c in H.coroots]).torsion:
        raise ResolutionError("derived group of the total group is not simply connected")
    if sorted(r.root_match) != list(range(len(G.roots))) or len(H.roots) != len(G.roots):
        raise ResolutionError("root_match is not a bijection")
    P = r.proj.matrix
    for i, j in enumerate(r.root_match):
        if n and tuple(im.matvec(P, H.coroots[i])) != G.coroots[j]:
            raise ResolutionError(f"coroot {i} of H does not map to its matched coroot")
        pulled = tuple(im.vecmat(G.roots[j], P, N)) if n else (0,) * N
        if pulled != H.roots[i]:
            raise ResolutionError(f"root {i} of H is not the pullback of its matched root")
    if r.h_action is not None:
        bg = G.gamma_on_cochars()
        Gm = r.group
        if len(r.h_action) != Gm.order or len(r.t_action or []) != Gm.order:
            raise ResolutionError("need one action matrix per group element")
        for g in range(Gm.order):
            if n and im.matmul(P, r.h_action[g], N) != im.matmul(bg[g], P, n):
                raise ResolutionError("projection is not equivariant")
            s = r.kernel_rank
            if s and im.matmul(r.h_action[g], r.t_incl.matrix, s) != \
                    im.matmul(r.t_incl.matrix, r.t_action[g], s):
                raise ResolutionError("kernel torus is not Gamma-stable")
    return r


def pi1_of_resolution(r: TResolution) -> FgAbGroup:
    """``cok[T_* -> R_*]``; the map is checked to be injective."""
    if not r.t_to_r().is_injective():
        raise ResolutionError("internal consistency: T_* -> R_* is not injective")
    return r.pi1


def theta(r: TResolution) -> AbHom:
    """``pi_1(R) -> X^vee / Q^vee`` induced by the projection; always an isomorphism."""
    f = AbHom(r.pi1, pi1_group(r.base), r.proj.matrix)
    if not f.is_isomorphism():
        raise ResolutionError("internal consistency: pi_1(R) -> pi_1(G) is not an isomorphism")
    return f


# -- explicit pushout construction ----------------------------------------------

def _ambient_data(d: RootDatum):
    rad = d.radical_cochars()
    cor = [list(c) for c in d.simple_coroots()]
    n = d.rank
    M = _mat(rad + cor, n)
    Minv = im.rational_inverse(M) if n else []
    return rad, cor, M, Minv


def mu1_star(d: RootDatum) -> FgAbGroup:
    """Characters of ``ker[rad(G) x G~ -> G]`` as ``Z^{k+l} / M^T Z^n``."""
    _, _, M, _ = _ambient_data(d)
    return FgAbGroup(d.rank, [list(r) for r in M])


def _ambient_gamma(d: RootDatum, M, Minv):
    """Block action ``M^{-1} B_g M`` on ``Z^k (+) Z^l``."""
    out = []
    for B in d.gamma_on_cochars():
        D = [[sum(Minv[i][a] * B[a][b] * M[b][j] for a in range(d.rank) for b in range(d.rank))
              for j in range(d.rank)] for i in range(d.rank)]
        if any(x.denominator != 1 for row in D for x in row):
            raise ResolutionError("Gamma does not preserve radical and coroot lattices")
        out.append([[int(x) for x in row] for row in D])
    return out


def _pushout_resolution(d: RootDatum, E: Sequence[Sequence[int]], s: int,
                        t_action=None, kind: str = "") -> TResolution:
    n = d.rank
    rad, cor, M, Minv = _ambient_data(d)
    k, l = len(rad), len(cor)
    m = k + l
    if len(E) != m or any(len(row) != s for row in E):
        raise ResolutionError(f"embedding data must be a {m}x{s} matrix")
    # surjectivity of Z^s -> mu_1^*
    if not FgAbGroup(m, [list(r) for r in M] + [[E[i][j] for i in range(m)] for j in range(s)]) \
            .is_trivial():
        raise ResolutionError("not an embedding of mu_1")
    N = m + s
    gens = [[Fraction(int(i == j)) for i in range(N)] for j in range(N)]
    for j in range(n):
        y = [Minv[i][j] for i in range(m)]
        t = [-sum(E[i][c] * y[i] for i in range(m)) for c in range(s)]
        gens.append(y + t)
    basis = im.lattice_basis(gens, N)
    B = [[basis[j][i] for j in range(N)] for i in range(N)]
    Binv = im.rational_inverse(B)

    def coords(v):
        c = [sum(Binv[i][j] * v[j] for j in range(N)) for i in range(N)]
        if any(x.denominator != 1 for x in c):
            raise ResolutionError("internal consistency: vector outside X_H^vee")
        return [int(x) for x in c]

    proj = [[sum(M[i][a] * B[a][j] for a in range(m)) for j in range(N)] for i in range(n)]
    if any(x.denominator != 1 for row in proj for x in row):
        raise ResolutionError("internal consistency: projection not integral")
    proj = [[int(x) for x in row] for row in proj]
    t_cols = [coords([0] * m + [int(i == c) for i in range(s)]) for c in range(s)]
    Cor = _mat(cor, n)
    coroots, roots = [], []
    for a, c in zip(d.roots, d.coroots):
        b = im.solve(Cor, list(c), l)
        coroots.append(tuple(coords([0] * k + b + [0] * s)))
        roots.append(tuple(im.vecmat(a, proj, N)))
    h_action = t_act = mats = None
    if d.gamma is not None:
        if t_action is None:
            raise ResolutionError("Gamma-equivariant resolution needs an action on the kernel torus")
        Dg = _ambient_gamma(d, M, Minv)
        h_action = []
        for g, D in enumerate(Dg):
            Tg = t_action[g]
            # E^T D_g = T_g E^T makes the antidiagonal embedding equivariant
            ET = [[E[i][c] for i in range(m)] for c in range(s)]
            if s and im.matmul(ET, D, m) != im.matmul(Tg, ET, m):
                raise ResolutionError("embedding of mu_1 is not Gamma-equivariant")
            full = im.block_diag([(D, m, m), (Tg, s, s)])
            h = [[sum(Binv[i][a] * full[a][b] * B[b][j] for a in range(N) for b in range(N))
                  for j in range(N)] for i in range(N)]
            h_action.append([[int(x) for x in row] for row in h])
        t_act = [[list(r) for r in Tg] for Tg in t_action]
        mats = [_inv_t(h) for h in h_action]
    total = RootDatum(N, roots, coroots, d.gamma, mats,
                      name=f"H[{kind}]({d.name})" if d.name else "", check=False)
    r = TResolution(d, total, AbHom(_free(N), _free(n), proj if n else []),
                    AbHom(_free(s), _free(N), _mat(t_cols, N)),
                    list(range(len(d.roots))), h_action, t_act, kind)
    r.ambient = (k, l, s, B, Binv)
    return r


@lru_cache(maxsize=256)
def t_resolution_from_torus(d: RootDatum) -> TResolution:
    """Kernel ``T~`` = maximal torus of ``G~``; ``H^tor`` has cocharacters ``X^vee``."""
    rad, cor, M, Minv = _ambient_data(d)
    k, l = len(rad), len(cor)
    E = [[0] * l for _ in range(k)] + im.identity(l)
    t_action = None
    if d.gamma is not None:
        t_action = [[row[k:] for row in D[k:]] for D in _ambient_gamma(d, M, Minv)]
    r = _pushout_resolution(d, E, l, t_action, kind="torus")
    _check_torus_identification(r)
    return r


def torus_identification(r: TResolution) -> AbHom:
    """``R_* -> X^vee``, ``(a, b, t) -> Rad a - Cor t``, for torus resolutions."""
    if r.kind != "torus" or r.ambient is None:
        raise ResolutionError("only defined for torus resolutions")
    k, l, s, B, _ = r.ambient
    d = r.base
    rad, cor, _, _ = _ambient_data(d)
    n, N = d.rank, r.total.rank
    cols = []
    for j in range(N):
        v = [B[i][j] for i in range(N)]
        w = [sum(rad[a][i] * v[a] for a in range(k)) - sum(cor[c][i] * v[k + l + c] for c in range(l))
             for i in range(n)]
        if any(Fraction(x).denominator != 1 for x in w):
            raise ResolutionError("internal consistency: identification not integral")
        cols.append([int(x) for x in w])
    return AbHom(r.R_star, _free(n), _mat(cols, n))


def _check_torus_identification(r: TResolution) -> None:
    rho = torus_identification(r)
    if not rho.is_isomorphism():
        raise ResolutionError("H^tor is not identified with the maximal torus")
    # it carries T_* onto Q^vee, hence induces the same iso on pi_1 as theta
    induced = AbHom(r.pi1, pi1_group(r.base), rho.matrix)
    if not induced.equals(theta(r)):
        raise ResolutionError("internal consistency: identifications disagree on pi_1")


def default_embedding(d: RootDatum) -> Tuple[List[List[int]], int]:
    """One kernel-torus generator per invariant factor of ``mu_1^*``."""
    mu = mu1_star(d)
    gens = mu.canonical_generators()
    m = d.rank
    return [[g[i] for g in gens] for i in range(m)], len(gens)


def redundant_embedding(d: RootDatum) -> Tuple[List[List[int]], int]:
    """The default choice with its first generator repeated (or a zero column)."""
    E, s = default_embedding(d)
    if s:
        return [row + [row[0]] for row in E], s + 1
    return [row + [0] for row in E], s + 1


def t_resolution_generic(d: RootDatum, embedding: Optional[Tuple[Sequence[Sequence[int]], int]] = None,
                         t_action=None) -> TResolution:
    """Pushout along a chosen ``mu_1 -> T``, given as ``(E, s)`` with ``E`` of shape ``(k+l) x s``."""
    E, s = embedding if embedding is not None else default_embedding(d)
    return _pushout_resolution(d, E, s, t_action, kind="generic")


# ------------------------------------------------------------------------------
# m-resolutions
# ------------------------------------------------------------------------------

@dataclass
class MResolution:
    """``1 -> mu_1 -> rad(G) x G~ -> G -> 1`` with the pushed-out torus pair."""
    base: RootDatum
    total: RootDatum
    kernel_chars: FgAbGroup
    t_star: FgAbGroup
    r_star: FgAbGroup
    t_to_r: AbHom

    @property
    def pi1(self) -> FgAbGroup:
        return self.t_to_r.cokernel()[0]


def m_resolution(d: RootDatum, embedding=None) -> MResolution:
    n = d.rank
    rad, cor, M, Minv = _ambient_data(d)
    k, l = len(rad), len(cor)
    m = k + l
    E, s = embedding if embedding is not None else default_embedding(d)
    if not FgAbGroup(m, [list(r) for r in M] + [[E[i][j] for i in range(m)] for j in range(s)]) \
            .is_trivial():
        raise ResolutionError("not an embedding of mu_1")
    Cor = _mat(cor, n)
    coroots = [tuple([0] * k + im.solve(Cor, list(c), l)) for c in d.coroots]
    roots = [tuple(im.vecmat(a, M, m)) for a in d.roots]
    total = RootDatum(m, roots, coroots, name=f"rad x cover of {d.name}" if d.name else "")
    # R_* = Z^k (+) Z^s + span{(y_rad, -E^T y)}
    Nr = k + s
    gens = [[Fraction(int(i == j)) for i in range(Nr)] for j in range(Nr)]
    for j in range(n):
        y = [Minv[i][j] for i in range(m)]
        gens.append(y[:k] + [-sum(E[i][c] * y[i] for i in range(m)) for c in range(s)])
    basis = im.lattice_basis(gens, Nr)
    B = [[basis[j][i] for j in range(Nr)] for i in range(Nr)]
    Binv = im.rational_inverse(B) if Nr else []
    cols = []
    for c in range(s):
        v = [0] * k + [int(i == c) for i in range(s)]
        x = [sum(Binv[i][j] * v[j] for j in range(Nr)) for i in range(Nr)]
        cols.append([int(q) for q in x])
    t_to_r = AbHom(_free(s), _free(Nr), _mat(cols, Nr))
    if not t_to_r.is_injective():
        raise ResolutionError("internal consistency: T_* -> R_* is not injective")
    return MResolution(d, total, mu1_star(d), _free(s), _free(Nr), t_to_r)


def pi1_via_m_resolution(d: RootDatum) -> FgAbGroup:
    p = m_resolution(d).pi1
    ref = fundamental_invariants(d).pi1
    if not p.isomorphic(ref):
        raise ResolutionError(f"m-resolution gives {p}, expected {ref}")
    return p


# ------------------------------------------------------------------------------
# morphisms and fiber products
# ------------------------------------------------------------------------------

def _coroot_hnf(d: RootDatum) -> List[List[int]]:
    return im.hermite_normal_form([list(c) for c in d.coroots], d.rank)


class ResolutionMorphism:
    """Lattice maps ``phi_T: T'_* -> T_*`` and ``phi_H: X_{H'}^vee -> X_H^vee``
    lying over ``base_map`` (the identity unless the bases differ)."""

    def __init__(self, source: TResolution, target: TResolution, phi_T: AbHom, phi_H: AbHom,
                 base_map: Optional[AbHom] = None):
        self.source, self.target = source, target
        self.phi_T, self.phi_H = phi_T, phi_H
        if base_map is None:
            if source.base != target.base:
                raise ResolutionError("incompatible bases")
            base_map = AbHom.identity(_free(source.base.rank))
        self.base_map = base_map
        if not (target.proj @ phi_H).equals(base_map @ source.proj):
            raise ResolutionError("morphism does not lie over the base map")
        if not (phi_H @ source.t_incl).equals(target.t_incl @ phi_T):
            raise ResolutionError("morphism does not restrict to the kernel tori")
        q = _coroot_hnf(target.total)
        for c in source.total.coroots:
            if im.hnf_member(q, phi_H(c)) is None:
                raise ResolutionError("morphism does not preserve coroot lattices")

    @property
    def over_identity(self) -> bool:
        n = self.source.base.rank
        return self.source.base == self.target.base and \
            [list(r) for r in self.base_map.matrix] == im.identity(n)

    def perturbed(self, h_rows: Sequence[Sequence[int]]) -> "ResolutionMorphism":
        """``phi_H + t o h`` for ``h: X_{H'}^vee -> T_*`` killing ``Q_{H'}^vee``."""
        N1 = self.source.total.rank
        s = self.target.kernel_rank
        h = AbHom(_free(N1), _free(s), [list(r) for r in h_rows] if s else [])
        for c in self.source.total.coroots:
            if any(h(c)):
                raise ResolutionError("perturbation does not vanish on Q^vee")
        phi_H = self.phi_H + self.target.t_incl @ h
        phi_T = self.phi_T + h @ self.source.t_incl
        return ResolutionMorphism(self.source, self.target, phi_T, phi_H, self.base_map)


def identity_morphism(r: TResolution) -> ResolutionMorphism:
    return ResolutionMorphism(r, r, AbHom.identity(r.T_star), AbHom.identity(_free(r.total.rank)))


def r_star_coordinates(r: TResolution) -> Tuple[List[List[int]], List[List[int]]]:
    """``(chi, sec)``: ``chi`` identifies ``R_*`` with ``Z^m``, ``sec`` is a section."""
    N = r.total.rank
    cor = [list(c) for c in r.total.coroots]
    chi = im.kernel_basis(cor, N) if cor else im.identity(N)
    m = len(chi)
    solver = im.LinearSolver(chi, N) if m else None
    sec_cols = [solver.solve([int(i == j) for i in range(m)]) for j in range(m)] if m else []
    return chi, _mat(sec_cols, N)


def cochar_complex(r: TResolution, forget_gamma: bool = False) -> TwoTermComplex:
    """``T_* -> R_*`` in degrees ``(-1, 0)`` as Gamma-modules on free carriers."""
    chi, sec = r_star_coordinates(r)
    m, N, s = len(chi), r.total.rank, r.kernel_rank
    G = FiniteGroup.trivial() if forget_gamma else r.group
    d = im.matmul(chi, r.t_incl.matrix, s) if m else []
    if r.h_action is None or forget_gamma:
        t_mod = GammaModule.trivial(G, _free(s))
        r_mod = GammaModule.trivial(G, _free(m))
    else:
        t_mod = GammaModule(G, _free(s), r.t_action)
        acts = [im.matmul(im.matmul(chi, h, N), sec, m) if m else [] for h in r.h_action]
        r_mod = GammaModule(G, _free(m), acts)
    return TwoTermComplex(-1, t_mod, r_mod, AbHom(_free(s), _free(m), d))


def _complex_morphism(mor: ResolutionMorphism) -> ComplexMorphism:
    forget = mor.source.h_action is None or mor.target.h_action is None
    src = cochar_complex(mor.source, forget)
    tgt = cochar_complex(mor.target, forget)
    chi_s, sec_s = r_star_coordinates(mor.source)
    chi_t, _ = r_star_coordinates(mor.target)
    N1 = mor.source.total.rank
    ms, mt = len(chi_s), len(chi_t)
    f1 = im.matmul(im.matmul(chi_t, mor.phi_H.matrix, N1), sec_s, ms) if mt else []
    return ComplexMorphism(src, tgt, mor.phi_T, AbHom(src.term1.carrier, tgt.term1.carrier, f1))


def pi1_of_morphism(mor: ResolutionMorphism) -> AbHom:
    """Induced map ``pi_1(R') -> pi_1(R)``; an isomorphism over the identity."""
    f = AbHom(mor.source.pi1, mor.target.pi1, mor.phi_H.matrix)
    if not (theta(mor.target) @ f).equals(AbHom(mor.source.pi1, pi1_group(mor.target.base),
                                                  im.matmul(mor.base_map.matrix,
                                                            mor.source.proj.matrix,
                                                            mor.source.total.rank)
                                                  if mor.target.base.rank else [])):
        raise ResolutionError("internal consistency: induced map incompatible with the bases")
    if mor.over_identity:
        if not f.is_isomorphism():
            raise ResolutionError("internal consistency: induced map is not an isomorphism")
        cm = _complex_morphism(mor)
        if not is_quasi_isomorphism(cm) or not is_quasi_isomorphism(dual_morphism(cm)):
            raise ResolutionError("internal consistency: (phi_T, phi_R) is not a quasi-isomorphism")
    return f


def fiber_product_resolution(r1: TResolution, r2: TResolution,
                             kappa: Optional[GroupHomData] = None
                             ) -> Tuple[TResolution, ResolutionMorphism, ResolutionMorphism]:
    """``H' = H_1 x_{G_2} H_2`` as a resolution of ``G_1`` with kernel ``T_1 x T_2``."""
    if kappa is None:
        if r1.base != r2.base:
            raise ResolutionError("incompatible bases")
        kappa = GroupHomData.identity(r1.base)
    if kappa.source != r1.base or kappa.target != r2.base:
        raise ResolutionError("incompatible bases")
    G1 = r1.base
    n1, n2 = G1.rank, r2.base.rank
    N1, N2 = r1.total.rank, r2.total.rank
    s1, s2 = r1.kernel_rank, r2.kernel_rank
    K = kappa.matrix
    Kp1 = im.matmul(K, r1.proj.matrix, N1) if n2 else []
    A = [list(Kp1[i]) + [-x for x in r2.proj.matrix[i]] for i in range(n2)]
    kb = im.kernel_basis(A, N1 + N2)
    kb = im.hermite_normal_form(kb, N1 + N2)
    Np = len(kb)
    Bk = _mat(kb, N1 + N2)
    solver = im.LinearSolver(Bk, Np)

    def coords(v):
        x = solver.solve(list(v))
        if x is None:
            raise ResolutionError("internal consistency: vector outside the fiber product")
        return x

    pr1 = [row[:] for row in Bk[:N1]]
    pr2 = [row[:] for row in Bk[N1:]]
    proj = im.matmul(r1.proj.matrix, pr1, Np) if n1 else []
    t_cols = [coords(list(c) + [0] * N2) for c in r1.t_incl.columns()] + \
             [coords([0] * N1 + list(c)) for c in r2.t_incl.columns()]
    # lift kappa_* of each coroot uniquely into Q_{H_2}^vee
    qh2 = _coroot_hnf(r2.total)
    lift = im.LinearSolver(im.matmul(r2.proj.matrix, _mat(qh2, N2), len(qh2)), len(qh2)) \
        if qh2 and n2 else None
    coroots, roots = [], []
    for i, c1 in enumerate(r1.total.coroots):
        g = G1.coroots[r1.root_match[i]]
        target = im.matvec(K, g) if n2 else []
        if lift is None:
            c2 = [0] * N2
        else:
            coef = lift.solve(target)
            if coef is None:
                raise ResolutionError("coroot image does not lift to Q_H^vee")
            c2 = [sum(qh2[a][j] * coef[a] for a in range(len(qh2))) for j in range(N2)]
        coroots.append(tuple(coords(list(c1) + c2)))
        roots.append(tuple(im.vecmat(list(r1.total.roots[i]) + [0] * N2, Bk, Np)))
    h_action = t_action = mats = None
    if r1.h_action is not None and r2.h_action is not None:
        h_action, t_action = [], []
        for g in range(r1.group.order):
            full = im.block_diag([(r1.h_action[g], N1, N1), (r2.h_action[g], N2, N2)])
            img = im.matmul(full, Bk, Np)
            h_action.append(_mat([coords(c) for c in im.columns(img, Np)], Np))
            t_action.append(im.block_diag([(r1.t_action[g], s1, s1), (r2.t_action[g], s2, s2)]))
        mats = [_inv_t(h) for h in h_action]
    total = RootDatum(Np, roots, coroots, G1.gamma if mats else None, mats, check=False)
    rp = TResolution(G1, total, AbHom(_free(Np), _free(n1), proj),
                     AbHom(_free(s1 + s2), _free(Np), _mat(t_cols, Np)),
                     r1.root_match, h_action, t_action, kind="fiber product")
    ident_T1 = [[int(i == j) for j in range(s1 + s2)] for i in range(s1)]
    ident_T2 = [[int(i + s1 == j) for j in range(s1 + s2)] for i in range(s2)]
    m1 = ResolutionMorphism(rp, r1, AbHom(rp.T_star, r1.T_star, ident_T1),
                            AbHom(_free(Np), _free(N1), pr1))
    m2 = ResolutionMorphism(rp, r2, AbHom(rp.T_star, r2.T_star, ident_T2),
                            AbHom(_free(Np), _free(N2), pr2), base_map=kappa.hom)
    return rp, m1, m2


def canonical_iso(r1: TResolution, r2: TResolution) -> AbHom:
    """``pi_1(R_1) -> pi_1(R_2)`` through the fiber product, checked against a
    second dominator and against the identifications with ``X^vee / Q^vee``."""
    if r1.base != r2.base:
        raise ResolutionError("resolutions of different groups")
    _, a1, a2 = fiber_product_resolution(r1, r2)
    psi = pi1_of_morphism(a2) @ pi1_of_morphism(a1).inverse()
    _, b2, b1 = fiber_product_resolution(r2, r1)
    psi2 = pi1_of_morphism(b2) @ pi1_of_morphism(b1).inverse()
    if not psi.equals(psi2):
        raise ResolutionError("internal consistency: iso depends on the dominating resolution")
    if not psi.equals(theta(r2).inverse() @ theta(r1)):
        raise ResolutionError("internal consistency: iso disagrees with the reference identification")
    return psi


def reference_iso(r: TResolution) -> AbHom:
    """``pi_1(R) -> X^vee / Q^vee`` routed through the torus resolution."""
    rt = t_resolution_from_torus(r.base)
    return theta(rt) @ canonical_iso(r, rt)


# ------------------------------------------------------------------------------
# pi_1 on homomorphisms
# ------------------------------------------------------------------------------

def pi1_direct(kappa: GroupHomData) -> AbHom:
    try:
        return AbHom(pi1_group(kappa.source), pi1_group(kappa.target), kappa.matrix)
    except LatticeError as exc:
        raise ResolutionError("cochar map does not send Q^vee into Q^vee") from exc


def pi1_functor(kappa: GroupHomData) -> AbHom:
    """``pi_1(kappa)`` via a resolution of ``kappa`` and via the direct formula."""
    direct = pi1_direct(kappa)
    r1 = t_resolution_from_torus(kappa.source)
    r2 = t_resolution_from_torus(kappa.target)
    rp, m1, m2 = fiber_product_resolution(r1, r2, kappa)
    via = theta(r2) @ pi1_of_morphism(m2) @ pi1_of_morphism(m1).inverse() @ theta(r1).inverse()
    if not via.equals(direct):
        raise ResolutionError("internal consistency: resolution route disagrees with direct formula")
    return direct


# ------------------------------------------------------------------------------
# short exact sequences
# ------------------------------------------------------------------------------

class SESData:
    """``1 -> G_1 -> G_2 -> G_3 -> 1`` with a partition of the roots of ``G_2``
    into the image of ``Phi_1`` (``sub``) and lifts of ``Phi_3`` (``lift``)."""

    def __init__(self, iota: GroupHomData, quot: GroupHomData, sub: Sequence[int],
                 lift: Sequence[int]):
        self.iota, self.quot = iota, quot
        self.G1, self.G2, self.G3 = iota.source, iota.target, quot.target
        self.sub, self.lift = list(sub), list(lift)
        if quot.source != self.G2:
            raise ResolutionError("maps are not composable")
        if sorted(self.sub + self.lift) != list(range(len(self.G2.roots))):
            raise ResolutionError("root partition does not cover the roots of G_2")
        cert = short_exact(iota.hom, quot.hom)
        if not cert:
            raise ResolutionError(f"cocharacter sequence not exact: {cert.reason} at node {cert.node}")
        img1 = sorted(tuple(im.matvec(iota.matrix, c)) for c in self.G1.coroots)
        sub_cor = sorted(self.G2.coroots[j] for j in self.sub)
        if img1 != sub_cor:
            raise ResolutionError("sub part of the partition is not the image of Phi_1^vee")
        n3 = self.G3.rank
        for j in self.sub:
            if n3 and any(im.matvec(quot.matrix, self.G2.coroots[j])):
                raise ResolutionError("coroots of G_1 do not die in G_3")
        imgs = sorted(tuple(im.matvec(quot.matrix, self.G2.coroots[j])) if n3 else ()
                      for j in self.lift)
        if imgs != sorted(self.G3.coroots):
            raise ResolutionError("lift part of the partition does not map onto Phi_3^vee")

    def to_json(self) -> dict:
        return {"G1": self.G1.to_json(), "G2": self.G2.to_json(), "G3": self.G3.to_json(),
                "iota": self.iota.matrix, "q": self.quot.matrix,
                "partition": {"sub": self.sub, "lift": self.lift}}

    @classmethod
    def from_json(cls, data: dict) -> "SESData":
        for key in ("G1", "G2", "G3", "iota", "q", "partition"):
            if key not in data:
                raise ResolutionError(f"schema: missing field '{key}'")
        part = data["partition"]
        if "sub" not in part or "lift" not in part:
            raise ResolutionError("schema: partition needs 'sub' and 'lift'")
        G1, G2, G3 = (RootDatum.from_json(data[k]) for k in ("G1", "G2", "G3"))
        return cls(GroupHomData(G1, G2, data["iota"], normal=True),
                   GroupHomData(G2, G3, data["q"]), part["sub"], part["lift"])


def normal_subgroup_ses(G2: RootDatum, sub: Sequence[int], central: Sequence[Sequence[int]] = ()
                        ) -> SESData:
    """``G_1`` generated by the roots ``sub`` and the central cocharacters ``central``."""
    n = G2.rank
    sub = sorted(set(sub))
    lift = [j for j in range(len(G2.roots)) if j not in set(sub)]
    span = [list(G2.coroots[j]) for j in sub] + [list(c) for c in central]
    L = im.saturation(span, n)
    m = len(L)
    Lmat = _mat(L, n)
    for j in lift:
        if any(pair(G2.roots[j], v) for v in L):
            raise ResolutionError("remaining roots do not vanish on the subgroup")
    # G_1
    solver = im.LinearSolver(Lmat, m) if m else None
    cor1 = [tuple(solver.solve(list(G2.coroots[j]))) for j in sub]
    roots1 = [tuple(pair(G2.roots[j], v) for v in L) for j in sub]
    # G_3 = G_2 / G_1 on X^vee / L, identified with Z^{n-m} by the annihilator
    chi = im.kernel_basis(im.transpose(Lmat, m), n) if m else im.identity(n)
    chi = im.hermite_normal_form(chi, n) if chi else []
    n3 = len(chi)
    qmat = [list(r) for r in chi]
    cor3 = [tuple(im.matvec(qmat, G2.coroots[j])) if n3 else () for j in lift]
    sec_solver = im.LinearSolver(qmat, n) if n3 else None
    sec = _mat([sec_solver.solve([int(i == k) for i in range(n3)]) for k in range(n3)], n) \
        if n3 else []
    roots3 = [tuple(pair(G2.roots[j], [sec[i][k] for i in range(n)]) for k in range(n3))
              for j in lift]
    gam = mats1 = mats3 = None
    if G2.gamma is not None:
        gam = G2.gamma
        mats1, mats3 = [], []
        for B in G2.gamma_on_cochars():
            a1 = [solver.solve(im.matvec(B, v)) for v in L] if m else []
            if any(x is None for x in a1):
                raise ResolutionError("subgroup is not Gamma-stable")
            mats1.append(_inv_t(_mat(a1, m)) if m else [])
            a3 = im.matmul(im.matmul(qmat, B, n), sec, n3) if n3 else []
            mats3.append(_inv_t(a3) if n3 else [])
    G1 = RootDatum(m, roots1, cor1, gam, mats1, name=f"N({G2.name})" if G2.name else "")
    G3 = RootDatum(n3, roots3, cor3, gam, mats3, name=f"{G2.name}/N" if G2.name else "")
    iota = GroupHomData(G1, G2, Lmat if n else [], normal=True)
    quot = GroupHomData(G2, G3, qmat)
    return SESData(iota, quot, sub, lift)


def _pi1_module(d: RootDatum) -> GammaModule:
    return fundamental_invariants(d).pi1_module


def check_pi1_exact(s: SESData) -> List[AbHom]:
    """``0 -> pi_1(G_1) -> pi_1(G_2) -> pi_1(G_3) -> 0`` via the functor, with the
    same sequence recomputed by the snake lemma on coroot and cocharacter rows."""
    a = pi1_functor(s.iota)
    b = pi1_functor(s.quot)
    seq = [zero_into(a.source), a, b, zero_out_of(b.target)]
    cert = is_exact(seq)
    if not cert:
        raise NotExact(f"pi_1 sequence not exact at node {cert.node}: {cert.reason}")
    snake = snake_route(s)
    for mine, other in ((a, snake[4]), (b, snake[5])):
        if not AbHom(mine.source, mine.target, other.matrix).equals(mine):
            raise ResolutionError("internal consistency: snake route disagrees with the functor")
    return seq


def snake_route(s: SESData) -> List[AbHom]:
    """Snake lemma on ``Q^vee`` rows mapping into ``X^vee`` rows."""
    G1, G2, G3 = s.G1, s.G2, s.G3
    n1, n2, n3 = G1.rank, G2.rank, G3.rank
    q1, q2, q3 = (_coroot_hnf(G) for G in (G1, G2, G3))
    Q1, Q2, Q3 = _free(len(q1)), _free(len(q2)), _free(len(q3))
    s2 = im.LinearSolver(_mat(q2, n2), len(q2)) if q2 else None
    s3 = im.LinearSolver(_mat(q3, n3), len(q3)) if q3 else None
    i_top = _mat([s2.solve(im.matvec(s.iota.matrix, v)) for v in q1], len(q2)) if q1 else \
        im.zeros(len(q2), 0)
    p_top = _mat([s3.solve(im.matvec(s.quot.matrix, v)) if q3 else [] for v in q2], len(q3)) \
        if q2 else im.zeros(len(q3), 0)
    i_top = AbHom(Q1, Q2, i_top if q2 else [])
    p_top = AbHom(Q2, Q3, p_top if q3 else [])
    verts = [AbHom(Q, _free(n), _mat(q, n) if n else []) for Q, q, n in
             ((Q1, q1, n1), (Q2, q2, n2), (Q3, q3, n3))]
    return snake_sequence(i_top, p_top, s.iota.hom, s.quot.hom, *verts)


# ------------------------------------------------------------------------------
# fundamental diagram
# ------------------------------------------------------------------------------

@dataclass
class FundamentalSequence:
    """``0 -> (G^tor)^* -> R^* -> T^* -> mu^* -> 0`` on characters."""
    gtor_chars: FgAbGroup
    r_chars: FgAbGroup
    t_chars: FgAbGroup
    mu_chars: FgAbGroup
    maps: List[AbHom] = field(repr=False)

    def render(self) -> str:
        return render_sequence(self.maps)


def _annihilator(vectors: Sequence[Sequence[int]], n: int) -> List[List[int]]:
    vs = [list(v) for v in vectors]
    return im.kernel_basis(vs, n) if vs else im.identity(n)


def fundamental_sequence(r: TResolution) -> FundamentalSequence:
    G, H = r.base, r.total
    n, N, s = G.rank, H.rank, r.kernel_rank
    gt = _annihilator(G.coroots, n)         # (G^tor)^* inside X
    rc = _annihilator(H.coroots, N)         # R^* inside X_H
    Rs = im.LinearSolver(_mat(rc, N), len(rc)) if rc else None
    pulled = [im.vecmat(chi, r.proj.matrix, N) if n else [0] * N for chi in gt]
    f1 = _mat([Rs.solve(v) for v in pulled], len(rc)) if gt else im.zeros(len(rc), 0)
    f2 = _mat([im.vecmat(psi, r.t_incl.matrix, s) for psi in rc], s) if rc else im.zeros(s, 0)
    A, B, C = _free(len(gt)), _free(len(rc)), _free(s)
    g1 = AbHom(A, B, f1 if rc else [])
    g2 = AbHom(B, C, f2 if s else [])
    mu, proj = g2.cokernel()
    maps = [zero_into(A), g1, g2, proj, zero_out_of(mu)]
    cert = is_exact(maps)
    if not cert:
        raise NotExact(f"fundamental sequence not exact at node {cert.node}: {cert.reason}")
    ref = fundamental_invariants(G).mu_star
    if not mu.isomorphic(ref):
        raise ResolutionError(f"kernel of T -> R has characters {mu}, expected {ref}")
    return FundamentalSequence(A, B, C, mu, maps)


@dataclass
class QisoCertificate:
    """Zig-zag ``center complex -> middle <- torus complex`` of quasi-isomorphisms."""
    center_complex: TwoTermComplex
    torus_complex: TwoTermComplex
    middle: TwoTermComplex
    left: ComplexMorphism
    right: ComplexMorphism

    def cohomology(self) -> Tuple[Tuple[FgAbGroup, FgAbGroup], Tuple[FgAbGroup, FgAbGroup]]:
        return self.center_complex.cohomology(), self.torus_complex.cohomology()


def qiso_certificate(r: TResolution) -> QisoCertificate:
    """Character-side comparison of ``Z(G)^* -> Z(G~)^*`` with ``R^* -> T^*``.

    Middle term: ``X_H / Q_H -> P/Q (+) T^*``, restriction to the simple
    coroots of ``H`` and to ``T_*``.  Both legs are checked to be
    quasi-isomorphisms.
    """
    G, H = r.base, r.total
    n, N, s = G.rank, H.rank, r.kernel_rank
    simple = G.simple_roots()
    l = len(simple)
    g_simple_cor = [list(G.coroot_of(a)) for a in simple]
    idx = {G.roots[j]: i for i, j in enumerate(r.root_match)}
    h_simple_cor = [list(H.coroots[idx[a]]) for a in simple]
    PQ = FgAbGroup(l, [[pair(a, c) for c in g_simple_cor] for a in G.roots])
    ZG = FgAbGroup(n, [list(a) for a in G.roots])
    ZH = FgAbGroup(N, [list(a) for a in H.roots])
    resG = AbHom(ZG, PQ, [[c[k] for k in range(n)] for c in g_simple_cor] if l else [])
    center = TwoTermComplex(0, ZG, PQ, resG)
    rc = _annihilator(H.coroots, N)
    Rstar, Tstar = _free(len(rc)), _free(s)
    tor_d = AbHom(Rstar, Tstar, _mat([im.vecmat(psi, r.t_incl.matrix, s) for psi in rc], s)
                  if rc and s else ([] if not s else im.zeros(s, 0)))
    torus = TwoTermComplex(0, Rstar, Tstar, tor_d)
    mid1 = FgAbGroup(l + s, [list(row) + [0] * s for row in PQ.relations])
    res_rows = [[c[k] for k in range(N)] for c in h_simple_cor] + \
               [[r.t_incl.matrix[k][j] for k in range(N)] for j in range(s)]
    middle = TwoTermComplex(0, ZH, mid1, AbHom(ZH, mid1, res_rows if l + s else []))
    left0 = AbHom(ZG, ZH, im.transpose(r.proj.matrix, N) if n else im.zeros(N, 0))
    left1 = AbHom(PQ, mid1, [[int(i == j) for j in range(l)] for i in range(l + s)] if l + s else [])
    right0 = AbHom(Rstar, ZH, _mat(rc, N) if rc else im.zeros(N, 0))
    right1 = AbHom(Tstar, mid1, [[int(i == j + l) for j in range(s)] for i in range(l + s)]
                   if l + s else [])
    left = ComplexMorphism(center, middle, left0, left1)
    right = ComplexMorphism(torus, middle, right0, right1)
    if not is_quasi_isomorphism(left) or not is_quasi_isomorphism(right):
        raise ResolutionError("no quasi-isomorphism witness: zig-zag leg fails")
    (c0, c1), (t0, t1) = center.cohomology(), torus.cohomology()
    if not (c0.isomorphic(t0) and c1.isomorphic(t1)):
        raise ResolutionError("internal consistency: cohomology of the two complexes differs")
    return QisoCertificate(center, torus, middle, left, right)
