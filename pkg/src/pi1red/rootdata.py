"""Root data of split reductive groups, a catalog of standard groups and
the lattice invariants attached to them.

A datum of rank ``n`` lives on ``X = Z^n`` (characters) and ``X^vee = Z^n``
(cocharacters) with the standard pairing.  An optional finite group acts on
``X`` through integer matrices acting on column vectors; the induced action
on ``X^vee`` is the contragredient ``(A^{-1})^T``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import intmat as im
from .gammamod import FiniteGroup, GammaModule
from .lattice import AbHom, FgAbGroup, LatticeError, NotExact, is_exact, zero_into, zero_out_of

Vec = Tuple[int, ...]


class RootDatumError(LatticeError):
    """Violation of a root datum axiom; ``axiom`` names which one."""

    def __init__(self, axiom: str, message: str):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom


def pair(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def _reflect(x, a, a_check):
    c = pair(x, a_check)
    return tuple(u - c * v for u, v in zip(x, a))


class RootDatum:
    """``(X, Phi, X^vee, Phi^vee)`` with roots and coroots index-paired."""

    def __init__(self, rank: int, roots: Sequence[Sequence[int]], coroots: Sequence[Sequence[int]],
                 gamma: Optional[FiniteGroup] = None, gamma_matrices: Optional[Sequence] = None,
                 name: str = "", check: bool = True):
        self.rank = rank
        self.roots: List[Vec] = [tuple(r) for r in roots]
        self.coroots: List[Vec] = [tuple(c) for c in coroots]
        self.gamma = gamma
        self.gamma_matrices = [[list(r) for r in A] for A in gamma_matrices] \
            if gamma_matrices is not None else None
        self.name = name
        self._coroot_of = dict(zip(self.roots, self.coroots))
        if check:
            validate(self)

    # -- basic structure ---------------------------------------------------
    def coroot_of(self, root: Sequence[int]) -> Vec:
        return self._coroot_of[tuple(root)]

    @property
    def semisimple_rank(self) -> int:
        return im.rank([list(c) for c in self.coroots], self.rank) if self.coroots else 0

    def positive_roots(self) -> List[Vec]:
        return [r for r in self.roots if next(x for x in r if x) > 0]

    def simple_roots(self) -> List[Vec]:
        """Lexicographically positive system; simple = not a sum of two positives."""
        pos = self.positive_roots()
        pset = set(pos)
        simple = []
        for r in pos:
            if not any(tuple(u - v for u, v in zip(r, s)) in pset for s in pos if s != r):
                simple.append(r)
        return sorted(simple)

    def simple_coroots(self) -> List[Vec]:
        return [self.coroot_of(a) for a in self.simple_roots()]

    def radical_cochars(self) -> List[List[int]]:
        """Basis of ``{lambda in X^vee : <alpha, lambda> = 0 for all roots}``."""
        if not self.roots:
            return [[int(i == j) for i in range(self.rank)] for j in range(self.rank)]
        return im.kernel_basis([list(r) for r in self.roots], self.rank)

    def gamma_on_cochars(self) -> Optional[List[List[List[int]]]]:
        if self.gamma_matrices is None:
            return None
        if self.rank == 0:
            return [[] for _ in self.gamma_matrices]
        out = []
        for A in self.gamma_matrices:
            inv = im.inverse_unimodular(A)
            out.append(im.transpose(inv, self.rank))
        return out

    def cochar_module(self) -> GammaModule:
        G = self.gamma or FiniteGroup.trivial()
        acts = self.gamma_on_cochars() or [im.identity(self.rank)]
        return GammaModule(G, FgAbGroup.free(self.rank), acts)

    def with_gamma(self, gamma: FiniteGroup, matrices) -> "RootDatum":
        return RootDatum(self.rank, self.roots, self.coroots, gamma, matrices, self.name)

    def _key(self):
        gam = None
        if self.gamma is not None:
            gam = (self.gamma, tuple(tuple(map(tuple, A)) for A in self.gamma_matrices))
        return self.rank, tuple(sorted(zip(self.roots, self.coroots))), gam

    def __eq__(self, other) -> bool:
        return isinstance(other, RootDatum) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        label = self.name or "RootDatum"
        return f"{label}(rank={self.rank}, roots={len(self.roots)})"

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        d = {"rank": self.rank, "roots": [list(r) for r in self.roots],
             "coroots": [list(c) for c in self.coroots]}
        if self.name:
            d["name"] = self.name
        if self.gamma is not None:
            d["gamma"] = {"group": self.gamma.to_json(), "matrices": self.gamma_matrices}
        return d

    @classmethod
    def from_json(cls, data: dict) -> "RootDatum":
        for key in ("rank", "roots", "coroots"):
            if key not in data:
                raise RootDatumError("schema", f"missing field '{key}'")
        gamma = mats = None
        if data.get("gamma"):
            gamma = FiniteGroup.from_json(data["gamma"]["group"])
            mats = data["gamma"]["matrices"]
        return cls(data["rank"], data["roots"], data["coroots"], gamma, mats, data.get("name", ""))


def validate(d: RootDatum) -> RootDatum:
    n = d.rank
    if len(d.roots) != len(d.coroots):
        raise RootDatumError("shape", "roots and coroots differ in number")
    for i, (a, c) in enumerate(zip(d.roots, d.coroots)):
        if len(a) != n or len(c) != n:
            raise RootDatumError("shape", f"vector {i} has wrong length")
    if len(set(d.roots)) != len(d.roots):
        raise RootDatumError("shape", "repeated root")
    rootset = set(d.roots)
    for i, (a, c) in enumerate(zip(d.roots, d.coroots)):
        if pair(a, c) != 2:
            raise RootDatumError("pairing", f"<alpha_{i}, alpha_{i}^vee> = {pair(a, c)}")
        neg = tuple(-x for x in a)
        if neg not in rootset or d.coroot_of(neg) != tuple(-x for x in c):
            raise RootDatumError("symmetry", f"root {i} has no negative partner")
        if tuple(2 * x for x in a) in rootset:
            raise RootDatumError("reduced", f"twice root {i} is a root")
    for i, (a, c) in enumerate(zip(d.roots, d.coroots)):
        for j, (b, bc) in enumerate(zip(d.roots, d.coroots)):
            sb = _reflect(b, a, c)
            if sb not in rootset:
                raise RootDatumError("reflection", f"s_{i} sends root {j} outside the root set")
            sbc = _reflect(bc, c, a)
            if d.coroot_of(sb) != sbc:
                raise RootDatumError("reflection", f"s_{i} does not match coroot {j}")
    if d.gamma is not None:
        mats = d.gamma_matrices
        G = d.gamma
        if mats is None or len(mats) != G.order:
            raise RootDatumError("gamma", "need one matrix per group element")
        if mats[G.identity] != im.identity(n):
            raise RootDatumError("gamma", "identity acts nontrivially")
        for g in range(G.order):
            for h in range(G.order):
                if im.matmul(mats[g], mats[h], n) != mats[G.mul(g, h)]:
                    raise RootDatumError("gamma", f"action not multiplicative at ({g}, {h})")
        dual = d.gamma_on_cochars()
        for g in range(G.order):
            for a, c in zip(d.roots, d.coroots):
                ga = tuple(im.matvec(mats[g], a))
                if ga not in rootset:
                    raise RootDatumError("gamma", f"element {g} does not permute the roots")
                if d.coroot_of(ga) != tuple(im.matvec(dual[g], c)):
                    raise RootDatumError("gamma", f"element {g} incompatible with coroots")
    return d


# ------------------------------------------------------------------------------
# catalog
# ------------------------------------------------------------------------------

def cartan_matrix(kind: str, l: int) -> List[List[int]]:
    """Cartan matrix with ``a_ij = <alpha_j, alpha_i^vee>``, Bourbaki numbering."""
    kind = kind.upper()
    if l < 1:
        raise RootDatumError("catalog", "rank must be positive")
    A = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def link(i, j, aij=-1, aji=-1):
        A[i][j], A[j][i] = aij, aji

    if kind == "A":
        for i in range(l - 1):
            link(i, i + 1)
    elif kind in ("B", "C"):
        for i in range(l - 2):
            link(i, i + 1)
        if l >= 2:
            # B: alpha_l short, so <alpha_{l-1}, alpha_l^vee> = -2
            if kind == "B":
                link(l - 2, l - 1, -1, -2)
            else:
                link(l - 2, l - 1, -2, -1)
    elif kind == "D":
        if l < 2:
            raise RootDatumError("catalog", "type D needs rank >= 2")
        for i in range(l - 2):
            link(i, i + 1)
        if l >= 3:
            link(l - 3, l - 1)
    elif kind == "E":
        if l not in (6, 7, 8):
            raise RootDatumError("catalog", "type E needs rank 6, 7 or 8")
        link(0, 2)
        link(1, 3)
        for i in range(2, l - 1):
            link(i, i + 1)
    elif kind == "F":
        if l != 4:
            raise RootDatumError("catalog", "type F needs rank 4")
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif kind == "G":
        if l != 2:
            raise RootDatumError("catalog", "type G needs rank 2")
        link(0, 1, -3, -1)
    else:
        raise RootDatumError("catalog", f"unknown Cartan type {kind}")
    return A


def _close_under_reflections(simple: List[Tuple[Vec, Vec]]) -> Tuple[List[Vec], List[Vec]]:
    found: Dict[Vec, Vec] = {}
    frontier = list(simple)
    for a, c in simple:
        found[a] = c
    while frontier:
        nxt = []
        for b, bc in frontier:
            for a, c in simple:
                sb, sbc = _reflect(b, a, c), _reflect(bc, c, a)
                if sb not in found:
                    found[sb] = sbc
                    nxt.append((sb, sbc))
        frontier = nxt
    roots = sorted(found)
    return roots, [found[r] for r in roots]


def simply_connected(kind: str, l: int) -> RootDatum:
    """``X^vee`` spanned by the simple coroots."""
    A = cartan_matrix(kind, l)
    simple = [(tuple(A[i][j] for i in range(l)), tuple(int(i == j) for i in range(l)))
              for j in range(l)]
    roots, coroots = _close_under_reflections(simple)
    return RootDatum(l, roots, coroots, name=f"SC({kind.upper()},{l})")


def adjoint(kind: str, l: int) -> RootDatum:
    """``X`` spanned by the simple roots."""
    A = cartan_matrix(kind, l)
    simple = [(tuple(int(i == j) for i in range(l)), tuple(A[j])) for j in range(l)]
    roots, coroots = _close_under_reflections(simple)
    return RootDatum(l, roots, coroots, name=f"ADJ({kind.upper()},{l})")


def torus(r: int) -> RootDatum:
    return RootDatum(r, [], [], name=f"Torus({r})")


def _e(n, i, s=1):
    return tuple(s if k == i else 0 for k in range(n))


def _add(*vs):
    return tuple(sum(x) for x in zip(*vs))


def general_linear(n: int) -> RootDatum:
    roots = [_add(_e(n, i), _e(n, j, -1)) for i in range(n) for j in range(n) if i != j]
    return RootDatum(n, roots, roots, name=f"GL({n})")


def _classical(n: int, extra: str, name: str) -> RootDatum:
    roots, coroots = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = _add(_e(n, i, si), _e(n, j, sj))
                    roots.append(v)
                    coroots.append(v)
    for i in range(n):
        for s in (1, -1):
            if extra == "B":
                roots.append(_e(n, i, s))
                coroots.append(_e(n, i, 2 * s))
            elif extra == "C":
                roots.append(_e(n, i, 2 * s))
                coroots.append(_e(n, i, s))
    return RootDatum(n, roots, coroots, name=name)


def symplectic(two_n: int) -> RootDatum:
    if two_n % 2 or two_n < 2:
        raise RootDatumError("catalog", "Sp needs an even size")
    return _classical(two_n // 2, "C", f"Sp({two_n})")


def special_orthogonal(m: int) -> RootDatum:
    if m < 2:
        raise RootDatumError("catalog", "SO needs size >= 2")
    if m % 2:
        return _classical(m // 2, "B", f"SO({m})")
    return _classical(m // 2, "D", f"SO({m})")


def spin(m: int) -> RootDatum:
    if m < 3:
        raise RootDatumError("catalog", "Spin needs size >= 3")
    d = simply_connected("B", m // 2) if m % 2 else simply_connected("D", m // 2)
    d.name = f"Spin({m})"
    return d


def product(*data: RootDatum) -> RootDatum:
    n = sum(d.rank for d in data)
    roots, coroots = [], []
    off = 0
    for d in data:
        for a, c in zip(d.roots, d.coroots):
            roots.append((0,) * off + a + (0,) * (n - off - d.rank))
            coroots.append((0,) * off + c + (0,) * (n - off - d.rank))
        off += d.rank
    return RootDatum(n, roots, coroots, name=" x ".join(d.name or "?" for d in data))


def central_quotient(d: RootDatum, generators: Sequence[Sequence], name: str = "") -> RootDatum:
    """Enlarge ``X^vee`` by rational cocharacters (a finite subgroup of ``P^vee / X^vee``)."""
    n = d.rank
    gens = [[Fraction(x) for x in g] for g in generators]
    for k, g in enumerate(gens):
        if len(g) != n:
            raise RootDatumError("shape", f"generator {k} has wrong length")
        for a in d.roots:
            if pair(a, g).denominator != 1:
                raise RootDatumError("not central", f"generator {k} pairs non-integrally with {a}")
    basis = im.lattice_basis([[Fraction(int(i == j)) for i in range(n)] for j in range(n)] + gens, n)
    if len(basis) != n:
        raise RootDatumError("not central", "generators do not span a finite extension")
    B = [[basis[j][i] for j in range(n)] for i in range(n)]   # columns = new basis
    Binv = im.rational_inverse(B)

    def ints(v):
        if any(x.denominator != 1 for x in v):
            raise RootDatumError("not central", "non-integral coordinates")
        return tuple(int(x) for x in v)

    coroots = [ints([sum(Binv[i][k] * c[k] for k in range(n)) for i in range(n)]) for c in d.coroots]
    roots = [ints([sum(B[k][i] * a[k] for k in range(n)) for i in range(n)]) for a in d.roots]
    mats = None
    if d.gamma is not None:
        # A' = B^T A B^{-T}
        mats = []
        for A in d.gamma_matrices:
            M = [[sum(B[k][i] * A[k][l] * Binv[j][l] for k in range(n) for l in range(n))
                  for j in range(n)] for i in range(n)]
            if any(x.denominator != 1 for row in M for x in row):
                raise RootDatumError("gamma", "quotient subgroup is not Gamma-stable")
            mats.append([[int(x) for x in row] for row in M])
    return RootDatum(n, roots, coroots, d.gamma, mats, name or f"{d.name}/K")


CATALOG_NAMES = ["Torus", "GL", "SL", "PGL", "Sp", "SO", "Spin", "SC", "ADJ", "Product",
                 "CentralQuotient"]


def standard_group(name: str, *params) -> RootDatum:
    """Catalog lookup, e.g. ``standard_group("PGL", 3)`` or ``("SC", "E", 6)``."""
    try:
        if name == "Torus":
            return torus(int(params[0]))
        if name == "GL":
            return general_linear(int(params[0]))
        if name == "SL":
            d = simply_connected("A", int(params[0]) - 1)
            d.name = f"SL({params[0]})"
            return d
        if name == "PGL":
            d = adjoint("A", int(params[0]) - 1)
            d.name = f"PGL({params[0]})"
            return d
        if name == "Sp":
            return symplectic(int(params[0]))
        if name == "SO":
            return special_orthogonal(int(params[0]))
        if name == "Spin":
            return spin(int(params[0]))
        if name == "SC":
            return simply_connected(str(params[0]), int(params[1]))
        if name == "ADJ":
            return adjoint(str(params[0]), int(params[1]))
        if name == "Product":
            return product(*params)
        if name == "CentralQuotient":
            return central_quotient(params[0], params[1])
    except (IndexError, ValueError, TypeError) as exc:
        if isinstance(exc, RootDatumError):
            raise
        raise RootDatumError("catalog", f"bad parameters for {name}: {params}") from exc
    raise RootDatumError("catalog", f"unknown group {name}")


def parse_group_spec(words: Sequence[str]) -> RootDatum:
    """``["PGL", "3"]``, ``["SC", "E", "6"]`` or ``["PGL(3)"]`` style specs."""
    if len(words) == 1 and "(" in words[0]:
        head, rest = words[0].split("(", 1)
        words = [head] + [w.strip() for w in rest.rstrip(")").split(",") if w.strip()]
    if not words:
        raise RootDatumError("catalog", "empty group spec")
    return standard_group(words[0], *words[1:])


# ------------------------------------------------------------------------------
# invariants
# ------------------------------------------------------------------------------

@dataclass
class GroupInvariants:
    coroot_lattice: List[List[int]]
    root_lattice: List[List[int]]
    pi1: FgAbGroup
    pi1_module: GammaModule
    mu_star: FgAbGroup
    mu1_star: FgAbGroup
    mu_minus_one: FgAbGroup
    center_chars: FgAbGroup
    cochar_torus_quotient: FgAbGroup
    is_semisimple: bool
    is_simply_connected: bool
    is_adjoint: bool
    mu_sequence: List[AbHom] = field(repr=False, default_factory=list)


def coroot_inclusion(d: RootDatum) -> AbHom:
    """``Z^{#coroots} -> X^vee``; its cokernel is ``pi_1``."""
    src = FgAbGroup.free(len(d.coroots))
    return AbHom(src, FgAbGroup.free(d.rank), im.from_columns(d.coroots, d.rank)
                 if d.coroots else im.zeros(d.rank, 0))


def pi1_group(d: RootDatum) -> FgAbGroup:
    return FgAbGroup(d.rank, [list(c) for c in d.coroots])


def restriction_to_weights(d: RootDatum) -> List[List[int]]:
    """Matrix of ``X -> Z^l``, ``chi -> (<chi, alpha_i^vee>)_i`` over simple coroots."""
    return [list(c) for c in d.simple_coroots()]


def fundamental_invariants(d: RootDatum) -> GroupInvariants:
    n = d.rank
    cor = [list(c) for c in d.coroots]
    pi1 = pi1_group(d)
    sat = im.saturation(cor, n)
    # mu(-1) = sat(Q^vee) / Q^vee, presented on the basis of sat
    sat_cols = im.from_columns(sat, n) if sat else im.zeros(n, 0)
    rels = [im.solve(sat_cols, c, len(sat)) for c in cor] if sat else []
    mu_m1 = FgAbGroup(len(sat), rels)
    gtor = FgAbGroup(n, sat)
    simple_cor = restriction_to_weights(d)
    l = len(simple_cor)
    # mu^* = Z^l / image of X
    mu_star = FgAbGroup(l, [[simple_cor[i][k] for i in range(l)] for k in range(n)])
    rad = d.radical_cochars()
    amb = rad + simple_cor
    mu1_star = FgAbGroup(len(amb), [[amb[i][k] for i in range(len(amb))] for k in range(n)])
    center = FgAbGroup(n, [list(a) for a in d.roots])
    inc = AbHom(mu_m1, pi1, sat_cols)
    proj = AbHom(pi1, gtor, im.identity(n))
    seq = [zero_into(mu_m1), inc, proj, zero_out_of(gtor)]
    cert = is_exact(seq)
    if not cert:
        raise NotExact(f"mu(-1) -> pi1 -> (G^tor)_* not exact at node {cert.node}")
    G = d.gamma or FiniteGroup.trivial()
    acts = d.gamma_on_cochars() or [im.identity(n)]
    pi1_mod = GammaModule(G, pi1, acts)
    semisimple = d.semisimple_rank == n
    return GroupInvariants(
        coroot_lattice=im.hermite_normal_form(cor, n),
        root_lattice=im.hermite_normal_form([list(a) for a in d.roots], n),
        pi1=pi1, pi1_module=pi1_mod, mu_star=mu_star, mu1_star=mu1_star,
        mu_minus_one=mu_m1, center_chars=center, cochar_torus_quotient=gtor,
        is_semisimple=semisimple,
        is_simply_connected=semisimple and pi1.is_trivial(),
        is_adjoint=semisimple and center.is_trivial(),
        mu_sequence=seq,
    )


def simply_connected_cover(d: RootDatum) -> Tuple[RootDatum, AbHom]:
    """The datum of ``G~`` (cocharacters = Q^vee on the simple coroots) and ``d_*``."""
    sc_cor = [list(c) for c in d.simple_coroots()]
    l = len(sc_cor)
    n = d.rank
    S = im.from_columns(sc_cor, n) if sc_cor else im.zeros(n, 0)
    roots = [tuple(pair(a, c) for c in sc_cor) for a in d.roots]
    coroots = []
    for c in d.coroots:
        x = im.solve(S, list(c), l)
        if x is None:
            raise LatticeError("simple coroots do not span the coroot lattice")
        coroots.append(tuple(x))
    cover = RootDatum(l, roots, coroots, name=f"cover of {d.name}" if d.name else "")
    dstar = AbHom(FgAbGroup.free(l), FgAbGroup.free(n), S)
    return cover, dstar


def irreducible_components(d: RootDatum) -> List[List[int]]:
    """Root indices grouped by simple factor (connected under non-orthogonality)."""
    n = len(d.roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if pair(d.roots[i], d.coroots[j]):
                parent[find(i)] = find(j)
    comps: Dict[int, List[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    return sorted(comps.values())
