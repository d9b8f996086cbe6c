"""Finitely generated abelian groups given by presentations.

A group is ``Z^g / L`` where ``L`` is the row lattice of an integer relation
matrix.  Elements are integer tuples of length ``g``.  A homomorphism stores
the matrix sending generator ``j`` of the source to column ``j`` (so it acts
on column vectors, ``f(x) = M x``).

The canonical form ``Z^r x Z/d1 x ... x Z/dk`` (``d1 | d2 | ...``, all
``di >= 2``) is computed eagerly from the Smith form of the relations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from . import intmat as im

Elem = Tuple[int, ...]


class LatticeError(ValueError):
    """Base error for ill-posed lattice computations."""


class NotWellDefined(LatticeError):
    pass


class NotComposable(LatticeError):
    pass


class NotExact(LatticeError):
    pass


class FgAbGroup:
    """The group ``Z^ngens / rowspan(relations)``."""

    __slots__ = ("ngens", "relations", "_hnf", "free_rank", "torsion",
                 "_V", "_Vinv", "_moduli", "__dict__")

    def __init__(self, ngens: int, relations: Sequence[Sequence[int]] = ()):
        if ngens < 0:
            raise LatticeError("negative generator count")
        rels = tuple(tuple(int(v) for v in r) for r in relations)
        for r in rels:
            if len(r) != ngens:
                raise LatticeError(f"relation {r} has length {len(r)}, expected {ngens}")
        self.ngens = ngens
        self.relations = rels
        self._hnf = tuple(tuple(r) for r in im.hermite_normal_form(rels, ngens))

        _, D, V, Vinv = im.snf_full(self._hnf, ngens)
        diag = [D[i][i] for i in range(min(len(self._hnf), ngens))]
        diag += [0] * (ngens - len(diag))
        free = [j for j, d in enumerate(diag) if d == 0]
        tors = [j for j, d in enumerate(diag) if d >= 2]
        # canonical coordinate order: free summands first, then torsion
        self._moduli = [(j, 0) for j in free] + [(j, diag[j]) for j in tors]
        self._V = V
        self._Vinv = Vinv
        self.free_rank = len(free)
        self.torsion = tuple(diag[j] for j in tors)

    # -- construction helpers ------------------------------------------------
    @classmethod
    def free(cls, r: int) -> "FgAbGroup":
        return cls(r)

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        return cls(1, [[n]])

    @classmethod
    def zero(cls) -> "FgAbGroup":
        return cls(0)

    @classmethod
    def from_invariants(cls, free_rank: int, torsion: Sequence[int] = ()) -> "FgAbGroup":
        g = free_rank + len(torsion)
        rels = []
        for k, d in enumerate(torsion):
            row = [0] * g
            row[free_rank + k] = d
            rels.append(row)
        return cls(g, rels)

    # -- canonical form ------------------------------------------------------
    @property
    def canonical(self) -> Tuple[int, Tuple[int, ...]]:
        return self.free_rank, self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FgAbGroup({self.ngens}, {list(map(list, self.relations))})  # {self}"

    def isomorphic(self, other: "FgAbGroup") -> bool:
        return self.canonical == other.canonical

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    # -- presentation equality -------------------------------------------------
    def same_presentation(self, other: "FgAbGroup") -> bool:
        """Equal generator count and equal relation lattice."""
        return self.ngens == other.ngens and self._hnf == other._hnf

    def __eq__(self, other) -> bool:
        return isinstance(other, FgAbGroup) and self.same_presentation(other)

    def __hash__(self) -> int:
        return hash((self.ngens, self._hnf))

    # -- elements --------------------------------------------------------------
    def is_relation(self, x: Sequence[int]) -> bool:
        """Whether ``x`` lies in the relation subgroup (Hermite-form test)."""
        return im.hnf_member(self._hnf, x) is not None

    def is_zero(self, x: Sequence[int]) -> bool:
        return self.is_relation(x)

    def equal(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.is_relation([a - b for a, b in zip(x, y)])

    def coordinates(self, x: Sequence[int]) -> Elem:
        """Canonical coordinates of ``x``: free parts, then residues mod ``d_i``."""
        y = im.vecmat(x, self._V, self.ngens)
        return tuple(y[j] % d if d else y[j] for j, d in self._moduli)

    def from_coordinates(self, c: Sequence[int]) -> Elem:
        y = [0] * self.ngens
        for (j, _), v in zip(self._moduli, c):
            y[j] = v
        return tuple(im.vecmat(y, self._Vinv, self.ngens))

    def canonical_generators(self) -> List[Elem]:
        k = len(self._moduli)
        return [self.from_coordinates([1 if i == j else 0 for i in range(k)]) for j in range(k)]

    def gen(self, j: int) -> Elem:
        return tuple(1 if i == j else 0 for i in range(self.ngens))

    def elements(self) -> List[Elem]:
        """All elements of a finite group, as canonical representatives."""
        if self.free_rank:
            raise LatticeError("group is infinite")
        out = [()]
        for d in self.torsion:
            out = [c + (v,) for c in out for v in range(d)]
        return [self.from_coordinates(c) for c in out]

    def element_order(self, x: Sequence[int]) -> int:
        """Order of ``x`` (0 for infinite order)."""
        c = self.coordinates(x)
        if any(c[: self.free_rank]):
            return 0
        n = 1
        for v, d in zip(c[self.free_rank:], self.torsion):
            if v:
                n = _lcm(n, d // _gcd(v, d))
        return n


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _lcm(a: int, b: int) -> int:
    return a // _gcd(a, b) * b


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    g = sum(G.ngens for G in groups)
    rels = []
    off = 0
    for G in groups:
        for r in G.relations:
            row = [0] * g
            row[off:off + G.ngens] = r
            rels.append(row)
        off += G.ngens
    return FgAbGroup(g, rels)


class AbHom:
    """A homomorphism given on generators; ``matrix`` is ``target.ngens x source.ngens``."""

    __slots__ = ("source", "target", "matrix", "_solver")

    def __init__(self, source: FgAbGroup, target: FgAbGroup,
                 matrix: Sequence[Sequence[int]], check: bool = True):
        M = tuple(tuple(int(v) for v in row) for row in matrix)
        if target.ngens == 0:
            M = ()
        if len(M) != target.ngens or any(len(row) != source.ngens for row in M):
            raise LatticeError(
                f"matrix shape does not match {target.ngens}x{source.ngens}")
        self.source = source
        self.target = target
        self.matrix = M
        self._solver = None
        if check:
            for r in source._hnf:
                if not target.is_relation(self._apply(r)):
                    raise NotWellDefined(
                        f"not well-defined: relation {r} maps outside the relations of the target")

    @classmethod
    def identity(cls, G: FgAbGroup) -> "AbHom":
        return cls(G, G, im.identity(G.ngens), check=False)

    @classmethod
    def zero(cls, A: FgAbGroup, B: FgAbGroup) -> "AbHom":
        return cls(A, B, im.zeros(B.ngens, A.ngens), check=False)

    @classmethod
    def from_columns(cls, source: FgAbGroup, target: FgAbGroup,
                     cols: Sequence[Sequence[int]], check: bool = True) -> "AbHom":
        return cls(source, target, im.from_columns(cols, target.ngens), check)

    def _apply(self, x: Sequence[int]) -> List[int]:
        return im.matvec(self.matrix, x) if self.matrix else []

    def __call__(self, x: Sequence[int]) -> Elem:
        return tuple(self._apply(x))

    def column(self, j: int) -> Elem:
        return tuple(row[j] for row in self.matrix)

    def columns(self) -> List[Elem]:
        return [self.column(j) for j in range(self.source.ngens)]

    def __matmul__(self, other: "AbHom") -> "AbHom":
        """Composition ``self o other``."""
        if not other.target.same_presentation(self.source):
            raise NotComposable("target of the first map differs from the source of the second")
        cols = [self(other.column(j)) for j in range(other.source.ngens)]
        return AbHom.from_columns(other.source, self.target, cols, check=False)

    def __add__(self, other: "AbHom") -> "AbHom":
        M = [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)]
        return AbHom(self.source, self.target, M, check=False)

    def __neg__(self) -> "AbHom":
        return AbHom(self.source, self.target, [[-a for a in r] for r in self.matrix], check=False)

    def __sub__(self, other: "AbHom") -> "AbHom":
        return self + (-other)

    def equals(self, other: "AbHom") -> bool:
        """Equality as maps (columns agree modulo the target relations)."""
        if not (self.source.same_presentation(other.source)
                and self.target.same_presentation(other.target)):
            return False
        return all(self.target.equal(self.column(j), other.column(j))
                   for j in range(self.source.ngens))

    def is_zero(self) -> bool:
        return all(self.target.is_zero(self.column(j)) for j in range(self.source.ngens))

    def kernel(self) -> Tuple[FgAbGroup, "AbHom"]:
        return kernel(self)

    def cokernel(self) -> Tuple[FgAbGroup, "AbHom"]:
        return cokernel(self)

    def is_injective(self) -> bool:
        return kernel(self)[0].is_trivial()

    def is_surjective(self) -> bool:
        return cokernel(self)[0].is_trivial()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "AbHom":
        if not self.is_isomorphism():
            raise LatticeError("map is not an isomorphism")
        cols = []
        for j in range(self.target.ngens):
            x = preimage(self, self.target.gen(j))
            cols.append(x)
        return AbHom.from_columns(self.target, self.source, cols)

    def __repr__(self) -> str:
        return f"AbHom({self.source} -> {self.target}, {[list(r) for r in self.matrix]})"


# ------------------------------------------------------------------------------
# kernels, cokernels, lifting
# ------------------------------------------------------------------------------

def preimage(f: AbHom, y: Sequence[int]) -> Optional[Elem]:
    """Some ``x`` with ``f(x) = y`` in the target, or ``None``."""
    B = f.target
    n_src = f.source.ngens
    if B.ngens == 0:
        return tuple([0] * n_src)
    if f._solver is None:
        rel_cols = [list(r) for r in B._hnf]
        A = [list(f.matrix[i]) + [-r[i] for r in rel_cols] for i in range(B.ngens)]
        f._solver = im.LinearSolver(A, n_src + len(rel_cols))
    sol = f._solver.solve(list(y))
    if sol is None:
        return None
    return tuple(sol[:n_src])


def factor_through(f: AbHom, g: AbHom) -> AbHom:
    """The map ``h`` with ``g o h = f``; requires ``image(f)`` inside ``image(g)``.

    ``h`` is unique when ``g`` is injective.
    """
    if not f.target.same_presentation(g.target):
        raise NotComposable("maps have different targets")
    cols = []
    for j in range(f.source.ngens):
        x = preimage(g, f.column(j))
        if x is None:
            raise LatticeError(f"generator {j} does not factor through the given map")
        cols.append(x)
    return AbHom.from_columns(f.source, g.source, cols)


def kernel(f: AbHom) -> Tuple[FgAbGroup, AbHom]:
    """Kernel of ``f`` with its inclusion into ``f.source``."""
    G, H = f.source, f.target
    g = G.ngens
    if H.ngens == 0:
        K = G
        return K, AbHom.identity(G)
    rel_cols = [list(r) for r in H._hnf]
    A = [list(f.matrix[i]) + [-r[i] for r in rel_cols] for i in range(H.ngens)]
    sols = im.kernel_basis(A, g + len(rel_cols))
    gens = im.hermite_normal_form([s[:g] for s in sols], g)
    # rows of gens form a basis of the kernel lattice, which contains rel(G)
    Kmat = im.from_columns(gens, g)
    rels = []
    solver = im.LinearSolver(Kmat, len(gens)) if gens else None
    for r in G._hnf:
        c = solver.solve(list(r)) if gens else []
        if c is None:
            raise NotWellDefined("not well-defined: source relation escapes the kernel")
        rels.append(c)
    K = FgAbGroup(len(gens), rels)
    return K, AbHom.from_columns(K, G, gens, check=False)


def cokernel(f: AbHom) -> Tuple[FgAbGroup, AbHom]:
    """Cokernel of ``f`` with the projection from ``f.target``."""
    H = f.target
    rels = [list(r) for r in H._hnf] + [list(c) for c in f.columns()]
    Q = FgAbGroup(H.ngens, rels)
    return Q, AbHom(H, Q, im.identity(H.ngens), check=False)


def image(f: AbHom) -> Tuple[FgAbGroup, AbHom]:
    """Image of ``f`` as a subgroup of the target, with its inclusion."""
    K, inc = cokernel(f)
    return kernel(inc)


def induced_on_cokernels(h: AbHom, Q1: FgAbGroup, Q2: FgAbGroup) -> AbHom:
    """Map between cokernels induced by ``h`` on the ambient targets."""
    return AbHom(Q1, Q2, h.matrix)


# ------------------------------------------------------------------------------
# exactness
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactnessCertificate:
    exact: bool
    node: Optional[int] = None
    reason: str = ""
    witness: Optional[Elem] = None

    def __bool__(self) -> bool:
        return self.exact


def is_exact(seq: Sequence[AbHom]) -> ExactnessCertificate:
    """Check ``image = kernel`` at every interior node of a chain of maps.

    Nodes are numbered ``0 .. len(seq)``, node ``k`` being the source of
    ``seq[k]``; the interior nodes are ``1 .. len(seq) - 1``.  On failure the
    certificate carries the node and a witness element living there.
    """
    for k in range(len(seq) - 1):
        if not seq[k].target.same_presentation(seq[k + 1].source):
            raise NotComposable(f"maps {k} and {k + 1} are not composable")
    for k in range(len(seq) - 1):
        f, g = seq[k], seq[k + 1]
        node = k + 1
        gf = g @ f
        for j in range(f.source.ngens):
            if not gf.target.is_zero(gf.column(j)):
                return ExactnessCertificate(False, node, "composite is nonzero", f.column(j))
        K, inc = kernel(g)
        for j in range(K.ngens):
            x = inc.column(j)
            if preimage(f, x) is None:
                reason = "not surjective" if g.target.ngens == 0 or _is_zero_group(g.target) \
                    else "kernel not contained in image"
                return ExactnessCertificate(False, node, reason, x)
    return ExactnessCertificate(True)


def _is_zero_group(G: FgAbGroup) -> bool:
    return G.is_trivial()


def zero_into(G: FgAbGroup) -> AbHom:
    return AbHom.zero(FgAbGroup.zero(), G)


def zero_out_of(G: FgAbGroup) -> AbHom:
    return AbHom.zero(G, FgAbGroup.zero())


def short_exact(f: AbHom, g: AbHom) -> ExactnessCertificate:
    """Exactness of ``0 -> A -f-> B -g-> C -> 0``."""
    return is_exact([zero_into(f.source), f, g, zero_out_of(g.target)])


def render_sequence(seq: Sequence[AbHom]) -> str:
    objs = [seq[0].source] + [f.target for f in seq]
    return " -> ".join(str(G) for G in objs)


# ------------------------------------------------------------------------------
# snake lemma
# ------------------------------------------------------------------------------

def snake_sequence(i: AbHom, p: AbHom, i2: AbHom, p2: AbHom,
                   a: AbHom, b: AbHom, c: AbHom) -> List[AbHom]:
    """Six-term sequence of a map of short exact sequences.

    Rows ``0 -> A -i-> B -p-> C -> 0`` and ``0 -> A' -i2-> B' -p2-> C' -> 0``,
    verticals ``a, b, c``.  Returns the eight maps of
    ``0 -> ker a -> ker b -> ker c -> cok a -> cok b -> cok c -> 0``.
    """
    for name, row in (("top", (i, p)), ("bottom", (i2, p2))):
        cert = short_exact(*row)
        if not cert:
            raise NotExact(f"{name} row is not short exact at node {cert.node}: {cert.reason}")
    if not (b @ i).equals(i2 @ a):
        raise LatticeError("left square does not commute")
    if not (c @ p).equals(p2 @ b):
        raise LatticeError("right square does not commute")

    Ka, ka = kernel(a)
    Kb, kb = kernel(b)
    Kc, kc = kernel(c)
    Ca, _ = cokernel(a)
    Cb, _ = cokernel(b)
    Cc, _ = cokernel(c)

    ker_ab = factor_through(i @ ka, kb)
    ker_bc = factor_through(p @ kb, kc)
    cols = []
    for j in range(Kc.ngens):
        y = preimage(p, kc.column(j))
        w = b(y)
        v = preimage(i2, w)
        if v is None:
            raise LatticeError("connecting map: lift does not land in the image of A'")
        cols.append(v)
    delta = AbHom.from_columns(Kc, Ca, cols)
    cok_ab = AbHom(Ca, Cb, i2.matrix)
    cok_bc = AbHom(Cb, Cc, p2.matrix)
    return [zero_into(Ka), ker_ab, ker_bc, delta, cok_ab, cok_bc, zero_out_of(Cc)]


# ------------------------------------------------------------------------------
# derived functors against Z
# ------------------------------------------------------------------------------

def _free_resolution(M: FgAbGroup) -> List[List[int]]:
    """Basis rows of the relation lattice, so ``0 -> Z^s -> Z^g -> M -> 0``."""
    return [list(r) for r in M._hnf]


def derived_dual(M: FgAbGroup) -> Tuple[FgAbGroup, FgAbGroup]:
    """``(Hom(M, Z), Ext^1(M, Z))`` in canonical form.

    Uses the two-term free resolution of ``M``: dualising ``Z^s -> Z^g``
    gives ``Z^g -> Z^s`` whose kernel and cokernel are the two parts.
    """
    B = _free_resolution(M)
    s, g = len(B), M.ngens
    dual = AbHom(FgAbGroup.free(g), FgAbGroup.free(s), B if s else [], check=False)
    hom_part, _ = kernel(dual)
    ext_part, _ = cokernel(dual)
    return _canonical_copy(hom_part), _canonical_copy(ext_part)


def derived_tensor(M: FgAbGroup, N: FgAbGroup) -> Tuple[FgAbGroup, FgAbGroup]:
    """``(M (x) N, Tor_1(M, N))`` in canonical form."""
    B = _free_resolution(M)
    s, g = len(B), M.ngens
    n = N.ngens
    Ns = direct_sum(*([N] * s)) if s else FgAbGroup.zero()
    Ng = direct_sum(*([N] * g)) if g else FgAbGroup.zero()
    # relation map Z^s -> Z^g has matrix B^T; tensor with N is B^T (x) I_n
    Bt = im.transpose(B, g) if s else [[] for _ in range(g)]
    M_t = im.kron(Bt, im.identity(n), (g, s), (n, n)) if g and s and n else \
        im.zeros(g * n, s * n)
    f = AbHom(Ns, Ng, M_t)
    tor, _ = kernel(f)
    ten, _ = cokernel(f)
    return _canonical_copy(ten), _canonical_copy(tor)


def _canonical_copy(G: FgAbGroup) -> FgAbGroup:
    return FgAbGroup.from_invariants(G.free_rank, G.torsion)
