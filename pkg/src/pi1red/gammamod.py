"""Finite groups acting on finitely generated abelian groups.

A twisted constant group scheme split by a finite Galois-type cover with
group ``Gamma`` is modelled by its group of sections over the cover, a
``Gamma``-module.  This is a modelling assumption of the package, not
something the algebra below can check.

Group cohomology uses normalized inhomogeneous bar cochains: a ``k``-cochain
is a tuple of carrier elements indexed by ``k``-tuples of non-identity group
elements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import intmat as im
from .cochains import Cohomology, connecting_map
from .lattice import (AbHom, FgAbGroup, LatticeError, NotExact, cokernel, direct_sum,
                      factor_through, is_exact, kernel, short_exact, zero_into)

MAX_ORDER = 48


class GroupError(LatticeError):
    pass


class NotEquivariant(LatticeError):
    pass


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, table: Sequence[Sequence[int]], identity: int = 0, name: str = ""):
        n = len(table)
        if n == 0 or n > MAX_ORDER:
            raise GroupError(f"group order {n} outside 1..{MAX_ORDER}")
        T = tuple(tuple(int(v) for v in row) for row in table)
        if any(len(r) != n for r in T) or any(not 0 <= v < n for r in T for v in r):
            raise GroupError("multiplication table is not n x n with entries in range")
        if any(T[identity][a] != a or T[a][identity] != a for a in range(n)):
            raise GroupError("identity element is not neutral")
        inv = []
        for a in range(n):
            b = [b for b in range(n) if T[a][b] == identity]
            if len(b) != 1 or T[b[0]][a] != identity:
                raise GroupError(f"element {a} has no two-sided inverse")
            inv.append(b[0])
        for a in range(n):
            for b in range(n):
                ab = T[a][b]
                for c in range(n):
                    if T[ab][c] != T[a][T[b][c]]:
                        raise GroupError(f"associativity fails at ({a}, {b}, {c})")
        self.table = T
        self.identity = identity
        self.inverses = tuple(inv)
        self.name = name or f"group of order {n}"

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def non_identity(self) -> List[int]:
        return [g for g in range(self.order) if g != self.identity]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table \
            and self.identity == other.identity

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name})"

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], 0, f"Z/{n}")

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls([[0]], 0, "1")

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        perms = sorted(itertools.permutations(range(n)))
        index = {p: k for k, p in enumerate(perms)}
        # (p q)(x) = p(q(x))
        table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
        return cls(table, index[tuple(range(n))], f"S{n}")

    def to_json(self) -> dict:
        return {"table": [list(r) for r in self.table], "identity": self.identity}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteGroup":
        return cls(data["table"], data.get("identity", 0), data.get("name", ""))


def symmetric_permutations(n: int) -> List[Tuple[int, ...]]:
    """Permutations in the element order used by :meth:`FiniteGroup.symmetric`."""
    return sorted(itertools.permutations(range(n)))


class GammaModule:
    """An ``FgAbGroup`` with one automorphism per element of a finite group."""

    def __init__(self, group: FiniteGroup, carrier: FgAbGroup, action: Sequence):
        if len(action) != group.order:
            raise GroupError("need exactly one action map per group element")
        maps = []
        for a in action:
            if isinstance(a, AbHom):
                maps.append(a)
            else:
                maps.append(AbHom(carrier, carrier, a))
        if not maps[group.identity].equals(AbHom.identity(carrier)):
            raise GroupError("identity element does not act trivially")
        for g in range(group.order):
            for h in range(group.order):
                if not maps[group.mul(g, h)].equals(maps[g] @ maps[h]):
                    raise GroupError(f"action is not multiplicative at ({g}, {h})")
        self.group = group
        self.carrier = carrier
        self.action = tuple(maps)

    @classmethod
    def trivial(cls, group: FiniteGroup, carrier: FgAbGroup) -> "GammaModule":
        return cls(group, carrier, [AbHom.identity(carrier)] * group.order)

    def act(self, g: int, x):
        return self.action[g](x)

    def __repr__(self) -> str:
        return f"GammaModule({self.group.name}, {self.carrier})"

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "carrier": {"ngens": self.carrier.ngens,
                        "relations": [list(r) for r in self.carrier.relations]},
            "action": [[list(r) for r in a.matrix] for a in self.action],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GammaModule":
        G = FiniteGroup.from_json(data["group"])
        c = data["carrier"]
        carrier = FgAbGroup(c["ngens"], c.get("relations", []))
        return cls(G, carrier, data["action"])


def gamma_direct_sum(*mods: GammaModule) -> GammaModule:
    G = mods[0].group
    carrier = direct_sum(*(m.carrier for m in mods))
    action = []
    for g in range(G.order):
        blocks = [(m.action[g].matrix, m.carrier.ngens, m.carrier.ngens) for m in mods]
        action.append(AbHom(carrier, carrier, im.block_diag(blocks), check=False))
    return GammaModule(G, carrier, action)


@dataclass(frozen=True)
class GammaMap:
    """An equivariant homomorphism between ``Gamma``-modules."""
    source: GammaModule
    target: GammaModule
    hom: AbHom

    def kernel(self) -> Tuple[GammaModule, "GammaMap"]:
        K, inc = kernel(self.hom)
        acts = [factor_through(a @ inc, inc) for a in self.source.action]
        KM = GammaModule(self.source.group, K, acts)
        return KM, GammaMap(KM, self.source, inc)

    def cokernel(self) -> Tuple[GammaModule, "GammaMap"]:
        Q, proj = cokernel(self.hom)
        acts = [AbHom(Q, Q, a.matrix) for a in self.target.action]
        QM = GammaModule(self.target.group, Q, acts)
        return QM, GammaMap(self.target, QM, proj)

    def __matmul__(self, other: "GammaMap") -> "GammaMap":
        return GammaMap(other.source, self.target, self.hom @ other.hom)


def equivariant_hom(M: GammaModule, N: GammaModule, f: AbHom) -> GammaMap:
    """Validate that ``f`` commutes with the two actions."""
    if M.group != N.group:
        raise NotEquivariant("modules are over different groups")
    if not (f.source.same_presentation(M.carrier) and f.target.same_presentation(N.carrier)):
        raise NotEquivariant("map does not go between the module carriers")
    for g in range(M.group.order):
        if not (f @ M.action[g]).equals(N.action[g] @ f):
            raise NotEquivariant(f"map is not equivariant for group element {g}")
    return GammaMap(M, N, f)


# ------------------------------------------------------------------------------
# normalized bar cochains
# ------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _index(group: FiniteGroup, k: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(itertools.product(group.non_identity(), repeat=k))


def cochain_group(M: GammaModule, k: int) -> FgAbGroup:
    n = len(_index(M.group, k))
    return direct_sum(*([M.carrier] * n)) if n else FgAbGroup.zero()


def bar_differential(M: GammaModule, k: int) -> AbHom:
    """``d^k : C^k(Gamma, M) -> C^{k+1}(Gamma, M)``."""
    G = M.group
    src_idx = _index(G, k)
    tgt_idx = _index(G, k + 1)
    pos = {t: j for j, t in enumerate(src_idx)}
    r = M.carrier.ngens
    rows = im.zeros(len(tgt_idx) * r, len(src_idx) * r)
    e = G.identity

    def add_block(out_i, in_t, coeff, mat=None):
        j = pos[in_t]
        for a in range(r):
            row = rows[out_i * r + a]
            for b in range(r):
                v = mat[a][b] if mat is not None else (1 if a == b else 0)
                if v:
                    row[j * r + b] += coeff * v

    for oi, gs in enumerate(tgt_idx):
        add_block(oi, gs[1:], 1, M.action[gs[0]].matrix)
        for i in range(1, k + 1):
            prod = G.mul(gs[i - 1], gs[i])
            if prod == e:
                continue
            add_block(oi, gs[:i - 1] + (prod,) + gs[i + 1:], (-1) ** i)
        add_block(oi, gs[:k], (-1) ** (k + 1))
    return AbHom(cochain_group(M, k), cochain_group(M, k + 1), rows, check=False)


def cochain_map(f: GammaMap, k: int) -> AbHom:
    """The map ``C^k(Gamma, A) -> C^k(Gamma, B)`` induced by ``f``."""
    n = len(_index(f.source.group, k))
    A, B = f.source.carrier, f.target.carrier
    mat = im.block_diag([(f.hom.matrix, B.ngens, A.ngens)] * n) if n else []
    return AbHom(cochain_group(f.source, k), cochain_group(f.target, k), mat, check=False)


def simplify_module(M: GammaModule) -> Tuple[GammaModule, AbHom, AbHom]:
    """Isomorphic module on the canonical presentation ``Z^r x Z/d_1 x ...``.

    Returns ``(M', to, back)`` with ``to: M -> M'`` and ``back`` its inverse.
    Bar cochains of ``M'`` are much smaller when ``M`` carries many relations.
    """
    X = M.carrier
    C = FgAbGroup.from_invariants(X.free_rank, X.torsion)
    to = AbHom.from_columns(X, C, [X.coordinates(X.gen(j)) for j in range(X.ngens)])
    back = AbHom.from_columns(C, X, X.canonical_generators())
    acts = [to @ a @ back for a in M.action]
    return GammaModule(M.group, C, acts), to, back


def cohomology_data(M: GammaModule, i: int) -> Cohomology:
    if i < 0:
        raise GroupError("unsupported degree")
    d_in = bar_differential(M, i - 1) if i > 0 else None
    return Cohomology(d_in, bar_differential(M, i))


def group_cohomology(M: GammaModule, i: int) -> FgAbGroup:
    """``H^i(Gamma, M)`` for ``i`` in ``{0, 1, 2}``."""
    if i not in (0, 1, 2):
        raise GroupError("unsupported degree")
    return cohomology_data(simplify_module(M)[0], i).group


def invariants(M: GammaModule) -> FgAbGroup:
    return group_cohomology(M, 0)


def cohomology_long_sequence(i: GammaMap, p: GammaMap) -> List[AbHom]:
    """Long exact cohomology sequence of ``0 -> A -i-> B -p-> C -> 0`` up to ``H^2(C)``.

    Returns ``0 -> H0(A)`` followed by the eight maps
    ``H0A -> H0B -> H0C -> H1A -> H1B -> H1C -> H2A -> H2B -> H2C``.
    """
    cert = short_exact(i.hom, p.hom)
    if not cert:
        raise NotExact(f"input sequence is not short exact at node {cert.node}: {cert.reason}")
    equivariant_hom(i.source, i.target, i.hom)
    equivariant_hom(p.source, p.target, p.hom)
    (A, _, backA), (B, toB, backB), (C, toC, _) = (simplify_module(m) for m in
                                                    (i.source, i.target, p.target))
    i = GammaMap(A, B, toB @ i.hom @ backA)
    p = GammaMap(B, C, toC @ p.hom @ backB)
    H = {(name, k): cohomology_data(mod, k)
         for name, mod in (("A", A), ("B", B), ("C", C)) for k in range(3)}
    seq = [zero_into(H["A", 0].group)]
    for k in range(3):
        seq.append(H["A", k].induced(H["B", k], cochain_map(i, k)))
        seq.append(H["B", k].induced(H["C", k], cochain_map(p, k)))
        if k < 2:
            seq.append(connecting_map(H["C", k], H["A", k + 1], cochain_map(p, k),
                                      bar_differential(B, k), cochain_map(i, k + 1)))
    cert = is_exact(seq)
    if not cert:
        raise NotExact(f"cohomology sequence failed exactness at node {cert.node}")
    return seq


def permutation_module(group: FiniteGroup, perms: Sequence[Sequence[int]]) -> GammaModule:
    """``Z^n`` with ``g`` sending basis vector ``e_j`` to ``e_{perms[g][j]}``."""
    n = len(perms[0])
    carrier = FgAbGroup.free(n)
    action = []
    for p in perms:
        mat = im.zeros(n, n)
        for j in range(n):
            mat[p[j]][j] = 1
        action.append(mat)
    return GammaModule(group, carrier, action)
