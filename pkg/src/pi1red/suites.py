"""The eight property suites behind ``verify-suite`` and the acceptance tests.

Each ``suite_*`` function returns a ``SuiteResult``; none of them raises on a
mathematical failure, so a driver can always report every suite.
"""
from __future__ import annotations

import random
import time
import traceback
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import intmat as im
from . import oracles
from .abcoh import ab_cohomology_profile, ab_long_sequence, profiles_agree
from .complexes import (ComplexMorphism, TwoTermComplex, cone_shift_identity, dual_morphism,
                        is_quasi_isomorphism)
from .gammamod import (FiniteGroup, GammaMap, GammaModule, cohomology_long_sequence,
                       group_cohomology, permutation_module, symmetric_permutations)
from .lattice import AbHom, FgAbGroup, LatticeError, is_exact, kernel, cokernel
from .resolutions import (GroupHomData, SESData, TResolution, canonical_iso, check_pi1_exact,
                          fiber_product_resolution, fundamental_sequence, normal_subgroup_ses,
                          pi1_functor, pi1_of_resolution, pi1_via_m_resolution, qiso_certificate,
                          redundant_embedding, snake_route, t_resolution_from_torus,
                          t_resolution_generic)
from .rootdata import (RootDatum, central_quotient, fundamental_invariants, irreducible_components,
                       pi1_group, product, simply_connected, standard_group)

TIME_LIMITS = {1: 5.0, 2: 60.0, 4: 30.0}


@dataclass
class SuiteResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    @property
    def limit(self) -> Optional[float]:
        return TIME_LIMITS.get(self.number)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" (limit {self.limit:g} s)" if self.limit else ""
        return f"[{status}] {self.number}. {self.title}: {self.detail} [{self.seconds:.2f} s{budget}]"


def _run(number: int, title: str, body: Callable[[], str]) -> SuiteResult:
    t0 = time.perf_counter()
    try:
        detail = body()
        ok = True
    except Exception as exc:  # a suite reports, it does not crash the driver
        detail = f"{type(exc).__name__}: {exc}"
        tb = traceback.extract_tb(exc.__traceback__)
        if tb:
            detail += f" (at {tb[-1].name}:{tb[-1].lineno})"
        ok = False
    elapsed = time.perf_counter() - t0
    limit = TIME_LIMITS.get(number)
    if ok and limit is not None and elapsed >= limit:
        ok = False
        detail += f"; exceeded {limit:g} s"
    return SuiteResult(number, title, ok, detail, elapsed)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise AssertionError(message)


def _signature(G: FgAbGroup) -> Tuple[int, Tuple[int, ...]]:
    return G.free_rank, tuple(G.torsion)


# ------------------------------------------------------------------------------
# the catalog with its expected fundamental groups
# ------------------------------------------------------------------------------

def catalog_expectations() -> List[Tuple[Tuple, str]]:
    """``(catalog spec, expected canonical form of pi_1)``."""
    out: List[Tuple[Tuple, str]] = []
    for n in range(2, 10):
        out.append((("SL", n), "0"))
        out.append((("PGL", n), f"Z/{n}"))
    for n in range(1, 5):
        out.append((("GL", n), "Z"))
        out.append((("Sp", 2 * n), "0"))
        out.append((("SO", 2 * n + 1), "Z/2"))
    for n in range(2, 5):
        out.append((("SO", 2 * n), "Z/2"))
    for m in range(3, 10):
        out.append((("Spin", m), "0"))
    for kind, l in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        out.append((("SC", kind, l), "0"))
    for r in range(0, 5):
        out.append((("Torus", r), "0" if r == 0 else ("Z" if r == 1 else f"Z^{r}")))
    return out


def catalog_groups() -> List[RootDatum]:
    return [standard_group(*spec) for spec, _ in catalog_expectations()]


def suite_catalog() -> SuiteResult:
    def body():
        count = 0
        for spec, expected in catalog_expectations():
            d = standard_group(*spec)
            got = pi1_group(d)
            _check(str(got) == expected, f"{spec}: pi_1 = {got}, expected {expected}")
            oracle = oracles.quotient_signature(d.rank, [list(c) for c in d.coroots])
            _check(_signature(got) == oracle, f"{spec}: coroot-inclusion SNF oracle gives {oracle}")
            count += 1
        return f"{count} catalog groups match expected values and the SNF oracle"
    return _run(1, "catalog pi_1 values", body)


# ------------------------------------------------------------------------------
# short exact sequences
# ------------------------------------------------------------------------------

SC_FACTORS = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2))


def _coweights(kind: str, l: int) -> List[List[Fraction]]:
    """Fundamental coweights in simple-coroot coordinates: ``(A^T)^{-1}`` columns."""
    from .rootdata import cartan_matrix
    A = cartan_matrix(kind, l)
    inv = im.rational_inverse(im.transpose(A, l))
    return [[inv[i][k] for i in range(l)] for k in range(l)]


def random_central_quotient(rng: random.Random, max_factors: int = 4) -> RootDatum:
    """A product of simply connected factors modulo a random subgroup of ``P^vee / Q^vee``."""
    k = rng.randint(1, max_factors)
    factors = [rng.choice(SC_FACTORS) for _ in range(k)]
    d = product(*[simply_connected(kind, l) for kind, l in factors])
    weights: List[List[Fraction]] = []
    offset = 0
    for kind, l in factors:
        for w in _coweights(kind, l):
            weights.append([Fraction(0)] * offset + w + [Fraction(0)] * (d.rank - offset - l))
        offset += l
    gens = []
    for _ in range(rng.randint(0, 2)):
        coeffs = [rng.randint(0, 2) for _ in weights]
        gens.append([sum((c * w[i] for c, w in zip(coeffs, weights)), Fraction(0))
                     for i in range(d.rank)])
    name = "x".join(f"SC({kind},{l})" for kind, l in factors)
    return central_quotient(d, gens, name=f"{name}/K") if gens else d


def standard_ses() -> List[SESData]:
    out = []
    for n in range(1, 5):
        G = standard_group("GL", n)
        out.append(normal_subgroup_ses(G, range(len(G.roots))))              # SL_n -> GL_n -> G_m
    for n in range(2, 5):
        G = standard_group("GL", n)
        out.append(normal_subgroup_ses(G, [], central=[[1] * n]))           # G_m -> GL_n -> PGL_n
    T = standard_group("Torus", 3)
    out.append(normal_subgroup_ses(T, [], central=[[1, 0, 0]]))
    out.append(normal_subgroup_ses(T, [], central=[[1, 1, 0], [0, 1, 1]]))
    for pair in (("SL", 2, "PGL", 3), ("SO", 5, "GL", 2), ("Sp", 4, "SO", 4)):
        G = product(standard_group(pair[0], pair[1]), standard_group(pair[2], pair[3]))
        comps = irreducible_components(G)
        out.append(normal_subgroup_ses(G, comps[0]))
    return out


def random_ses(rng: random.Random, count: int) -> List[SESData]:
    out = []
    while len(out) < count:
        G = random_central_quotient(rng)
        comps = irreducible_components(G)
        chosen = [c for c in comps if rng.random() < 0.5]
        sub = sorted(j for c in chosen for j in c)
        out.append(normal_subgroup_ses(G, sub))
    return out


def ses_instances(seed: int = 0, random_count: int = 22) -> List[SESData]:
    return standard_ses() + random_ses(random.Random(seed), random_count)


def suite_exactness(seed: int = 0) -> SuiteResult:
    def body():
        cases = ses_instances(seed)
        for k, s in enumerate(cases):
            seq = check_pi1_exact(s)
            snake = snake_route(s)
            for mine, other in ((seq[1], snake[4]), (seq[2], snake[5])):
                _check(mine.matrix == other.matrix and mine.source.same_presentation(other.source),
                       f"case {k}: snake and functorial routes differ")
        return f"{len(cases)} sequences exact via functor and snake routes"
    return _run(2, "pi_1 exactness", body)


# ------------------------------------------------------------------------------
# resolution independence
# ------------------------------------------------------------------------------

def resolutions_of(d: RootDatum) -> List[TResolution]:
    return [t_resolution_from_torus(d), t_resolution_generic(d),
            t_resolution_generic(d, redundant_embedding(d))]


def suite_independence() -> SuiteResult:
    def body():
        triangles = 0
        groups = catalog_groups()
        for d in groups:
            rs = resolutions_of(d)
            ref = pi1_group(d)
            values = [pi1_of_resolution(r) for r in rs] + [pi1_via_m_resolution(d)]
            for v in values:
                _check(v.canonical == ref.canonical, f"{d.name}: {v} differs from {ref}")
            a, b, c = rs
            psi_ab, psi_bc, psi_ac = canonical_iso(a, b), canonical_iso(b, c), canonical_iso(a, c)
            _check((psi_bc @ psi_ab).equals(psi_ac), f"{d.name}: triangle fails")
            _check(canonical_iso(a, a).equals(AbHom.identity(pi1_of_resolution(a))),
                   f"{d.name}: self iso is not the identity")
            triangles += 1
        return f"{len(groups)} groups, 5 routes each, {triangles} triangles commute"
    return _run(3, "resolution independence", body)


# ------------------------------------------------------------------------------
# duality of quasi-isomorphisms
# ------------------------------------------------------------------------------

MAX_RANK = 6


def _random_unimodular(rng: random.Random, n: int) -> List[List[int]]:
    U = im.identity(n)
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            U = [[-x for x in row] for row in U] if rng.random() < 0.5 else U
            continue
        c = rng.choice((-2, -1, 1, 2))
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    return U


def _free(n: int) -> FgAbGroup:
    return FgAbGroup.free(n)


def _complex(deg: int, a: int, b: int, D) -> TwoTermComplex:
    return TwoTermComplex(deg, _free(a), _free(b), AbHom(_free(a), _free(b), D if b else []))


def _stabilized(D, a: int, b: int) -> List[List[int]]:
    return [list(row) + [0] for row in D] + [[0] * a + [1]]


def _embed(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n + 1)]


def _project(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n + 1)] for i in range(n)]


def random_quasi_isomorphism(rng: random.Random) -> ComplexMorphism:
    """A random composite of basis changes and (de)stabilizations."""
    a, b = rng.randint(0, 4), rng.randint(0, 4)
    deg = rng.randint(-2, 2)
    D = [[rng.randint(-3, 3) for _ in range(a)] for _ in range(b)]
    if rng.random() < 0.4 and a < MAX_RANK and b < MAX_RANK:
        # start stabilized so that a projection is available
        D = _stabilized(D, a, b)
        a, b = a + 1, b + 1
    src = _complex(deg, a, b, D)
    f = ComplexMorphism.identity(src)
    cur, ca, cb = src, a, b
    for _ in range(rng.randint(1, 3)):
        move = rng.choice(("basis", "include", "project"))
        if move == "include" and ca < MAX_RANK and cb < MAX_RANK:
            ND = _stabilized(cur.differential.matrix if cb else [], ca, cb)
            tgt = _complex(deg, ca + 1, cb + 1, ND)
            g = ComplexMorphism(cur, tgt, AbHom(_free(ca), _free(ca + 1), _embed(ca)),
                                AbHom(_free(cb), _free(cb + 1), _embed(cb)))
            ca, cb = ca + 1, cb + 1
        elif move == "project" and ca and cb and _is_stabilized(cur, ca, cb):
            ND = [row[:ca - 1] for row in cur.differential.matrix[:cb - 1]]
            tgt = _complex(deg, ca - 1, cb - 1, ND)
            g = ComplexMorphism(cur, tgt, AbHom(_free(ca), _free(ca - 1), _project(ca - 1) if ca > 1 else []),
                                AbHom(_free(cb), _free(cb - 1), _project(cb - 1) if cb > 1 else []))
            ca, cb = ca - 1, cb - 1
        else:
            V = _random_unimodular(rng, ca) if ca else []
            U = _random_unimodular(rng, cb) if cb else []
            Dm = cur.differential.matrix if cb else []
            ND = im.matmul(im.matmul(U, Dm, ca), im.inverse_unimodular(V), ca) if ca and cb else \
                (im.zeros(cb, ca) if cb else [])
            tgt = _complex(deg, ca, cb, ND)
            g = ComplexMorphism(cur, tgt, AbHom(_free(ca), _free(ca), V), AbHom(_free(cb), _free(cb), U))
        f = g @ f
        cur = tgt
    return f


def _is_stabilized(C: TwoTermComplex, a: int, b: int) -> bool:
    D = C.differential.matrix
    return D[b - 1][a - 1] == 1 and all(D[b - 1][j] == 0 for j in range(a - 1)) and \
        all(D[i][a - 1] == 0 for i in range(b - 1))


def suite_duality(seed: int = 0, count: int = 200) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        for k in range(count):
            f = random_quasi_isomorphism(rng)
            _check(is_quasi_isomorphism(f), f"case {k}: generated map is not a quasi-isomorphism")
            _check(is_quasi_isomorphism(dual_morphism(f)), f"case {k}: dual is not a quasi-isomorphism")
            _check(cone_shift_identity(f), f"case {k}: cone-shift identity fails")
        return f"{count}/{count} duals are quasi-isomorphisms; cone-shift identity holds"
    return _run(4, "duality of quasi-isomorphisms", body)


# ------------------------------------------------------------------------------
# fundamental diagram
# ------------------------------------------------------------------------------

def suite_fundamental(seed: int = 0) -> SuiteResult:
    def body():
        pool: List[TResolution] = []
        for d in catalog_groups():
            rs = resolutions_of(d)
            pool += rs
            pool.append(fiber_product_resolution(rs[0], rs[1])[0])
        seen = set()
        for s in ses_instances(seed):
            for G in (s.G1, s.G2, s.G3):
                if G not in seen:
                    seen.add(G)
                    pool.append(t_resolution_from_torus(G))
        for r in pool:
            fundamental_sequence(r)
            qiso_certificate(r)
        groups = 0
        for d in catalog_groups():
            inv = fundamental_invariants(d)
            _check(bool(is_exact(inv.mu_sequence)), f"{d.name}: mu sequence not exact")
            tors = FgAbGroup.from_invariants(0, inv.pi1.torsion)
            _check(tors.isomorphic(inv.mu_minus_one), f"{d.name}: torsion of pi_1 is not mu(-1)")
            _check(inv.pi1.free_rank == inv.cochar_torus_quotient.free_rank and
                   inv.cochar_torus_quotient.is_free(),
                   f"{d.name}: free quotient of pi_1 is not (G^tor)_*")
            groups += 1
        return f"{len(pool)} resolutions certified; mu sequence exact for {groups} groups"
    return _run(5, "fundamental diagram", body)


# ------------------------------------------------------------------------------
# Gamma-cohomology
# ------------------------------------------------------------------------------

def _rank_one(group: FiniteGroup, signs: Sequence[int]) -> GammaModule:
    return GammaModule(group, _free(1), [[[s]] for s in signs])


def _cyclic_signs(n: int, sign: int) -> List[int]:
    return [sign ** k for k in range(n)]


def _module_ses(group: FiniteGroup, A: GammaModule, B: GammaModule, iota) -> Tuple[GammaMap, GammaMap]:
    i = GammaMap(A, B, AbHom(A.carrier, B.carrier, iota))
    C, p = i.cokernel()
    return i, p


def module_sequences() -> List[Tuple[str, GammaMap, GammaMap]]:
    out = []
    C2, C3 = FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)
    S3 = FiniteGroup.symmetric(3)
    for name, G, perms in (("Z/2", C2, [(0, 1), (1, 0)]),
                           ("Z/3", C3, [tuple((j + g) % 3 for j in range(3)) for g in range(3)]),
                           ("S3", S3, symmetric_permutations(3))):
        P = permutation_module(G, perms)
        n = P.carrier.ngens
        triv = GammaModule.trivial(G, _free(1))
        i, p = _module_ses(G, triv, P, [[1] for _ in range(n)])
        out.append((f"{name}: Z -> Z[perm] (norm)", i, p))
        aug = GammaMap(P, triv, AbHom(P.carrier, triv.carrier, [[1] * n]))
        K, inc = aug.kernel()
        out.append((f"{name}: augmentation ideal", inc, aug))
        two = GammaMap(triv, triv, AbHom(triv.carrier, triv.carrier, [[n]]))
        Q, q = two.cokernel()
        out.append((f"{name}: Z -x{n}-> Z", two, q))
    sign = _rank_one(C2, [1, -1])
    P = permutation_module(C2, [(0, 1), (1, 0)])
    i, p = _module_ses(C2, sign, P, [[1], [-1]])
    out.append(("Z/2: Z_sign -> Z[Z/2]", i, p))
    return out


def gamma_ses() -> List[Tuple[str, SESData]]:
    C2, C3 = FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)
    S3 = FiniteGroup.symmetric(3)
    out = []
    gl2 = standard_group("GL", 2).with_gamma(C2, [[[1, 0], [0, 1]], [[0, -1], [-1, 0]]])
    out.append(("Z/2 outer GL2: G_m -> GL2 -> PGL2", normal_subgroup_ses(gl2, [], central=[[1, 1]])))
    out.append(("Z/2 outer GL2: SL2 -> GL2 -> G_m", normal_subgroup_ses(gl2, [0, 1])))
    rot = [[[int(i == (j + g) % 3) for j in range(3)] for i in range(3)] for g in range(3)]
    t3 = standard_group("Torus", 3).with_gamma(C3, rot)
    out.append(("Z/3 on T3: diagonal G_m", normal_subgroup_ses(t3, [], central=[[1, 1, 1]])))
    gl3 = standard_group("GL", 3).with_gamma(C3, rot)
    out.append(("Z/3 on GL3: SL3 -> GL3", normal_subgroup_ses(gl3, range(6))))
    perms = [[[int(p[j] == i) for j in range(3)] for i in range(3)] for p in symmetric_permutations(3)]
    big = [[[B[i][j] if i < 3 and j < 3 else (B[i - 3][j - 3] if i >= 3 and j >= 3 else 0)
             for j in range(6)] for i in range(6)] for B in perms]
    sl2t = product(*[standard_group("SL", 2)] * 3, standard_group("Torus", 3)).with_gamma(S3, big)
    out.append(("S3 on SL2^3 x T3: semisimple part", normal_subgroup_ses(sl2t, range(6))))
    t3s = standard_group("Torus", 3).with_gamma(S3, perms)
    out.append(("S3 on T3: diagonal G_m", normal_subgroup_ses(t3s, [], central=[[1, 1, 1]])))
    return out


def gamma_profile_groups() -> List[RootDatum]:
    C2 = FiniteGroup.cyclic(2)
    C3 = FiniteGroup.cyclic(3)
    rot = [[[int(i == (j + g) % 3) for j in range(3)] for i in range(3)] for g in range(3)]
    return [standard_group("GL", 2).with_gamma(C2, [[[1, 0], [0, 1]], [[0, -1], [-1, 0]]]),
            standard_group("Torus", 1).with_gamma(C2, [[[1]], [[-1]]]),
            standard_group("GL", 3).with_gamma(C3, rot),
            standard_group("PGL", 2).with_gamma(C2, [[[1]], [[1]]])]


def suite_gamma() -> SuiteResult:
    def body():
        checked = 0
        for n in (2, 3):
            G = FiniteGroup.cyclic(n)
            for sign in ((1, -1) if n == 2 else (1,)):
                M = _rank_one(G, _cyclic_signs(n, sign))
                for i in range(0, 3):
                    got = group_cohomology(M, i)
                    want = oracles.cyclic_cohomology_rank_one(n, sign, i)
                    _check(_signature(got) == want, f"H^{i}(Z/{n}, sign {sign}) = {got}, oracle {want}")
                    checked += 1
        C2 = FiniteGroup.cyclic(2)
        _check(str(group_cohomology(_rank_one(C2, [1, -1]), 1)) == "Z/2", "H^1(Z/2, Z_sign) != Z/2")
        _check(str(group_cohomology(_rank_one(C2, [1, 1]), 2)) == "Z/2", "H^2(Z/2, Z) != Z/2")
        _check(group_cohomology(_rank_one(C2, [1, 1]), 1).is_trivial(), "H^1(Z/2, Z) != 0")
        sequences = 0
        for name, i, p in module_sequences():
            seq = cohomology_long_sequence(i, p)
            _check(bool(is_exact(seq)), f"{name}: long sequence not exact")
            sequences += 1
        for name, s in gamma_ses():
            seq = ab_long_sequence(s)
            _check(bool(is_exact(seq)), f"{name}: long sequence not exact")
            sequences += 1
        pairs = 0
        for d in gamma_profile_groups():
            r = t_resolution_from_torus(d)
            rp = fiber_product_resolution(r, r)[0]
            _check(profiles_agree(ab_cohomology_profile(d, r), ab_cohomology_profile(d, rp)),
                   f"{d.name}: profile depends on the resolution")
            pairs += 1
        return (f"{checked} oracle values, {sequences} exact long sequences, "
                f"{pairs} resolution pairs agree")
    return _run(6, "Gamma-cohomology avatars", body)


# ------------------------------------------------------------------------------
# integer algebra oracles
# ------------------------------------------------------------------------------

def _random_hom(rng: random.Random, src: Sequence[int], tgt: Sequence[int]) -> List[List[int]]:
    """A well-defined map ``(+) Z/src_j -> (+) Z/tgt_i``."""
    from math import gcd
    return [[rng.randrange(gcd(d, e)) * (e // gcd(d, e)) for d in src] for e in tgt]


def suite_integer(seed: int = 0, count: int = 500) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        for k in range(count):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            A = [[rng.randint(-10, 10) for _ in range(n)] for _ in range(m)]
            fast = [x for x in im.invariant_factors(A, n) if x]
            _check(fast == oracles.naive_invariant_factors(A, n), f"matrix {k}: {A} elimination oracle")
            _check(fast == oracles.factors_from_divisors(oracles.determinantal_divisors(A, n)),
                   f"matrix {k}: {A} determinantal oracle")
        groups = oracles.abelian_groups_up_to(64)
        for src in groups:
            tgt = rng.choice(groups)
            for target in (src, tgt):
                M = _random_hom(rng, src, target)
                S = FgAbGroup.from_invariants(0, src)
                T = FgAbGroup.from_invariants(0, target)
                f = AbHom(S, T, M if target else [])
                K, _ = kernel(f)
                Q, _ = cokernel(f)
                up = max([1, *src, *target])
                _check(oracles.profile_of_invariants(K.torsion, up) ==
                       oracles.brute_kernel_profile(M, src, target, up), f"kernel of {M} on {src}->{target}")
                _check(oracles.profile_of_invariants(Q.torsion, up) ==
                       oracles.brute_cokernel_profile(M, src, target, up), f"cokernel of {M} on {src}->{target}")
        return f"{count} matrices agree with both oracles; {len(groups)} groups, kernels and cokernels brute-forced"
    return _run(7, "integer algebra oracles", body)


# ------------------------------------------------------------------------------
# functoriality
# ------------------------------------------------------------------------------

def _hom_pool(rng: random.Random) -> List[GroupHomData]:
    """Torus-compatible homomorphisms among small catalog groups."""
    pool = []
    for n in (2, 3, 4):
        GL, SL, PGL = (standard_group(x, n) for x in ("GL", "SL", "PGL"))
        T1, Tn = standard_group("Torus", 1), standard_group("Torus", n)
        ident = im.identity(n)
        sl_in_gl = [[int(i == j) - int(i == j + 1) for j in range(n - 1)] for i in range(n)]
        to_pgl = _pgl_coords(n)
        k = rng.randint(-2, 2)
        pool += [
            GroupHomData(SL, GL, sl_in_gl, normal=True),
            GroupHomData(GL, PGL, to_pgl),
            GroupHomData(SL, PGL, im.matmul(to_pgl, sl_in_gl, n - 1)),
            GroupHomData(GL, T1, [[1] * n]),                                    # determinant
            GroupHomData(Tn, GL, ident),                                        # diagonal torus
            GroupHomData(T1, GL, [[rng.randint(-2, 2)] for _ in range(n)]),
            GroupHomData(GL, GL, [[int(i == j) + k for j in range(n)] for i in range(n)]),
        ]
    for r in (1, 2, 3):
        for s in (1, 2, 3):
            pool.append(GroupHomData(standard_group("Torus", r), standard_group("Torus", s),
                                     [[rng.randint(-3, 3) for _ in range(r)] for _ in range(s)]))
    return pool


def _pgl_coords(n: int) -> List[List[int]]:
    """``X^vee(GL_n) -> X^vee(PGL_n)``.

    ``X(PGL_n)`` has the simple roots as basis, so a cocharacter of ``PGL_n``
    is recorded by its pairings with them.
    """
    return [list(a) for a in standard_group("GL", n).simple_roots()]


def suite_functoriality(seed: int = 0, count: int = 50) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        pool = _hom_pool(rng)
        pairs = [(k, l) for k in pool for l in pool if k.target == l.source]
        _check(len(pairs) >= count, f"only {len(pairs)} composable pairs available")
        chosen = rng.sample(pairs, count)
        for kappa, lam in chosen:
            lhs = pi1_functor(lam @ kappa)
            rhs = pi1_functor(lam) @ pi1_functor(kappa)
            _check(lhs.equals(rhs), f"pi_1 not multiplicative on {kappa.source.name} -> "
                                    f"{kappa.target.name} -> {lam.target.name}")
        idents = 0
        for d in catalog_groups():
            if d.rank > 6:
                continue
            _check(pi1_functor(GroupHomData.identity(d)).equals(AbHom.identity(pi1_group(d))),
                   f"pi_1(id) is not the identity for {d.name}")
            idents += 1
        return f"{count} composable pairs; pi_1(id) = id on {idents} groups"
    return _run(8, "functoriality", body)


SUITES: Dict[int, Callable[..., SuiteResult]] = {
    1: lambda seed=0: suite_catalog(),
    2: suite_exactness,
    3: lambda seed=0: suite_independence(),
    4: suite_duality,
    5: suite_fundamental,
    6: lambda seed=0: suite_gamma(),
    7: suite_integer,
    8: suite_functoriality,
}


def run_suites(numbers: Optional[Sequence[int]] = None, seed: int = 0) -> List[SuiteResult]:
    return [SUITES[k](seed=seed) for k in (numbers or sorted(SUITES))]
