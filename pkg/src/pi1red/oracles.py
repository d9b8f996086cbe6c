"""Slow, independent reference computations used by the verification suites.

Nothing here shares code with ``intmat`` or ``lattice``: the routines are
deliberately naive so that agreement with the fast paths means something.
"""
from __future__ import annotations

from itertools import combinations, product
from math import gcd
from typing import Dict, List, Sequence, Tuple


def naive_invariant_factors(A: Sequence[Sequence[int]], ncols: int) -> List[int]:
    """Nonzero invariant factors by plain gcd elimination (no transforms kept)."""
    M = [list(r) for r in A]
    m, n = len(M), ncols
    out = []
    t = 0
    while t < min(m, n):
        nz = [(i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nz:
            break
        i, j = nz[0]
        M[t], M[i] = M[i], M[t]
        for r in M:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            # clear column t below the pivot by Euclid on row pairs
            for i in range(t + 1, m):
                while M[i][t]:
                    if M[i][t] % M[t][t] == 0:
                        q = M[i][t] // M[t][t]
                        M[i] = [b - q * a for a, b in zip(M[t], M[i])]
                        break
                    q = M[t][t] // M[i][t]
                    M[t] = [a - q * b for a, b in zip(M[t], M[i])]
                    M[t], M[i] = M[i], M[t]
            for j in range(t + 1, n):
                while M[t][j]:
                    if M[t][j] % M[t][t] == 0:
                        q = M[t][j] // M[t][t]
                        for r in M:
                            r[j] -= q * r[t]
                        break
                    q = M[t][t] // M[t][j]
                    for r in M:
                        r[t] -= q * r[j]
                    for r in M:
                        r[t], r[j] = r[j], r[t]
                    done = False
            if any(M[i][t] for i in range(t + 1, m)):
                continue
            if not done:
                continue
            p = M[t][t]
            bad = [i for i in range(t + 1, m) if any(M[i][j] % p for j in range(t + 1, n))]
            if bad:
                M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
                continue
            break
        out.append(abs(M[t][t]))
        t += 1
    return out


def _det(M: List[List[int]]) -> int:
    """Laplace expansion; only ever called on tiny minors."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            sub = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * _det(sub)
    return total


def determinantal_divisors(A: Sequence[Sequence[int]], ncols: int) -> List[int]:
    """``d_k`` = gcd of all ``k x k`` minors, for ``k = 1 ..`` while nonzero."""
    m, n = len(A), ncols
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, _det([[A[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        out.append(g)
    return out


def factors_from_divisors(d: List[int]) -> List[int]:
    prev, out = 1, []
    for x in d:
        out.append(x // prev)
        prev = x
    return out


def quotient_signature(ngens: int, columns: Sequence[Sequence[int]]) -> Tuple[int, Tuple[int, ...]]:
    """``(free rank, nontrivial invariant factors)`` of ``Z^ngens / span(columns)``."""
    A = [[c[i] for c in columns] for i in range(ngens)]
    f = naive_invariant_factors(A, len(columns)) if columns else []
    return ngens - len(f), tuple(x for x in f if x != 1)


# -- finite abelian groups by enumeration ------------------------------------

def abelian_groups_up_to(bound: int) -> List[Tuple[int, ...]]:
    """All invariant-factor tuples ``(d_1 | d_2 | ...)`` with product ``<= bound``."""
    found = [()]

    def extend(prefix, prod):
        last = prefix[-1] if prefix else None
        start = 2
        for d in range(start, bound // prod + 1):
            if last is not None and d % last:
                continue
            t = prefix + (d,)
            found.append(t)
            extend(t, prod * d)

    extend((), 1)
    return found


def elements(moduli: Sequence[int]) -> List[Tuple[int, ...]]:
    return list(product(*[range(d) for d in moduli]))


def torsion_profile(elems: Sequence[Tuple[int, ...]], moduli: Sequence[int], up_to: int) -> Dict[int, int]:
    """``k -> #{x : kx = 0}``; determines a finite abelian group up to isomorphism."""
    return {k: sum(all((k * x) % d == 0 for x, d in zip(e, moduli)) for e in elems)
            for k in range(1, up_to + 1)}


def profile_of_invariants(torsion: Sequence[int], up_to: int) -> Dict[int, int]:
    out = {}
    for k in range(1, up_to + 1):
        c = 1
        for d in torsion:
            c *= gcd(k, d)
        out[k] = c
    return out


def apply_hom(M: Sequence[Sequence[int]], x: Sequence[int], moduli: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(M[i][j] * x[j] for j in range(len(x))) % moduli[i] for i in range(len(moduli)))


def brute_kernel_profile(M, src: Sequence[int], tgt: Sequence[int], up_to: int) -> Dict[int, int]:
    zero = tuple(0 for _ in tgt)
    ker = [e for e in elements(src) if apply_hom(M, e, tgt) == zero]
    return torsion_profile(ker, src, up_to)


def brute_cokernel_profile(M, src: Sequence[int], tgt: Sequence[int], up_to: int) -> Dict[int, int]:
    img = {apply_hom(M, e, tgt) for e in elements(src)}
    out = {}
    for k in range(1, up_to + 1):
        hits = sum(tuple((k * x) % d for x, d in zip(h, tgt)) in img for h in elements(tgt))
        out[k] = hits // len(img)
    return out


# -- cyclic group cohomology with coefficients in Z ---------------------------

def cyclic_cohomology_rank_one(n: int, sign: int, i: int) -> Tuple[int, Tuple[int, ...]]:
    """``H^i(Z/n, Z)`` where the generator acts by ``sign``; returns a signature.

    Uses the periodic resolution: ``H^0 = ker(s-1)``, odd degrees
    ``ker(N)/im(s-1)``, even positive degrees ``ker(s-1)/im(N)``.
    """
    s = sign
    norm = sum(s ** k for k in range(n))
    diff = s - 1

    def quot(a, b):
        if a != 0:
            return 0, ()
        if b == 0:
            return 1, ()
        return 0, (abs(b),) if abs(b) > 1 else ()

    if i == 0:
        return (1, ()) if diff == 0 else (0, ())
    if i % 2:
        return quot(norm, diff)
    return quot(diff, norm)
