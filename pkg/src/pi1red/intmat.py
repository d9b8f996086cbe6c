"""Dense integer matrices as lists of rows, with exact normal forms.

Everything here works on plain Python ints, so entries never overflow.
Matrices are lists (or tuples) of equal-length rows; vectors are flat
sequences.  A matrix with zero rows still needs to know its column count,
so the few functions where that matters take it explicitly.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]
Vector = List[int]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def copy(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in A]


def transpose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
           ncols: Optional[int] = None) -> Matrix:
    """Product ``A @ B``; ``ncols`` is only consulted when ``B`` has no rows."""
    if not A:
        return []
    if not B:
        n = ncols if ncols is not None else 0
        return [[0] * n for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> Vector:
    return [sum(a * b for a, b in zip(row, x) if a) for row in A]


def vecmat(x: Sequence[int], A: Sequence[Sequence[int]], ncols: int) -> Vector:
    out = [0] * ncols
    for xi, row in zip(x, A):
        if xi:
            for j, a in enumerate(row):
                if a:
                    out[j] += xi * a
    return out


def columns(A: Sequence[Sequence[int]], ncols: int) -> List[Vector]:
    return [[row[j] for row in A] for j in range(ncols)]


def from_columns(cols: Sequence[Sequence[int]], nrows: int) -> Matrix:
    if not cols:
        return [[] for _ in range(nrows)]
    return [list(r) for r in zip(*cols)]


def hstack(*blocks: Sequence[Sequence[int]]) -> Matrix:
    rows = len(blocks[0])
    return [sum((list(b[i]) for b in blocks), []) for i in range(rows)]


def block_diag(blocks: Sequence[Tuple[Sequence[Sequence[int]], int, int]]) -> Matrix:
    """Block-diagonal matrix from ``(matrix, rows, cols)`` triples."""
    total_c = sum(c for _, _, c in blocks)
    out: Matrix = []
    offset = 0
    for M, r, c in blocks:
        for i in range(r):
            row = [0] * total_c
            row[offset:offset + c] = list(M[i])
            out.append(row)
        offset += c
    return out


def kron(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
         a_shape: Tuple[int, int], b_shape: Tuple[int, int]) -> Matrix:
    (ar, ac), (br, bc) = a_shape, b_shape
    out = zeros(ar * br, ac * bc)
    for i in range(ar):
        for j in range(ac):
            a = A[i][j]
            if not a:
                continue
            for k in range(br):
                for l in range(bc):
                    out[i * br + k][j * bc + l] = a * B[k][l]
    return out


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = copy(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


# --------------------------------------------------------------------------
# Smith normal form
# --------------------------------------------------------------------------

def _find_pivot(D: Matrix, t: int, m: int, n: int) -> Optional[Tuple[int, int]]:
    # smallest |entry|; ties broken by leftmost column, then topmost row
    best = None
    best_abs = 0
    for j in range(t, n):
        for i in range(t, m):
            v = D[i][j]
            if v and (best is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
                if best_abs == 1:
                    return best
    return best


def snf_full(A: Sequence[Sequence[int]], ncols: Optional[int] = None
             ) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """Smith normal form with both right transforms.

    Returns ``(U, D, V, Vinv)`` with ``U @ A @ V == D`` and ``V @ Vinv == I``.
    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative
    entries ``d_1 | d_2 | ...`` and the zero entries last.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = copy(A)
    U = identity(m)
    V = identity(n)
    Vi = identity(n)

    for t in range(min(m, n)):
        while True:
            piv = _find_pivot(D, t, m, n)
            if piv is None:
                return U, D, V, Vi
            i, j = piv
            if i != t:
                D[t], D[i] = D[i], D[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                for row in D:
                    row[t], row[j] = row[j], row[t]
                for row in V:
                    row[t], row[j] = row[j], row[t]
                Vi[t], Vi[j] = Vi[j], Vi[t]
            p = D[t][t]
            dirty = False
            Dt = D[t]
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // p
                    D[i] = [a - q * b for a, b in zip(D[i], Dt)]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // p
                    for i in range(t, m):
                        row = D[i]
                        if row[t]:
                            row[j] -= q * row[t]
                    for row in V:
                        if row[t]:
                            row[j] -= q * row[t]
                    Vi[t] = [a + q * b for a, b in zip(Vi[t], Vi[j])]
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            if abs(p) == 1:
                break
            bad = None
            for i in range(t + 1, m):
                row = D[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            D[t] = [a + b for a, b in zip(D[t], D[bad])]
            U[t] = [a + b for a, b in zip(U[t], U[bad])]
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
    return U, D, V, Vi


def smith_normal_form(A: Sequence[Sequence[int]], ncols: Optional[int] = None
                      ) -> Tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` in Smith normal form."""
    U, D, V, _ = snf_full(A, ncols)
    return U, D, V


def invariant_factors(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[int]:
    """Nonzero diagonal entries of the Smith form, in order."""
    _, D, _, _ = snf_full(A, ncols)
    out = []
    for i in range(min(len(D), len(D[0]) if D else 0)):
        if D[i][i]:
            out.append(D[i][i])
    return out


def rank(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    return len(invariant_factors(A, ncols))


# --------------------------------------------------------------------------
# Hermite normal form (row style) and lattice membership
# --------------------------------------------------------------------------

def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    The result is a list of independent rows in echelon form with positive
    pivots and entries above each pivot reduced into ``[0, pivot)``.  It is a
    canonical basis of the row lattice.
    """
    A = [list(r) for r in rows if any(r)]
    r = 0
    pivots = []
    for col in range(ncols):
        nz = [i for i in range(r, len(A)) if A[i][col]]
        if not nz:
            continue
        if nz[0] != r:
            A[r], A[nz[0]] = A[nz[0]], A[r]
        for i in range(r + 1, len(A)):
            b = A[i][col]
            if not b:
                continue
            a = A[r][col]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            Ar, Ai = A[r], A[i]
            A[r] = [x * u + y * v for u, v in zip(Ar, Ai)]
            A[i] = [bg * u - ag * v for u, v in zip(Ar, Ai)]
        if A[r][col] < 0:
            A[r] = [-v for v in A[r]]
        p = A[r][col]
        for k in range(r):
            q = A[k][col] // p
            if q:
                A[k] = [u - q * v for u, v in zip(A[k], A[r])]
        pivots.append(col)
        r += 1
        if r == len(A):
            break
    A = A[:r]
    return A


def hnf_member(hnf: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[Vector]:
    """Coefficients expressing ``v`` in the HNF rows, or ``None`` if not a member."""
    w = list(v)
    coeffs = []
    for row in hnf:
        c = next(j for j, x in enumerate(row) if x)
        p = row[c]
        if w[c] % p:
            return None
        q = w[c] // p
        coeffs.append(q)
        if q:
            w = [a - q * b for a, b in zip(w, row)]
    if any(w):
        return None
    return coeffs


def in_row_lattice(rows: Sequence[Sequence[int]], v: Sequence[int], ncols: int) -> bool:
    return hnf_member(hermite_normal_form(rows, ncols), v) is not None


# --------------------------------------------------------------------------
# Linear systems over Z
# --------------------------------------------------------------------------

class LinearSolver:
    """Solves ``A x = b`` for many right-hand sides with one Smith form."""

    def __init__(self, A: Sequence[Sequence[int]], ncols: Optional[int] = None):
        self.m = len(A)
        self.n = len(A[0]) if self.m else (ncols or 0)
        if self.m:
            self.U, D, self.V, _ = snf_full(A, self.n)
            self.diag = [D[i][i] if i < self.n else 0 for i in range(self.m)]

    def solve(self, b: Sequence[int]) -> Optional[Vector]:
        if self.m == 0:
            return [0] * self.n
        c = matvec(self.U, b)
        y = [0] * self.n
        for i in range(self.m):
            d = self.diag[i]
            if d:
                if c[i] % d:
                    return None
                y[i] = c[i] // d
            elif c[i]:
                return None
        return matvec(self.V, y)


def solve(A: Sequence[Sequence[int]], b: Sequence[int], ncols: Optional[int] = None
          ) -> Optional[Vector]:
    """An integer solution of ``A x = b``, or ``None`` if there is none."""
    return LinearSolver(A, ncols).solve(b)


def kernel_basis(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[Vector]:
    """A Z-basis of ``{x : A x = 0}`` as a list of vectors."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    _, D, V, _ = snf_full(A, n)
    r = sum(1 for i in range(min(m, n)) if D[i][i])
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def inverse_unimodular(A: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a square matrix with determinant +-1."""
    n = len(A)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = solve(A, e, n)
        if x is None:
            raise ValueError("matrix is not unimodular")
        cols.append(x)
    return from_columns(cols, n)


# --------------------------------------------------------------------------
# Rational helpers (exact, via fractions)
# --------------------------------------------------------------------------

def rational_inverse(A: Sequence[Sequence]) -> List[List[Fraction]]:
    """Inverse of a square matrix over Q; raises ``ValueError`` if singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [row[n:] for row in M]


def lattice_basis(vectors: Sequence[Sequence], n: int) -> List[List[Fraction]]:
    """Basis of the lattice spanned by rational vectors (rows of an HNF)."""
    den = 1
    for v in vectors:
        for x in v:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * den) for x in v] for v in vectors]
    return [[Fraction(x, den) for x in row] for row in hermite_normal_form(scaled, n)]


def saturation(vectors: Sequence[Sequence[int]], n: int) -> List[Vector]:
    """Basis of ``(Q span of vectors) cap Z^n``."""
    ann = kernel_basis([list(v) for v in vectors], n) if vectors else \
        [[int(i == j) for i in range(n)] for j in range(n)]
    return kernel_basis(ann, n) if ann else [[int(i == j) for i in range(n)] for j in range(n)]
