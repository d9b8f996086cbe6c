from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from pi1red import intmat as im
from pi1red import oracles


def small_matrices(max_dim=5, bound=10):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.tuples(
                st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                         min_size=m, max_size=m),
                st.just(n))))


def test_diag_2_3():
    A = [[2, 0], [0, 3]]
    U, D, V = im.smith_normal_form(A)
    assert D == [[1, 0], [0, 6]]
    assert im.matmul(im.matmul(U, A, 2), V, 2) == D
    assert abs(im.det(U)) == 1 and abs(im.det(V)) == 1


def test_zero_and_identity():
    assert im.smith_normal_form([[0, 0], [0, 0]]) == (im.identity(2), [[0, 0], [0, 0]], im.identity(2))
    assert im.smith_normal_form(im.identity(3))[1] == im.identity(3)


@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_snf_certificate(data):
    A, n = data
    m = len(A)
    U, D, V, Vinv = im.snf_full(A, n)
    assert im.matmul(im.matmul(U, A, n), V, n) == D
    assert im.matmul(V, Vinv, n) == im.identity(n)
    assert abs(im.det(U)) == 1
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(nz[k + 1] % nz[k] == 0 for k in range(len(nz) - 1))
    assert diag[len(nz):] == [0] * (len(diag) - len(nz))


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_dim=4, bound=6))
def test_invariant_factors_match_determinantal_divisors(data):
    A, n = data
    fast = [x for x in im.invariant_factors(A, n) if x]
    assert fast == oracles.factors_from_divisors(oracles.determinantal_divisors(A, n))
    assert fast == oracles.naive_invariant_factors(A, n)


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_dim=4, bound=6))
def test_kernel_basis_is_saturated_kernel(data):
    A, n = data
    K = im.kernel_basis(A, n)
    for v in K:
        assert im.matvec(A, v) == [0] * len(A)
    assert len(K) == n - im.rank(A, n)
    # saturated: the kernel basis spans a direct summand
    if K:
        assert [x for x in im.invariant_factors(K, n) if x] == [1] * len(K)


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_dim=4, bound=6), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve_finds_preimages(data, coeffs):
    A, n = data
    x = coeffs[:n] + [0] * (n - len(coeffs[:n]))
    b = im.matvec(A, x)
    y = im.solve(A, b, n)
    assert y is not None and im.matvec(A, y) == b


def test_solve_reports_non_membership():
    assert im.solve([[2]], [1], 1) is None
    solver = im.LinearSolver([[2, 0], [0, 3]], 2)
    assert solver.solve([4, 9]) == [2, 3]
    assert solver.solve([1, 0]) is None


def test_hnf_membership():
    H = im.hermite_normal_form([[2, 0], [0, 3], [2, 3]], 2)
    assert im.hnf_member(H, [4, 6]) is not None
    assert im.hnf_member(H, [1, 0]) is None
    assert im.in_row_lattice([[1, 1], [1, -1]], [2, 0], 2)
    assert not im.in_row_lattice([[1, 1], [1, -1]], [1, 0], 2)


def test_rational_inverse_and_saturation():
    inv = im.rational_inverse([[2, 1], [1, 1]])
    assert inv == [[1, -1], [-1, 2]]
    inv = im.rational_inverse([[2]])
    assert inv == [[Fraction(1, 2)]]
    assert im.saturation([[2, 2]], 2) == [[1, 1]]
    assert im.saturation([], 3) == []


def test_inverse_unimodular():
    U = [[2, 1], [1, 1]]
    assert im.matmul(U, im.inverse_unimodular(U), 2) == im.identity(2)
