import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pi1red import oracles
from pi1red.gammamod import (FiniteGroup, GammaMap, GammaModule, GroupError, NotEquivariant,
                             cohomology_long_sequence, equivariant_hom, gamma_direct_sum,
                             group_cohomology, invariants, permutation_module, simplify_module,
                             symmetric_permutations)
from pi1red.lattice import AbHom, FgAbGroup, is_exact, render_sequence

Z = FgAbGroup.free(1)
C2 = FiniteGroup.cyclic(2)
C3 = FiniteGroup.cyclic(3)
S3 = FiniteGroup.symmetric(3)


def rank_one(G, signs):
    return GammaModule(G, Z, [[[s]] for s in signs])


def swap():
    return permutation_module(C2, [(0, 1), (1, 0)])


def test_group_axioms_checked():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [0, 1]])
    assert S3.order == 6
    assert sorted(S3.inv(g) for g in range(6)) == list(range(6))


def test_avatars():
    assert group_cohomology(rank_one(C2, [1, 1]), 1).is_trivial()
    assert str(group_cohomology(rank_one(C2, [1, -1]), 1)) == "Z/2"
    assert str(group_cohomology(rank_one(C2, [1, 1]), 2)) == "Z/2"
    assert str(group_cohomology(rank_one(C3, [1, 1, 1]), 2)) == "Z/3"


@pytest.mark.parametrize("n,sign", [(2, 1), (2, -1), (3, 1), (4, -1), (4, 1)])
@pytest.mark.parametrize("i", [0, 1, 2])
def test_cyclic_cohomology_against_periodic_formula(n, sign, i):
    M = rank_one(FiniteGroup.cyclic(n), [sign ** k for k in range(n)])
    got = group_cohomology(M, i)
    assert (got.free_rank, got.torsion) == oracles.cyclic_cohomology_rank_one(n, sign, i)


def test_regular_module_is_acyclic():
    for G, perms in ((C2, [(0, 1), (1, 0)]), (C3, [tuple((j + g) % 3 for j in range(3)) for g in range(3)])):
        P = permutation_module(G, perms)
        assert str(invariants(P)) == "Z"
        assert group_cohomology(P, 1).is_trivial()
        assert group_cohomology(P, 2).is_trivial()


def test_non_equivariant_map_rejected():
    with pytest.raises(NotEquivariant):
        equivariant_hom(rank_one(C2, [1, -1]), rank_one(C2, [1, 1]), AbHom(Z, Z, [[1]]))


def test_sum_map_kernel_is_sign():
    triv = GammaModule.trivial(C2, Z)
    f = equivariant_hom(swap(), triv, AbHom(FgAbGroup.free(2), Z, [[1, 1]]))
    K, _ = f.kernel()
    assert str(K.carrier) == "Z"
    assert str(group_cohomology(K, 1)) == "Z/2"      # the sign module


def test_identity_is_equivariant():
    M = swap()
    assert equivariant_hom(M, M, AbHom.identity(M.carrier))


def test_nine_term_sequence_for_sign_into_swap():
    sign = rank_one(C2, [1, -1])
    i = GammaMap(sign, swap(), AbHom(Z, FgAbGroup.free(2), [[1], [-1]]))
    p = GammaMap(swap(), GammaModule.trivial(C2, Z), AbHom(FgAbGroup.free(2), Z, [[1, 1]]))
    seq = cohomology_long_sequence(i, p)
    assert render_sequence(seq) == "0 -> 0 -> Z -> Z -> Z/2 -> 0 -> 0 -> 0 -> 0 -> Z/2"
    assert is_exact(seq)


def test_permutation_sequences_exact():
    for G, perms in ((C3, [tuple((j + g) % 3 for j in range(3)) for g in range(3)]),
                     (S3, symmetric_permutations(3))):
        P = permutation_module(G, perms)
        triv = GammaModule.trivial(G, Z)
        aug = GammaMap(P, triv, AbHom(P.carrier, Z, [[1, 1, 1]]))
        K, inc = aug.kernel()
        assert is_exact(cohomology_long_sequence(inc, aug))
        norm = GammaMap(triv, P, AbHom(Z, P.carrier, [[1], [1], [1]]))
        Q, q = norm.cokernel()
        assert is_exact(cohomology_long_sequence(norm, q))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 6))
def test_multiplication_sequence(n):
    triv = GammaModule.trivial(C2, Z)
    m = GammaMap(triv, triv, AbHom(Z, Z, [[n]]))
    Q, q = m.cokernel()
    assert is_exact(cohomology_long_sequence(m, q))


def test_simplify_preserves_cohomology():
    M = gamma_direct_sum(swap(), rank_one(C2, [1, -1]))
    S, to, back = simplify_module(M)
    assert (back @ to).equals(AbHom.identity(M.carrier))
    for i in (0, 1, 2):
        assert group_cohomology(M, i).canonical == group_cohomology(S, i).canonical


def test_module_json_roundtrip():
    M = swap()
    N = GammaModule.from_json(M.to_json())
    assert N.to_json() == M.to_json()
