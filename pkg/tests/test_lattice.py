import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pi1red import oracles
from pi1red.lattice import (AbHom, FgAbGroup, NotComposable, NotWellDefined, cokernel,
                            derived_dual, derived_tensor, direct_sum, image, is_exact, kernel,
                            preimage, render_sequence, short_exact, snake_sequence, zero_into,
                            zero_out_of)

Z = FgAbGroup.free(1)
Z2 = FgAbGroup.free(2)


def cyc(n):
    return FgAbGroup.cyclic(n)


# -- groups -----------------------------------------------------------------

def test_canonical_rendering():
    assert str(FgAbGroup.zero()) == "0"
    assert str(FgAbGroup.free(3)) == "Z^3"
    assert str(FgAbGroup(2, [[2, 0], [0, 3]])) == "Z/6"
    assert str(FgAbGroup(3, [[2, 0, 0], [0, 4, 0]])) == "Z x Z/2 x Z/4"


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), max_size=4))
def test_presentation_independence(rels):
    G = FgAbGroup(3, rels)
    # the same group after a unimodular change of generators
    U = [[1, 1, 0], [0, 1, 0], [0, 2, 1]]
    moved = [[sum(r[k] * U[k][j] for k in range(3)) for j in range(3)] for r in rels]
    assert G.canonical == FgAbGroup(3, moved).canonical
    assert G.canonical == oracles.quotient_signature(3, [list(r) for r in rels])


def test_orders_and_elements():
    G = FgAbGroup.from_invariants(0, [2, 4])
    assert G.order() == 8
    assert len(G.elements()) == 8
    assert sorted(G.element_order(x) for x in G.elements()).count(4) == 4
    assert Z.order() is None


# -- cokernels and kernels ----------------------------------------------------

def test_cokernel_of_multiplication():
    for n in (1, 2, 5):
        Q, _ = cokernel(AbHom(Z, Z, [[n]]))
        assert str(Q) == ("0" if n == 1 else f"Z/{n}")
    Q, _ = cokernel(AbHom(Z, Z2, [[1], [1]]))
    assert str(Q) == "Z"


def test_kernels():
    K, _ = kernel(AbHom(Z, Z, [[3]]))
    assert K.is_trivial()
    K, inc = kernel(AbHom(Z2, Z, [[1, 1]]))
    assert str(K) == "Z"
    v = inc.column(0)
    assert tuple(v) in ((1, -1), (-1, 1))
    K, _ = kernel(AbHom(cyc(4), cyc(4), [[2]]))
    assert str(K) == "Z/2"


def test_ill_defined_map_rejected():
    with pytest.raises(NotWellDefined):
        AbHom(cyc(2), Z, [[1]])
    with pytest.raises(NotWellDefined):
        AbHom(cyc(4), cyc(3), [[1]])


def test_preimage_and_image():
    f = AbHom(Z, Z, [[2]])
    assert tuple(preimage(f, [4])) == (2,)
    assert preimage(f, [3]) is None
    I, _ = image(AbHom(Z, cyc(6), [[2]]))
    assert str(I) == "Z/3"


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(oracles.abelian_groups_up_to(24)), st.sampled_from(oracles.abelian_groups_up_to(24)),
       st.randoms(use_true_random=False))
def test_kernel_cokernel_brute_force(src, tgt, rnd):
    from math import gcd
    M = [[rnd.randrange(gcd(d, e)) * (e // gcd(d, e)) for d in src] for e in tgt]
    f = AbHom(FgAbGroup.from_invariants(0, src), FgAbGroup.from_invariants(0, tgt), M if tgt else [])
    up = max([1, *src, *tgt])
    K, _ = kernel(f)
    Q, _ = cokernel(f)
    assert oracles.profile_of_invariants(K.torsion, up) == oracles.brute_kernel_profile(M, src, tgt, up)
    assert oracles.profile_of_invariants(Q.torsion, up) == oracles.brute_cokernel_profile(M, src, tgt, up)


# -- exactness ---------------------------------------------------------------

def test_exact_short_sequence():
    assert short_exact(AbHom(Z, Z, [[2]]), AbHom(Z, cyc(2), [[1]]))


def test_non_surjective_end_detected():
    cert = is_exact([zero_into(Z), AbHom(Z, Z, [[2]]), AbHom(Z, cyc(4), [[2]]), zero_out_of(cyc(4))])
    assert not cert
    assert cert.node == 3
    assert cert.reason == "not surjective"


def test_trivial_sequence_exact():
    O = FgAbGroup.zero()
    assert is_exact([AbHom.zero(O, O), AbHom.zero(O, O)])


def test_incomposable_rejected():
    with pytest.raises(NotComposable):
        is_exact([AbHom(Z, Z, [[1]]), AbHom(Z2, Z, [[1, 0]])])


# -- snake lemma --------------------------------------------------------------

def test_snake_doubling():
    i = AbHom(Z, Z2, [[1], [1]])
    p = AbHom(Z2, Z, [[1, -1]])
    two = AbHom(Z, Z, [[2]])
    seq = snake_sequence(i, p, i, p, two, AbHom(Z2, Z2, [[2, 0], [0, 2]]), two)
    assert render_sequence(seq) == "0 -> 0 -> 0 -> 0 -> Z/2 -> Z/2 x Z/2 -> Z/2 -> 0"
    assert is_exact(seq)


def test_snake_identity_verticals():
    i = AbHom(Z, Z2, [[1], [0]])
    p = AbHom(Z2, Z, [[0, 1]])
    seq = snake_sequence(i, p, i, p, AbHom.identity(Z), AbHom.identity(Z2), AbHom.identity(Z))
    assert all(f.target.is_trivial() for f in seq)


# -- derived functors ----------------------------------------------------------

def test_derived_dual():
    hom, ext = derived_dual(cyc(5))
    assert hom.is_trivial() and str(ext) == "Z/5"
    hom, ext = derived_dual(FgAbGroup.free(3))
    assert str(hom) == "Z^3" and ext.is_trivial()
    hom, ext = derived_dual(FgAbGroup.from_invariants(1, [2]))
    assert (str(hom), str(ext)) == ("Z", "Z/2")


def test_derived_dual_matches_long_sequence():
    # 0 -> Z -n-> Z -> Z/n -> 0 gives Ext(Z/n, Z) = cok(Hom(Z,Z) -n-> Hom(Z,Z))
    for n in (2, 3, 12):
        _, ext = derived_dual(cyc(n))
        assert ext.canonical == cokernel(AbHom(Z, Z, [[n]]))[0].canonical


def test_derived_tensor():
    t, tor = derived_tensor(cyc(4), cyc(6))
    assert (str(t), str(tor)) == ("Z/2", "Z/2")
    t, tor = derived_tensor(FgAbGroup.free(2), cyc(3))
    assert (str(t), str(tor)) == ("Z/3 x Z/3", "0")
    t, tor = derived_tensor(cyc(2), Z)
    assert (str(t), str(tor)) == ("Z/2", "0")


def test_direct_sum():
    assert str(direct_sum(cyc(2), cyc(3), Z)) == "Z x Z/6"
