from fractions import Fraction

from pi1red.abcoh import (ab_cohomology_profile, ab_long_sequence, dual_profile, profiles_agree,
                          render_long_sequence)
from pi1red.gammamod import FiniteGroup, symmetric_permutations
from pi1red.lattice import is_exact
from pi1red.resolutions import (fiber_product_resolution, normal_subgroup_ses,
                                t_resolution_from_torus, t_resolution_generic)
from pi1red.rootdata import central_quotient, product, standard_group

C2 = FiniteGroup.cyclic(2)
OUTER = [[[1, 0], [0, 1]], [[0, -1], [-1, 0]]]


def twisted_gl2():
    return standard_group("GL", 2).with_gamma(C2, OUTER)


def test_pgl2_profile_trivial_gamma():
    p = ab_cohomology_profile(standard_group("PGL", 2))
    assert p.to_json()["H"] == {"-1": "0", "0": "Z/2", "1": "0", "2": "0"}
    assert p.to_json()["H_dual"] == {"0": "0", "1": "Z/2", "2": "0"}
    assert "H^0 = Z/2" in p.render()


def test_profiles_independent_of_resolution():
    d = standard_group("SO", 5)
    a = ab_cohomology_profile(d, t_resolution_from_torus(d))
    b = ab_cohomology_profile(d, t_resolution_generic(d))
    assert profiles_agree(a, b)


def test_twisted_gl2_profile():
    d = twisted_gl2()
    r = t_resolution_from_torus(d)
    p = ab_cohomology_profile(d, r)
    assert [str(p.values[i]) for i in (-1, 0, 1, 2)] == ["0", "0", "Z/2", "0"]
    rp = fiber_product_resolution(r, r)[0]
    assert profiles_agree(p, ab_cohomology_profile(d, rp))
    for seq in p.sequences.values():
        assert is_exact(seq)


def test_dual_profile():
    assert [str(x) for x in dual_profile(standard_group("PGL", 2))] == ["0", "Z/2"]
    assert [str(x) for x in dual_profile(standard_group("GL", 2))] == ["Z", "0"]
    assert [str(x) for x in dual_profile(standard_group("Torus", 3))] == ["Z^3", "0"]


def test_trivial_gamma_long_sequence_is_pi1_sequence():
    s = normal_subgroup_ses(standard_group("GL", 2), [], central=[[1, 1]])
    seq = ab_long_sequence(s)
    assert render_long_sequence(seq).startswith("0 -> Z -> Z -> Z/2 -> 0")
    assert is_exact(seq)


def test_sign_twisted_kernel_sequence():
    s = normal_subgroup_ses(twisted_gl2(), [], central=[[1, 1]])
    seq = ab_long_sequence(s)
    assert len(seq) == 9
    assert is_exact(seq)


def test_s3_permuting_three_sl2():
    S3 = FiniteGroup.symmetric(3)
    mats = [[[int(p[j] == i) for j in range(3)] for i in range(3)] for p in symmetric_permutations(3)]
    sl2 = standard_group("SL", 2)
    d = product(sl2, sl2, sl2).with_gamma(S3, mats)
    half = Fraction(1, 2)
    q = central_quotient(d, [[half, half, 0], [0, half, half]])
    s = normal_subgroup_ses(q, list(range(6)))
    assert is_exact(ab_long_sequence(s))
