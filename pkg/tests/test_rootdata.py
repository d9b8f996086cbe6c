from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pi1red import oracles
from pi1red.gammamod import FiniteGroup
from pi1red.lattice import direct_sum
from pi1red.rootdata import (CATALOG_NAMES, RootDatum, RootDatumError, central_quotient,
                             coroot_inclusion, fundamental_invariants, irreducible_components,
                             parse_group_spec, pi1_group, product, simply_connected,
                             simply_connected_cover, standard_group, validate)


def rows(m):
    return [list(r) for r in m]


def test_a1_simply_connected_datum():
    d = RootDatum(1, [(2,), (-2,)], [(1,), (-1,)])
    assert validate(d) is d


def test_pairing_four_rejected():
    with pytest.raises(RootDatumError) as info:
        RootDatum(1, [(2,), (-2,)], [(2,), (-2,)])
    assert info.value.axiom == "pairing"


def test_missing_reflection_closure_rejected():
    with pytest.raises(RootDatumError):
        RootDatum(2, [(1, -1)], [(1, -1)])


def test_gl2_datum_valid():
    d = RootDatum(2, [(1, -1), (-1, 1)], [(1, -1), (-1, 1)])
    assert d == standard_group("GL", 2)


def test_catalog_shapes():
    assert standard_group("Torus", 3).rank == 3 and not standard_group("Torus", 3).roots
    gl3 = standard_group("GL", 3)
    assert gl3.rank == 3 and len(gl3.roots) == 6
    sl2 = simply_connected("A", 1)
    assert sl2.rank == 1 and sorted(sl2.coroots) == [(-1,), (1,)]


@pytest.mark.parametrize("spec,count", [(("SC", "E", 6), 72), (("SC", "E", 7), 126), (("SC", "E", 8), 240),
                                        (("SC", "F", 4), 48), (("SC", "G", 2), 12), (("Sp", 6), 18),
                                        (("SO", 7), 18), (("SO", 8), 24)])
def test_root_counts(spec, count):
    assert len(standard_group(*spec).roots) == count


def test_simple_roots_cartan_matrix():
    d = simply_connected("B", 3)
    simple = d.simple_roots()
    cor = d.simple_coroots()
    from pi1red.rootdata import cartan_matrix, pair
    A = [[pair(simple[j], cor[i]) for j in range(3)] for i in range(3)]
    assert sorted(map(sorted, A)) == sorted(map(sorted, cartan_matrix("B", 3)))


def test_pgl2_invariants():
    inv = fundamental_invariants(standard_group("PGL", 2))
    assert str(inv.pi1) == "Z/2"
    assert str(inv.mu_star) == "Z/2"
    assert inv.center_chars.is_trivial()
    assert inv.cochar_torus_quotient.is_trivial()
    assert inv.is_adjoint and inv.is_semisimple and not inv.is_simply_connected


def test_gl2_invariants():
    inv = fundamental_invariants(standard_group("GL", 2))
    assert str(inv.pi1) == "Z"
    # the derived group SL_2 is simply connected; the Z/2 lives in mu_1
    assert inv.mu_star.is_trivial()
    assert str(inv.mu1_star) == "Z/2"
    assert str(inv.center_chars) == "Z"
    assert str(inv.cochar_torus_quotient) == "Z"


def test_sp4_simply_connected():
    inv = fundamental_invariants(simply_connected("C", 2))
    assert inv.pi1.is_trivial() and inv.is_simply_connected


def test_spin8_and_adjoint_d4():
    assert str(fundamental_invariants(standard_group("Spin", 8)).center_chars) == "Z/2 x Z/2"
    assert str(pi1_group(standard_group("ADJ", "D", 4))) == "Z/2 x Z/2"


def test_simply_connected_cover():
    _, d = simply_connected_cover(standard_group("PGL", 2))
    assert rows(d.matrix) == [[2]]
    _, d = simply_connected_cover(standard_group("SL", 2))
    assert rows(d.matrix) == [[1]]
    _, d = simply_connected_cover(standard_group("GL", 2))
    assert rows(d.matrix) in ([[1], [-1]], [[-1], [1]])


def test_central_quotients():
    q = central_quotient(standard_group("SL", 2), [[Fraction(1, 2)]])
    assert str(pi1_group(q)) == "Z/2"
    assert fundamental_invariants(q).is_adjoint
    d = standard_group("SO", 5)
    assert central_quotient(d, []) == d
    so4 = central_quotient(product(standard_group("SL", 2), standard_group("SL", 2)),
                           [[Fraction(1, 2), Fraction(1, 2)]])
    assert str(pi1_group(so4)) == "Z/2"


def test_quotient_must_be_central():
    with pytest.raises(RootDatumError):
        central_quotient(standard_group("SL", 3), [[Fraction(1, 2), 0]])


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from([("SL", 2), ("PGL", 3), ("GL", 2), ("SO", 5), ("Torus", 1)]),
                min_size=1, max_size=3))
def test_pi1_of_product_is_sum(specs):
    groups = [standard_group(*s) for s in specs]
    P = product(*groups)
    assert pi1_group(P).canonical == direct_sum(*[pi1_group(g) for g in groups]).canonical
    assert len(irreducible_components(P)) == sum(len(irreducible_components(g)) for g in groups)


@pytest.mark.parametrize("spec", [("PGL", 5), ("SO", 6), ("Spin", 7), ("ADJ", "E", 6), ("GL", 3)])
def test_pi1_matches_snf_oracle(spec):
    d = standard_group(*spec)
    G = pi1_group(d)
    assert (G.free_rank, G.torsion) == oracles.quotient_signature(d.rank, [list(c) for c in d.coroots])
    assert coroot_inclusion(d).cokernel()[0].canonical == G.canonical


def test_gamma_must_preserve_roots():
    C2 = FiniteGroup.cyclic(2)
    d = standard_group("GL", 2)
    assert d.with_gamma(C2, [[[1, 0], [0, 1]], [[0, -1], [-1, 0]]]).gamma is C2
    with pytest.raises(RootDatumError):
        d.with_gamma(C2, [[[1, 0], [0, 1]], [[1, 0], [0, -1]]])


def test_json_roundtrip():
    C2 = FiniteGroup.cyclic(2)
    d = standard_group("GL", 2).with_gamma(C2, [[[1, 0], [0, 1]], [[0, -1], [-1, 0]]])
    assert RootDatum.from_json(d.to_json()) == d


def test_schema_errors():
    with pytest.raises(RootDatumError) as info:
        RootDatum.from_json({"rank": 1, "roots": []})
    assert info.value.axiom == "schema"


def test_parse_group_spec():
    assert parse_group_spec(["PGL(3)"]) == standard_group("PGL", 3)
    assert parse_group_spec(["SC", "E", "6"]) == standard_group("SC", "E", 6)
    with pytest.raises(RootDatumError):
        parse_group_spec(["Nope", "1"])
    assert "GL" in CATALOG_NAMES
