from fractions import Fraction

import pytest
from hypothesis import given, settings

from boolattice import (
    ElementNotInLattice,
    FiniteSet,
    NotFactorable,
    NotFactorizable,
    classify_brute,
    close,
    decompose,
    elasticity_of,
    elasticity_of_lattice,
    factorization_product_check,
    factorizations,
    length_set,
    named_example,
)
from helpers import (
    edge_generator_families,
    fs,
    generator_families,
    oracle_factorizations,
)


TRIANGLE = close([fs(1, 2), fs(2, 3), fs(1, 3)])
LFS_NOT_UFS = close(named_example("lfs_not_ufs").generators)
TWO_COMPONENTS = close(named_example("quarkic_two_components").generators)
NOT_FACTORIZABLE = close([fs(1), fs(1, 2)])


def as_raw(zs):
    return {frozenset(frozenset(q.elements) for q in z.quarks) for z in zs}


def test_factorizations_triangle_top():
    zs = factorizations(TRIANGLE, fs(1, 2, 3))
    assert [str(z) for z in zs] == ["{1 2, 1 3}", "{1 2, 2 3}", "{1 3, 2 3}"]
    assert all(len(z) == 2 for z in zs)


def test_factorizations_two_lengths():
    zs = factorizations(LFS_NOT_UFS, FiniteSet(range(1, 7)))
    assert as_raw(zs) == {
        frozenset({frozenset({1, 2, 3}), frozenset({4, 5, 6})}),
        frozenset({frozenset({1, 4}), frozenset({2, 5}), frozenset({3, 6})}),
    }
    assert [len(z) for z in zs] == [2, 3]


def test_factorizations_nonfactorable_element():
    assert factorizations(NOT_FACTORIZABLE, fs(1, 2)) == []


def test_factorizations_errors():
    with pytest.raises(ElementNotInLattice):
        factorizations(TRIANGLE, fs(9))
    with pytest.raises(ValueError):
        factorizations(TRIANGLE, FiniteSet())


def test_factorizations_are_joined_to_target_and_irredundant():
    for S in (TRIANGLE, LFS_NOT_UFS, TWO_COMPONENTS):
        for x in S.elements:
            if not len(x):
                continue
            for z in factorizations(S, x):
                assert z.joined() == x
                for i in range(len(z)):
                    rest = [q for j, q in enumerate(z.quarks) if j != i]
                    dropped = set()
                    for q in rest:
                        dropped.update(q.elements)
                    assert FiniteSet(dropped) != x


def test_length_set_and_elasticity():
    assert length_set(LFS_NOT_UFS, FiniteSet(range(1, 7))) == (2, 3)
    assert length_set(TRIANGLE, fs(1, 2, 3)) == (2,)
    assert length_set(TRIANGLE, fs(1, 2)) == (1,)
    assert elasticity_of(LFS_NOT_UFS, FiniteSet(range(1, 7))) == Fraction(3, 2)
    assert elasticity_of(TRIANGLE, fs(1, 2)) == 1
    with pytest.raises(NotFactorable):
        length_set(NOT_FACTORIZABLE, fs(1, 2))


def test_elasticity_of_lattice():
    value, witness = elasticity_of_lattice(TRIANGLE)
    assert value == 1
    value, witness = elasticity_of_lattice(LFS_NOT_UFS)
    assert value == Fraction(3, 2)
    assert witness == FiniteSet(range(1, 7))
    with pytest.raises(NotFactorizable):
        elasticity_of_lattice(NOT_FACTORIZABLE)


def test_classify_triangle():
    r = classify_brute(TRIANGLE)
    assert (r.factorizable, r.ffs, r.ufs, r.hfs, r.lfs) == (True, True, False, True, False)
    assert r.elasticity == 1
    w = r.witnesses["ufs"]
    assert w.element == fs(1, 2, 3)
    assert [str(z) for z in w.factorizations] == ["{1 2, 1 3}", "{1 2, 2 3}"]


def test_classify_lfs_not_ufs():
    r = classify_brute(LFS_NOT_UFS)
    assert (r.ufs, r.hfs, r.lfs) == (False, False, True)
    assert r.elasticity == Fraction(3, 2)
    assert r.elasticity_witness == FiniteSet(range(1, 7))
    assert "lfs" not in r.witnesses
    assert r.witnesses["hfs"].element == FiniteSet(range(1, 7))


def test_classify_ufs_chain():
    S = close(named_example("ufs_chain_overlap").generators)
    r = classify_brute(S)
    assert r.ufs and r.hfs and r.lfs and r.factorizable
    assert r.elasticity == 1
    assert r.witnesses == {}


def test_classify_not_factorizable():
    r = classify_brute(NOT_FACTORIZABLE)
    assert not r.factorizable and not r.ffs
    assert r.witnesses["factorizable"].element == fs(1, 2)
    assert r.witnesses["factorizable"].factorizations == ()
    # flags describe the factorable elements, which all factor uniquely here
    assert r.ufs and r.hfs and r.lfs


def test_classify_trivial_lattice():
    r = classify_brute(close([]))
    assert r.factorizable and r.ufs and r.hfs and r.lfs
    assert r.elasticity == 1
    assert r.elasticity_witness is None


def test_report_json_schema():
    d = classify_brute(TRIANGLE).to_json_dict()
    assert list(d) == ["factorizable", "ffs", "ufs", "hfs", "lfs", "elasticity", "witnesses"]
    assert d["elasticity"] == "1"
    assert d["witnesses"]["ufs"]["factorizations"] == [["1 2", "1 3"], ["1 2", "2 3"]]


def test_decompose_two_components():
    pieces = decompose(TWO_COMPONENTS, FiniteSet(range(1, 7)))
    assert pieces == [(0, fs(1, 2, 3)), (1, fs(4, 5, 6))]
    assert decompose(TWO_COMPONENTS, fs(4, 5)) == [(1, fs(4, 5))]
    assert decompose(LFS_NOT_UFS, FiniteSet(range(1, 7))) == [(0, FiniteSet(range(1, 7)))]


def test_decompose_errors():
    with pytest.raises(NotFactorizable):
        decompose(NOT_FACTORIZABLE, fs(1, 2))
    with pytest.raises(ElementNotInLattice):
        decompose(TRIANGLE, fs(9))
    with pytest.raises(ValueError):
        decompose(TRIANGLE, FiniteSet())


def test_product_check_examples():
    X = FiniteSet(range(1, 7))
    assert factorization_product_check(TWO_COMPONENTS, X)
    assert len(factorizations(TWO_COMPONENTS, X)) == 3
    # per-component counts: 3 for the triangle piece, 1 for the path piece
    triangle_piece = close([fs(1, 2), fs(1, 3), fs(2, 3)])
    path_piece = close([fs(4, 5), fs(4, 6)])
    assert len(factorizations(triangle_piece, fs(1, 2, 3))) == 3
    assert len(factorizations(path_piece, fs(4, 5, 6))) == 1
    assert factorization_product_check(TRIANGLE, fs(1, 2))


@given(generator_families())
def test_factorizations_match_powerset_oracle(gens):
    S = close(gens)
    for x in S.elements:
        if not len(x):
            continue
        got = as_raw(factorizations(S, x))
        assert got == oracle_factorizations(S.quarks, x)


@given(generator_families())
def test_factorization_output_is_sorted(gens):
    S = close(gens)
    for x in S.elements:
        if not len(x):
            continue
        zs = factorizations(S, x)
        keys = [z.sort_key for z in zs]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


@given(generator_families())
def test_report_coherence(gens):
    S = close(gens)
    r = classify_brute(S)
    assert r.ufs == (r.hfs and r.lfs)
    assert r.ffs == r.factorizable
    if r.factorizable:
        assert r.hfs == (r.elasticity == 1)
        value, _ = elasticity_of_lattice(S)
        assert value == r.elasticity
        if r.ufs:
            assert all(
                len(factorizations(S, x)) == 1 for x in S.elements if len(x)
            )


@given(generator_families(max_value=8, max_count=4))
@settings(max_examples=40)
def test_product_check_property(gens):
    S = close(gens)
    if not S.is_factorizable():
        return
    for x in S.elements:
        if len(x):
            assert factorization_product_check(S, x)


@given(edge_generator_families(max_value=6, max_count=5))
@settings(max_examples=40)
def test_isolated_quark_reduction(gens):
    # plant two far-away quarks, one of them isolated for sure
    gens = gens + [fs(90, 91), fs(95)]
    S = close(gens)
    from boolattice import isolated_quarks

    isolated = set(isolated_quarks(S))
    core = [q for q in S.quarks if q not in isolated]
    reduced = close(core)
    full, small = classify_brute(S), classify_brute(reduced)
    assert full.ufs == small.ufs
    assert full.hfs == small.hfs
    assert full.lfs == small.lfs


@given(edge_generator_families(max_value=6, max_count=5))
@settings(max_examples=40)
def test_isolated_quark_join_law(gens):
    isolated = fs(97, 98)
    S = close(gens + [isolated])
    for x in S.elements:
        if not len(x) or isolated.issubset(x):
            continue
        joined = x | isolated
        with_a = as_raw(factorizations(S, joined))
        base = as_raw(factorizations(S, x))
        extended = {z | {frozenset(isolated.elements)} for z in base}
        assert with_a == extended
