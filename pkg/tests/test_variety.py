"""Congruences, quotients, subdirect irreducibility, pentagon-variety
membership."""

import pytest

from latcheck import catalog, embed
from latcheck.core import are_isomorphic, canonical_form, direct_product, dual, is_convex_set, is_sublattice_set
from latcheck.enumeration import all_lattices
from latcheck.errors import SizeLimit
from latcheck.laws import semidistributive
from latcheck.variety import (
    all_congruences,
    in_n5_variety,
    is_subdirectly_irreducible,
    meet_irreducible_congruences,
    principal_congruence,
    quotient,
    si_factors,
)

from oracles import compatible_partitions


def test_principal_identity():
    c3 = catalog.chain(3)
    c = principal_congruence(c3, 1, 1)
    assert c.is_identity()


def test_principal_n5_side_pair():
    n5 = catalog.get("N5")
    i = n5.index_of
    c = principal_congruence(n5, i("x3"), i("x4"))
    blocks = {frozenset(n5.labels[e] for e in b) for b in c.blocks()}
    assert blocks == {frozenset({"x3", "x4"}), frozenset({"x1"}),
                      frozenset({"x2"}), frozenset({"x5"})}


def test_principal_chain_bottom_pair():
    c3 = catalog.chain(3)
    c = principal_congruence(c3, 0, 1)
    assert c.block_count == 2
    assert c.same(0, 1) and not c.same(0, 2)


def test_congruence_counts_against_partition_oracle():
    for name in ("chain(3)", "N5", "M3", "grid(2,2)", "L4"):
        L = catalog.get(name) if "(" not in name or name.startswith(("chain", "grid", "ninf")) else None
        L = catalog.get(name)
        got = {frozenset(c.blocks()) for c in all_congruences(L)}
        want = set(compatible_partitions(L))
        assert got == want, name


def test_congruence_counts_small_enumeration():
    for L in all_lattices(5) + all_lattices(6)[:8]:
        got = {frozenset(c.blocks()) for c in all_congruences(L)}
        want = set(compatible_partitions(L))
        assert got == want


def test_chain3_has_four_congruences():
    assert len(all_congruences(catalog.chain(3))) == 4


def test_m3_is_simple():
    assert len(all_congruences(catalog.get("M3"))) == 2


def test_square_congruences():
    g = catalog.grid(2)
    cons = all_congruences(g)
    assert len(cons) == 4
    two_block = [c for c in cons if c.block_count == 2]
    assert len(two_block) == 2  # the two collapse-one-direction kernels


def test_congruence_blocks_are_convex_sublattices():
    for name in ("N5", "L6", "stacked_n5", "ninf(2)"):
        L = catalog.get(name)
        for c in all_congruences(L):
            for b in c.blocks():
                assert is_sublattice_set(L, b)
                assert is_convex_set(L, b)


def test_quotient_collapse_all():
    n5 = catalog.get("N5")
    from latcheck.variety import all_congruence
    q = quotient(n5, all_congruence(5))
    assert q.n == 1


def test_quotient_n5_monolith_is_square():
    n5 = catalog.get("N5")
    i = n5.index_of
    q = quotient(n5, principal_congruence(n5, i("x3"), i("x4")))
    assert are_isomorphic(q, catalog.grid(2))


def test_si_n5_true_square_false():
    assert is_subdirectly_irreducible(catalog.get("N5"))
    assert not is_subdirectly_irreducible(catalog.grid(2))
    assert not is_subdirectly_irreducible(catalog.chain(1))


def test_si_factors_n5():
    factors = si_factors(catalog.get("N5"))
    forms = {canonical_form(f) for f in factors}
    assert forms == {canonical_form(catalog.chain(2)), canonical_form(catalog.get("N5"))}


def test_membership_accepts():
    for name in ("N5", "chain(5)", "B3", "ninf(2)", "stacked_n5", "grid(2,4)"):
        d = in_n5_variety(catalog.get(name))
        assert d.member, name
        allowed = {canonical_form(catalog.chain(1)), canonical_form(catalog.chain(2)),
                   canonical_form(catalog.get("N5"))}
        assert all(canonical_form(f) in allowed for f in d.factors)


def test_membership_rejects():
    for name in ["M3"] + list(catalog.MCKENZIE_NAMES):
        d = in_n5_variety(catalog.get(name))
        assert not d.member, name
        assert d.offending is not None


def test_membership_necessary_conditions():
    for L in all_lattices(5) + all_lattices(6):
        if in_n5_variety(L):
            j, m = semidistributive(L)
            assert j and m
            hits = embed.contains_forbidden(L, embed.profile("N"))
            assert hits == []


def test_membership_dual_invariant():
    for name in ("N5", "M3", "L7", "L13", "stacked_n5", "ninf(2)"):
        L = catalog.get(name)
        assert bool(in_n5_variety(L)) == bool(in_n5_variety(dual(L)))


def test_membership_product_multiplicative():
    n5 = catalog.get("N5")
    c2 = catalog.chain(2)
    m3 = catalog.get("M3")
    assert in_n5_variety(direct_product(n5, c2))
    assert in_n5_variety(direct_product(c2, c2))
    assert not in_n5_variety(direct_product(m3, c2))


def test_size_cap():
    with pytest.raises(SizeLimit):
        all_congruences(catalog.chain(17))


def test_meet_irreducible_have_unique_cover():
    for name in ("N5", "chain(4)", "grid(2,2)", "L4"):
        L = catalog.get(name)
        cons = all_congruences(L)
        for c in meet_irreducible_congruences(L):
            above = [d for d in cons if d != c and c.refines(d)]
            covers = [d for d in above if not any(e != d and e.refines(d) for e in above)]
            assert len(covers) == 1
