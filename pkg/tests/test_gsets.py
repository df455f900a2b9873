from math import factorial

import pytest

from conftest import group, perm
from permring import (
    GSet,
    all_subgroups,
    coset_gset,
    count_equivariant_maps,
    disjoint_union,
    distinct_tuples,
    orbits,
    product,
    subgroup_closure,
)
from permring.errors import GroupMismatch, SizeBudgetExceeded, TupleLengthOutOfRange
from permring.gsets import fixed_points, gsets_isomorphic, restrict
from permring.oracle import oracle_gmap_count, oracle_product_orbits
from permring.rings import mackey_stabilizers


def stab3(G):
    return subgroup_closure(G, [perm([(0, 1, 2)], 4), perm([(0, 1)], 4)])


def shape(X):
    return sorted((o.size, o.stabilizer.order) for o in orbits(X))


class TestCosets:
    def test_natural_action(self, S4):
        X = coset_gset(S4, stab3(S4))
        assert X.size == 4
        # point 0 is H itself and its stabilizer is H
        assert orbits(X)[0].stabilizer == stab3(S4)
        for g in S4.elements:
            perm_g = X.permutation(g)
            assert sorted(perm_g) == [0, 1, 2, 3]
        assert gsets_isomorphic(X, GSet(S4, 4, [tuple(s) for s in S4.generators]))

    def test_whole_group_is_a_point(self, S4):
        X = coset_gset(S4, S4.whole())
        assert X.size == 1 and X.is_transitive()

    def test_s3_mod_c2(self, S3):
        X = coset_gset(S3, subgroup_closure(S3, [perm([(0, 1)], 3)]))
        assert X.size == 3 and X.is_transitive()

    def test_action_is_homomorphism(self, S4):
        X = coset_gset(S4, subgroup_closure(S4, [perm([(0, 1)], 4)]))
        for a in S4.elements[::5]:
            for b in S4.elements[::7]:
                pa, pb, pab = X.permutation(a), X.permutation(b), X.permutation(a * b)
                assert all(pab[x] == pa[pb[x]] for x in range(X.size))

    def test_stabilizer_of_coset_is_conjugate(self, S4):
        H = subgroup_closure(S4, [perm([(0, 1)], 4)])
        X = coset_gset(S4, H)
        for x in range(X.size):
            stab = {g for g in S4.elements if X.permutation(g)[x] == x}
            assert len(stab) == H.order


class TestConstructions:
    def test_union_with_empty(self, S4):
        X = coset_gset(S4, stab3(S4))
        U = disjoint_union(X, GSet.empty(S4))
        assert shape(U) == shape(X)

    def test_two_fixed_points(self, S4):
        U = disjoint_union(GSet.trivial(S4, 1), GSet.trivial(S4, 1))
        assert shape(U) == [(1, 24), (1, 24)]

    def test_union_of_two_copies(self, S4):
        X = coset_gset(S4, stab3(S4))
        assert shape(disjoint_union(X, X)) == [(4, 6), (4, 6)]

    def test_product_of_point_stabilizers(self, S4):
        X = coset_gset(S4, stab3(S4))
        P = product(X, X)
        assert P.size == 16
        assert shape(P) == [(4, 6), (12, 2)]

    def test_product_with_point_is_identity(self, S4):
        X = coset_gset(S4, subgroup_closure(S4, [perm([(0, 1, 2, 3)], 4)]))
        assert gsets_isomorphic(product(GSet.trivial(S4, 1), X), X)

    def test_product_s3(self, S3):
        X = coset_gset(S3, subgroup_closure(S3, [perm([(0, 1)], 3)]))
        assert sorted(o.size for o in orbits(product(X, X))) == [3, 6]

    def test_group_mismatch(self, S4, S3):
        with pytest.raises(GroupMismatch):
            product(GSet.trivial(S4, 1), GSet.trivial(S3, 1))

    def test_point_budget(self, S4):
        X = coset_gset(S4, S4.trivial())
        with pytest.raises(SizeBudgetExceeded):
            product(X, X, point_budget=100)

    def test_restrict(self, S4):
        X = coset_gset(S4, stab3(S4))
        U = disjoint_union(X, GSet.trivial(S4, 1))
        R = restrict(U, [4])
        assert shape(R) == [(1, 24)]
        with pytest.raises(ValueError):
            restrict(U, [0])


class TestOrbits:
    def test_trivial_gset(self, S4):
        assert shape(GSet.trivial(S4, 3)) == [(1, 24)] * 3

    @pytest.mark.parametrize("name", ["S3", "S4", "A4"])
    def test_product_matches_mackey_and_oracle(self, name):
        G = group(name)
        subs = all_subgroups(G)
        for K in subs:
            for H in subs[::2]:
                XK, XH = coset_gset(G, K), coset_gset(G, H)
                P = product(XK, XH)
                mine = sorted((o.size, o.stabilizer.order) for o in orbits(P))
                mackey = sorted((G.order // L.order, L.order) for L in mackey_stabilizers(G, K, H))
                assert mine == mackey
                assert sorted(oracle_product_orbits(XK, XH).elements()) == mine

    def test_fixed_points(self, S4):
        X = coset_gset(S4, stab3(S4))
        assert fixed_points(X, stab3(S4)) == [0]
        assert fixed_points(X, S4.trivial()) == [0, 1, 2, 3]


class TestTuples:
    def test_degenerate_lengths(self, S4):
        X = coset_gset(S4, stab3(S4))
        assert shape(distinct_tuples(X, 0)) == [(1, 24)]
        assert shape(distinct_tuples(X, 1)) == shape(X)
        assert distinct_tuples(X, 5).size == 0
        with pytest.raises(TupleLengthOutOfRange):
            distinct_tuples(X, 6)

    def test_full_length_is_regular(self, S4):
        T = distinct_tuples(coset_gset(S4, stab3(S4)), 4)
        assert T.size == 24
        assert shape(T) == [(24, 1)]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_trivial_tuples_are_fixed(self, S3, n):
        T = distinct_tuples(GSet.trivial(S3, n), n)
        assert T.size == factorial(n)
        assert all(o.size == 1 for o in orbits(T))


class TestEquivariantMaps:
    def test_point_stabilizer_endos(self, S4):
        X = coset_gset(S4, stab3(S4))
        assert count_equivariant_maps(X, X) == 1 == oracle_gmap_count(X, X)

    def test_into_a_point(self, S4):
        Y = coset_gset(S4, subgroup_closure(S4, [perm([(0, 1)], 4)]))
        assert count_equivariant_maps(Y, GSet.trivial(S4, 1)) == 1

    def test_trivial_sets_count_all_maps(self, S4):
        X = GSet.trivial(S4, 2)
        assert count_equivariant_maps(X, X) == 4
        X3 = GSet.trivial(S4, 3)
        assert count_equivariant_maps(X3, X3) == 27 == oracle_gmap_count(X3, X3)

    def test_no_maps_from_free_orbit_to_fixed_free(self, S3):
        Y = GSet.trivial(S3, 1)
        X = coset_gset(S3, S3.trivial())
        assert count_equivariant_maps(Y, X) == 0 == oracle_gmap_count(Y, X)

    @pytest.mark.parametrize("name", ["S3", "D4", "A4"])
    def test_matches_enumeration(self, name):
        G = group(name)
        sets = [coset_gset(G, H) for H in all_subgroups(G)]
        sets = [X for X in sets if X.size <= 6]
        for Y in sets:
            for X in sets:
                assert count_equivariant_maps(Y, X) == oracle_gmap_count(Y, X)


def test_isomorphism(S3):
    a = coset_gset(S3, subgroup_closure(S3, [perm([(0, 1)], 3)]))
    b = coset_gset(S3, subgroup_closure(S3, [perm([(1, 2)], 3)]))
    c = coset_gset(S3, subgroup_closure(S3, [perm([(0, 1, 2)], 3)]))
    assert gsets_isomorphic(a, a)
    assert gsets_isomorphic(a, b)
    assert not gsets_isomorphic(a, c)
