"""Rack axioms, good involutions, automorphisms, standard constructions."""

import pytest

from symq.errors import EmptyCarrier, SizeBoundExceeded, ValidationError
from symq.racks import (
    QUANDLE,
    RACK,
    FiniteSymmetricRack,
    RackMorphism,
    cycle_notation,
    enumerate_automorphisms,
    enumerate_good_involutions,
    good_involution_diagnostics,
    is_isomorphism,
    rack_diagnostics,
    takasaki,
    trivial_rack,
    validate_good_involution,
    validate_rack,
)

from conftest import rack


class TestValidateRack:
    def test_accepts_takasaki_tables(self):
        for n in (1, 2, 3, 4, 5, 6):
            X = takasaki(n)
            assert X.kind == QUANDLE
            assert X.size == n

    def test_rejects_non_bijective_translation(self):
        diags = rack_diagnostics([[0, 0], [0, 0]])
        assert any(d.axiom == "right-translation-bijective" for d in diags)

    def test_rejects_broken_self_distributivity(self):
        # x*y = x+y mod 3 has bijective translations but is not a rack
        table = [[(x + y) % 3 for y in range(3)] for x in range(3)]
        diags = rack_diagnostics(table)
        assert any(d.axiom == "self-distributivity" for d in diags)

    def test_rejects_non_idempotent_quandle(self):
        # cyclic shift x*y = x+1 is a rack but no quandle
        table = [[(x + 1) % 3 for _ in range(3)] for x in range(3)]
        assert validate_rack(table, RACK).kind == RACK
        with pytest.raises(ValidationError) as err:
            validate_rack(table, QUANDLE)
        assert any(d.axiom == "idempotence" for d in err.value.diagnostics)

    def test_empty_carrier(self):
        with pytest.raises(EmptyCarrier):
            validate_rack([])

    def test_left_inverse_cancels_translation(self):
        for X in (takasaki(5), trivial_rack(3)):
            r = X.rack
            for x in range(r.size):
                for y in range(r.size):
                    assert r.op(r.left_inverse_op(x, y), y) == x
                    assert r.left_inverse_op(r.op(x, y), y) == x


class TestGoodInvolutions:
    def test_s3_as_table_identity(self):
        for name in ("t2", "t4", "takasaki3", "core_z4", "core_z4_shift", "conj_s3"):
            X = rack(name)
            for x in range(X.size):
                for y in range(X.size):
                    assert X.op(x, X.rho[y]) == X.rack.left_inverse_op(x, y)

    def test_rejects_non_involution(self):
        X = takasaki(3)
        with pytest.raises(ValueError):
            FiniteSymmetricRack(X.rack, (0, 1))
        diags = good_involution_diagnostics(X.rack, (1, 2, 0))
        assert any(d.axiom == "S1-involution" for d in diags)

    def test_rejects_bad_s2(self):
        # swap is an involution of Takasaki Z3 but not a good one
        diags = good_involution_diagnostics(takasaki(3).rack, (1, 0, 2))
        assert diags

    def test_trivial_two_point_quandle(self):
        words = enumerate_good_involutions(trivial_rack(2).rack)
        assert set(words) == {(0, 1), (1, 0)}

    def test_core_z4_contains_shift(self):
        words = enumerate_good_involutions(rack("core_z4").rack)
        assert (0, 1, 2, 3) in words
        assert (2, 3, 0, 1) in words

    def test_everything_revalidates(self):
        for name in ("t2", "takasaki3", "core_z4", "conj_s3"):
            r = rack(name).rack
            for w in enumerate_good_involutions(r):
                validate_good_involution(r, w)

    def test_size_bound(self):
        with pytest.raises(SizeBoundExceeded):
            enumerate_good_involutions(takasaki(3).rack, bound=2)


class TestAutomorphisms:
    def test_takasaki3_is_s3(self):
        words = enumerate_automorphisms(takasaki(3))
        assert len(words) == 6

    def test_rho_constrains_the_group(self):
        # T4 with pair-swap rho only keeps rho-commuting permutations
        X = rack("t4")
        words = enumerate_automorphisms(X)
        rho = X.rho
        for w in words:
            assert tuple(w[rho[i]] for i in range(4)) == tuple(rho[w[i]] for i in range(4))
        assert len(words) == 8

    def test_group_closure(self):
        words = set(enumerate_automorphisms(rack("core_z4")))
        n = 4
        assert tuple(range(n)) in words
        for f in words:
            inv = [0] * n
            for i in range(n):
                inv[f[i]] = i
            assert tuple(inv) in words
            for g in words:
                assert tuple(f[g[i]] for i in range(n)) in words

    def test_size_bound(self):
        with pytest.raises(SizeBoundExceeded):
            enumerate_automorphisms(takasaki(3), bound=2)


class TestMorphisms:
    def test_isomorphism_detection(self):
        X = takasaki(3)
        assert is_isomorphism(RackMorphism(X, X, (0, 1, 2)))
        assert is_isomorphism(RackMorphism(X, X, (0, 2, 1)))

    def test_non_morphism_diagnosed(self):
        X = takasaki(4)
        T = trivial_rack(4)
        bad = RackMorphism(X, T, (0, 1, 2, 3))
        assert bad.diagnostics()
        assert not is_isomorphism(bad)

    def test_fold_t4_onto_t2(self):
        src = rack("t4")
        dst = rack("t2")
        f = RackMorphism(src, dst, (0, 1, 0, 1))
        assert not f.diagnostics()
        assert f.is_surjective()


class TestCycleNotation:
    def test_formats(self):
        assert cycle_notation((0, 1, 2)) == "id"
        assert cycle_notation((1, 0)) == "(0 1)"
        assert cycle_notation((1, 0, 3, 2)) == "(0 1)(2 3)"
        assert cycle_notation((1, 2, 0)) == "(0 1 2)"
