"""Affine extensions, symmetry pairs, lifting, and the exactness report."""

import pytest

from symq.abelian import AbGroup, AbHom
from symq.cohomology import THEORY_SQ, THEORY_SR, Cochain, cohomology_presentation
from symq.errors import (
    InfiniteGroupUnsupported,
    NotACocycle,
    NotConstantModule,
    SearchSpaceExceeded,
    SizeBoundExceeded,
    ValidationError,
)
from symq.modules import RackModule, dihedral_kamada_module
from symq.racks import good_involution_diagnostics, takasaki
from symq.wells import (
    AutPair,
    act_on_cocycle,
    brute_force_fiber_automorphisms,
    build_abelian_extension,
    enumerate_autA_extension,
    enumerate_aut_pairs,
    extend_pair,
    gamma_restriction,
    lambda_map,
    module_automorphisms,
    stabilizer,
    validate_aut_pair,
    wells_report,
    z1_elements,
)

from conftest import cochain, module, rack


def z4_extension():
    X = rack("t2")
    m = module("m0_z4", X)
    c = cochain("t2_z4", X, m)
    return build_abelian_extension(m, c, THEORY_SR)


def z_extension():
    X = rack("t2")
    m = module("m0_z", X)
    c = cochain("t2_z", X, m)
    return build_abelian_extension(m, c, THEORY_SR)


def nonconstant_module():
    # phi = id, psi = 0, eta = (2, 3) over Z5 on the two-point trivial quandle:
    # M3 only needs eta_{rho(x)} inverse to eta_x
    X = rack("t2")
    A = AbGroup([5])
    ident = AbHom.identity(A)
    zero = AbHom.zero(A, A)
    eta = [AbHom.scalar(A, 2), AbHom.scalar(A, 3)]
    return RackModule(X, A, [[ident] * 2] * 2, [[zero] * 2] * 2, eta)


class TestBuildExtension:
    def test_total_rack_is_symmetric(self):
        ext = z4_extension()
        assert ext.rack.size == 8
        assert not good_involution_diagnostics(ext.rack.rack, ext.rack.rho)

    def test_theory_defaults_to_base_kind(self):
        X = rack("t2")
        m = module("m0_z4", X)
        c = cochain("t2_z4", X, m)
        # T2 is a quandle, so the default is quandle theory, where the
        # nonzero diagonal of this cocycle is rejected
        with pytest.raises(NotACocycle):
            build_abelian_extension(m, c)

    def test_non_cocycle_rejected(self):
        X = rack("t2")
        m = module("m0_z4", X)
        bad = Cochain(2, 2, m.A, [(1,), (0,), (0,), (0,)])
        with pytest.raises(NotACocycle):
            build_abelian_extension(m, bad, THEORY_SR)

    def test_non_constant_module_rejected(self):
        m = nonconstant_module()
        sigma = Cochain.zero(2, 2, m.A)
        with pytest.raises(NotConstantModule):
            build_abelian_extension(m, sigma, THEORY_SQ)

    def test_shape_mismatch(self):
        X = rack("t2")
        m = module("m0_z4", X)
        wrong = Cochain(1, 2, m.A, [(0,), (0,)])
        with pytest.raises(ValueError):
            build_abelian_extension(m, wrong, THEORY_SR)

    def test_infinite_fiber_is_symbolic(self):
        ext = z_extension()
        assert ext.extension is None
        assert ext.rack is None
        with pytest.raises(InfiniteGroupUnsupported):
            ext.size


class TestModuleAutomorphisms:
    def test_unit_groups(self):
        X = rack("t2")
        assert {p.theta.matrix for p in ()} == set()
        auts = module_automorphisms(module("m0_z4", X))
        assert sorted(h.matrix for h in auts) == [((1,),), ((3,),)]
        auts = module_automorphisms(dihedral_kamada_module(X, AbGroup([2])))
        assert [h.matrix for h in auts] == [((1,),)]
        auts = module_automorphisms(module("tw_z3", rack("takasaki3")))
        assert sorted(h.matrix for h in auts) == [((1,),), ((2,),)]

    def test_infinite_rank_one(self):
        auts = module_automorphisms(module("m0_z", rack("t2")))
        assert sorted(h.matrix for h in auts) == [((-1,),), ((1,),)]

    def test_gl2_f2(self):
        X = rack("t2")
        A = AbGroup([2, 2])
        m = dihedral_kamada_module(X, A)
        assert len(module_automorphisms(m)) == 6

    def test_aut_z2_x_z4(self):
        X = rack("t2")
        m = dihedral_kamada_module(X, AbGroup([2, 4]))
        assert len(module_automorphisms(m)) == 8

    def test_free_rank_two_unsupported(self):
        m = dihedral_kamada_module(rack("t2"), AbGroup([0, 0]))
        with pytest.raises(InfiniteGroupUnsupported):
            module_automorphisms(m)

    def test_torsion_bound(self):
        m = dihedral_kamada_module(rack("t2"), AbGroup([4]))
        with pytest.raises(SizeBoundExceeded):
            module_automorphisms(m, bound=2)

    def test_non_constant_rejected(self):
        with pytest.raises(NotConstantModule):
            module_automorphisms(nonconstant_module())


class TestPairs:
    def test_enumeration_is_zeta_major(self):
        ext = z4_extension()
        pairs = enumerate_aut_pairs(ext)
        assert len(pairs) == 4
        assert [p.zeta for p in pairs] == [(0, 1), (0, 1), (1, 0), (1, 0)]

    def test_validate_rejects_bad_zeta(self):
        ext = z_extension()
        # the swap is fine; a non-rho-commuting word on T4 is not
        X4 = rack("t4")
        m4 = dihedral_kamada_module(X4, AbGroup([2]))
        bad = AutPair((1, 2, 3, 0), AbHom.identity(m4.A))
        assert any(d.axiom == "zeta-symmetry" for d in validate_aut_pair(m4, bad))

    def test_validate_rejects_bad_theta(self):
        m = module("tw_z3", rack("takasaki3"))
        # theta = 0 is not invertible
        bad = AutPair((0, 1, 2), AbHom.zero(m.A, m.A))
        assert any(d.axiom == "theta-symmetry" for d in validate_aut_pair(m, bad))

    def test_compose_and_inverse(self):
        ext = z4_extension()
        pairs = enumerate_aut_pairs(ext)
        table = set(pairs)
        for p in pairs:
            assert p.inverse() in table
            assert p.compose(p.inverse()) == AutPair.identity(ext.module)
            for q in pairs:
                assert p.compose(q) in table


class TestActionAndLambda:
    def test_acted_cocycles_stay_cocycles(self):
        ext = z4_extension()
        from symq.cohomology import is_cocycle

        for p in enumerate_aut_pairs(ext):
            out = act_on_cocycle(ext.module, p, ext.sigma)
            ok, diags = is_cocycle(ext.module, out, THEORY_SR)
            assert ok, diags

    def test_lambda_values(self):
        ext = z4_extension()
        got = {}
        for p in enumerate_aut_pairs(ext):
            got[(p.zeta, p.theta.matrix)] = lambda_map(ext, p)
        assert got == {
            ((0, 1), ((1,),)): (0,),
            ((0, 1), ((3,),)): (2,),
            ((1, 0), ((1,),)): (0,),
            ((1, 0), ((3,),)): (2,),
        }

    def test_lambda_matches_projection_difference(self):
        ext = z4_extension()
        pres = cohomology_presentation(ext.module, 2, THEORY_SR)
        for p in enumerate_aut_pairs(ext):
            acted = act_on_cocycle(ext.module, p, ext.sigma)
            diff = pres.group.sub(pres.project(ext.sigma), pres.project(acted))
            assert lambda_map(ext, p) == diff

    def test_lambda_over_z(self):
        ext = z_extension()
        minus = AutPair((0, 1), AbHom.scalar(ext.module.A, -1))
        assert lambda_map(ext, minus) == (2,)
        ident = AutPair.identity(ext.module)
        assert lambda_map(ext, ident) == (0,)

    def test_stabilizer_is_the_kernel_of_lambda(self):
        ext = z4_extension()
        stab = stabilizer(ext)
        keys = {(p.zeta, p.theta.matrix) for p in stab}
        assert keys == {((0, 1), ((1,),)), ((1, 0), ((1,),))}
        for p in stab:
            zero = tuple([0] * len(lambda_map(ext, p)))
            assert lambda_map(ext, p) == zero


class TestLifting:
    def test_obstructed_pair_has_no_lift(self):
        ext = z4_extension()
        bad = AutPair((0, 1), AbHom.scalar(ext.module.A, 3))
        assert extend_pair(ext, bad) is None

    def test_unobstructed_pairs_lift_and_verify(self):
        ext = z4_extension()
        for p in stabilizer(ext):
            lift = extend_pair(ext, p)
            assert lift is not None
            assert lift.pair == p
            # construction already verified the permutation is an automorphism
            assert sorted(lift.perm) == list(range(8))

    def test_lift_over_z_is_symbolic(self):
        ext = z_extension()
        lift = extend_pair(ext, AutPair.identity(ext.module))
        assert lift is not None
        assert lift.perm is None
        assert extend_pair(ext, AutPair((0, 1), AbHom.scalar(ext.module.A, -1))) is None

    def test_apply_and_compose(self):
        ext = z4_extension()
        lifts = enumerate_autA_extension(ext)
        for f in lifts:
            for g in lifts:
                fg = f.compose(g)
                for i in range(8):
                    x, a = ext.pair_of(i)
                    assert fg.apply(x, a) == f.apply(*g.apply(x, a))

    def test_inverse(self):
        ext = z4_extension()
        for f in enumerate_autA_extension(ext):
            finv = f.inverse()
            for i in range(8):
                x, a = ext.pair_of(i)
                assert finv.apply(*f.apply(x, a)) == (x, a)


class TestEnumerationAndReport:
    def test_z1_size(self):
        ext = z4_extension()
        assert len(z1_elements(ext)) == 4

    def test_aut_group_size(self):
        ext = z4_extension()
        lifts = enumerate_autA_extension(ext)
        assert len(lifts) == 8
        assert len({f.perm for f in lifts}) == 8

    def test_brute_force_agrees(self):
        ext = z4_extension()
        brute = set(brute_force_fiber_automorphisms(ext))
        assert brute == {f.perm for f in enumerate_autA_extension(ext)}

    def test_brute_force_bound(self):
        ext = z4_extension()
        with pytest.raises(SearchSpaceExceeded):
            brute_force_fiber_automorphisms(ext, bound=100)

    def test_gamma_restriction_round_trip(self):
        ext = z4_extension()
        for f in enumerate_autA_extension(ext):
            assert gamma_restriction(ext, f) == f.pair
            assert gamma_restriction(ext, f.perm) == f.pair

    def test_gamma_restriction_rejects_non_affine(self):
        ext = z4_extension()
        # swapping two points inside one fiber only is not affine
        perm = list(range(8))
        perm[0], perm[1] = perm[1], perm[0]
        with pytest.raises(ValidationError):
            gamma_restriction(ext, tuple(perm))

    def test_report_is_exact(self):
        ext = z4_extension()
        rep = wells_report(ext)
        assert (rep.z1_size, rep.kernel_size, rep.image_size, rep.aut_size) == (4, 4, 2, 8)
        assert rep.exact
        assert rep.exact_at_cocycles and rep.exact_at_symmetries and rep.exact_at_pairs

    def test_report_dict_shape(self):
        rep = wells_report(z4_extension())
        d = rep.as_dict()
        assert d["pairs"] == 4 and d["aut"] == 8
        assert len(d["classes"]) == 4
        assert d["exact"] == [True, True, True]

    def test_takasaki3_zero_cocycle_report(self):
        X = rack("takasaki3")
        m = dihedral_kamada_module(X, AbGroup([3]))
        ext = build_abelian_extension(m, Cochain.zero(2, 3, m.A), THEORY_SQ)
        rep = wells_report(ext)
        # sigma = 0: everything lifts, kernel is all of Z^1
        assert rep.image_size == len(rep.pairs) == 12
        assert rep.exact

    def test_infinite_fiber_enumeration_unsupported(self):
        ext = z_extension()
        with pytest.raises(InfiniteGroupUnsupported):
            enumerate_autA_extension(ext)
