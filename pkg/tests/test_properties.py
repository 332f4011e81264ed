"""Property-based checks of the algebraic laws on randomized instances."""

import random

from hypothesis import given, settings, strategies as st

from symq.abelian import AbGroup, mat_mul, det, quotient, smith_normal_form
from symq.cohomology import (
    THEORY_SR,
    Cochain,
    coboundary_witness,
    cochain_space,
    cohomology_presentation,
    delta1,
    is_cocycle,
)
from symq.dynamical import (
    Gauge,
    are_cohomologous_dynamical,
    build_extension,
    dynamical_diagnostics,
    from_cocycle,
    gauge_transform,
)
from symq.groups import FiniteGroup, conj_quandle, core_quandle
from symq.modules import dihedral_kamada_module, validate_module
from symq.racks import (
    enumerate_good_involutions,
    good_involution_diagnostics,
    takasaki,
    trivial_rack,
    validate_good_involution,
)
from symq.wells import act_on_cocycle, enumerate_aut_pairs

from conftest import module, rack
from test_modules import manual_constant

SETTINGS = settings(max_examples=40, deadline=None)


def involution_words(n):
    words = []
    for perm_seed in range(200):
        rng = random.Random(perm_seed)
        w = list(range(n))
        rng.shuffle(w)
        # square it away to an involution by pairing mismatches
        for i in range(n):
            if w[w[i]] != i:
                w[w[i]] = w[i] = i if w[i] == i else w[i]
        if sorted(w) == list(range(n)) and all(w[w[i]] == i for i in range(n)):
            words.append(tuple(w))
    return sorted(set(words))


RACK_POOL = (
    [takasaki(n) for n in (1, 2, 3, 4, 5)]
    + [trivial_rack(3, w) for w in involution_words(3)]
    + [conj_quandle(FiniteGroup.symmetric(3)), core_quandle(FiniteGroup.cyclic(4))]
    + [rack("t2"), rack("t4"), rack("core_z4_shift")]
)

racks = st.sampled_from(RACK_POOL)
small_ints = st.integers(min_value=-8, max_value=8)


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    return [[draw(small_ints) for _ in range(cols)] for _ in range(rows)]


class TestAbelianProperties:
    @SETTINGS
    @given(matrices())
    def test_snf_factorization(self, M):
        s = smith_normal_form(M)
        assert mat_mul(mat_mul(s.U, M), s.V) == s.D
        assert abs(det(s.U)) == 1 and abs(det(s.V)) == 1

    @SETTINGS
    @given(st.permutations(range(3)), st.permutations(range(3)))
    def test_quotient_generator_order_invariance(self, gp, rp):
        A = AbGroup([0, 0, 0])
        gens = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        rels = [(2, 0, 0), (0, 6, 0), (0, 0, 1)]
        base = quotient(A, gens, rels).group.orders
        got = quotient(
            A, [gens[i] for i in gp], [rels[i] for i in rp]
        ).group.orders
        assert got == base


class TestRackProperties:
    @SETTINGS
    @given(racks, st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    def test_translation_cancellation(self, X, xs, ys):
        x, y = xs % X.size, ys % X.size
        r = X.rack
        assert r.op(r.left_inverse_op(x, y), y) == x
        assert r.left_inverse_op(r.op(x, y), y) == x

    @SETTINGS
    @given(racks, st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    def test_s3_table_identity(self, X, xs, ys):
        x, y = xs % X.size, ys % X.size
        assert X.op(x, X.rho[y]) == X.rack.left_inverse_op(x, y)

    @SETTINGS
    @given(st.sampled_from(RACK_POOL[:8]))
    def test_good_involutions_revalidate(self, X):
        for w in enumerate_good_involutions(X.rack):
            validate_good_involution(X.rack, w)


class TestModuleProperties:
    @SETTINGS
    @given(racks, st.sampled_from([(3, 2, 2, 1), (4, 3, 2, 1), (4, 3, 2, 3), (5, 4, 2, 1)]))
    def test_twisted_constants_hold_everywhere(self, X, spec):
        n, phi, psi, eta = spec
        m = manual_constant(X, AbGroup([n]), phi, psi, eta)
        assert validate_module(m).ok

    @SETTINGS
    @given(racks, st.sampled_from([[2], [3], [4], [2, 2]]))
    def test_dihedral_kamada_holds_everywhere(self, X, orders):
        assert validate_module(dihedral_kamada_module(X, AbGroup(orders))).ok


def one_cochain_from(m, coeffs):
    gens = cochain_space(m, 1, THEORY_SR).gens
    out = Cochain.zero(1, m.base.size, m.A)
    for g, k in zip(gens, coeffs):
        out = out.add(Cochain(1, g.size, g.group, [m.A.scale(k, v) for v in g.values]))
    return out


MODULE_POOL = [
    module("tw_z3", rack("takasaki3")),
    module("m0_z4", rack("t2")),
    dihedral_kamada_module(rack("core_z4"), AbGroup([2])),
    dihedral_kamada_module(rack("t4"), AbGroup([4])),
]

modules_ = st.sampled_from(MODULE_POOL)
coeff_lists = st.lists(st.integers(0, 11), min_size=8, max_size=8)


class TestCohomologyProperties:
    @SETTINGS
    @given(modules_, coeff_lists)
    def test_coboundaries_are_cocycles(self, m, coeffs):
        sigma = delta1(m, one_cochain_from(m, coeffs))
        ok, diags = is_cocycle(m, sigma, THEORY_SR)
        assert ok, diags

    @SETTINGS
    @given(modules_, coeff_lists)
    def test_witness_round_trip(self, m, coeffs):
        sigma = delta1(m, one_cochain_from(m, coeffs))
        tau = coboundary_witness(m, sigma, THEORY_SR)
        assert tau is not None
        assert delta1(m, tau) == sigma

    @SETTINGS
    @given(st.sampled_from(MODULE_POOL[:2]), coeff_lists)
    def test_projection_constant_on_cosets(self, m, coeffs):
        pres = cohomology_presentation(m, 2, THEORY_SR)
        lam = one_cochain_from(m, coeffs)
        for g in pres.cocycle_gens:
            assert pres.project(g.add(delta1(m, lam))) == pres.project(g)


def z4_setup():
    X = rack("t2")
    m = module("m0_z4", X)
    from conftest import cochain

    return m, cochain("t2_z4", X, m)


@st.composite
def gauges(draw, sizes):
    return Gauge([tuple(draw(st.permutations(range(s)))) for s in sizes])


class TestDynamicalProperties:
    @SETTINGS
    @given(st.data())
    def test_gauge_transforms_stay_valid(self, data):
        m, c = z4_setup()
        dc = from_cocycle(m, c, THEORY_SR)
        g = data.draw(gauges(dc.sizes))
        out = gauge_transform(dc, g)
        assert not dynamical_diagnostics(dc.base, out.sizes, out.alpha, out.beta, False)

    @SETTINGS
    @given(st.data())
    def test_gauge_action_composes_and_inverts(self, data):
        m, c = z4_setup()
        dc = from_cocycle(m, c, THEORY_SR)
        g = data.draw(gauges(dc.sizes))
        h = data.draw(gauges(dc.sizes))
        gh = Gauge([
            tuple(g.perms[x][h.perms[x][s]] for s in range(dc.sizes[x]))
            for x in range(len(dc.sizes))
        ])
        assert gauge_transform(gauge_transform(dc, h), g) == gauge_transform(dc, gh)
        assert gauge_transform(gauge_transform(dc, g), g.inverse()) == dc

    @SETTINGS
    @given(coeff_lists)
    def test_cohomologous_cocycles_glue_equivalently(self, coeffs):
        # explicit affine witness gamma_x(a) = tau(x) + a is accepted
        m, c = z4_setup()
        tau = one_cochain_from(m, coeffs)
        shifted = c.add(delta1(m, tau))
        dc, dc2 = from_cocycle(m, c, THEORY_SR), from_cocycle(m, shifted, THEORY_SR)
        elems = list(m.A.elements())
        explicit = Gauge([
            tuple(m.A.element_index(m.A.add(tau.value(x), a)) for a in elems)
            for x in range(m.base.size)
        ])
        assert gauge_transform(dc, explicit) == dc2
        assert are_cohomologous_dynamical(dc, dc2) is not None


class TestWellsProperties:
    @SETTINGS
    @given(st.integers(0, 3), coeff_lists)
    def test_action_preserves_cocycles(self, k, coeffs):
        # group action on Z^2 stays inside Z^2
        m, c = z4_setup()
        ext_pairs = enumerate_aut_pairs(build_extension_of(m, c))
        p = ext_pairs[k % len(ext_pairs)]
        pres = cohomology_presentation(m, 2, THEORY_SR)
        for g in pres.cocycle_gens:
            out = act_on_cocycle(m, p, g)
            ok, diags = is_cocycle(m, out, THEORY_SR)
            assert ok, diags

    @SETTINGS
    @given(st.integers(0, 3), coeff_lists)
    def test_action_preserves_coboundaries(self, k, coeffs):
        # nu(x) = theta(lam(zeta^-1 x)) certifies the acted coboundary
        m, c = z4_setup()
        pairs = enumerate_aut_pairs(build_extension_of(m, c))
        p = pairs[k % len(pairs)]
        lam = one_cochain_from(m, coeffs)
        acted = act_on_cocycle(m, p, delta1(m, lam))
        zinv = [0] * len(p.zeta)
        for i, v in enumerate(p.zeta):
            zinv[v] = i
        nu = Cochain(1, m.base.size, m.A, [p.theta(lam.value(zinv[x])) for x in range(m.base.size)])
        assert delta1(m, nu) == acted
        assert coboundary_witness(m, acted, THEORY_SR) is not None


def build_extension_of(m, c):
    from symq.wells import build_abelian_extension

    return build_abelian_extension(m, c, THEORY_SR)
