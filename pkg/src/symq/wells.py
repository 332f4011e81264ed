"""Fiber-preserving symmetries of affine extensions and their obstructions.

An affine extension E = X x A of a finite symmetric rack (X, rho) by a
constant module (A, phi, psi, eta) twisted by a 2-cocycle sigma carries

    (x, a) * (y, b) = (x * y, phi(a) + psi(b) + sigma(x, y))
    rho_E(x, a)     = (rho(x), eta(a)).

A symmetry pair is a rack symmetry zeta of (X, rho) together with an
invertible endomorphism theta of A commuting with phi, psi and eta; it
acts on 2-cochains by

    (g . sigma)(x, y) = theta(sigma(zeta^-1(x), zeta^-1(y))).

A pair lifts to a fiber-preserving symmetry of E exactly when the
obstruction class [sigma] - [g . sigma] vanishes.  Every lift has the
affine shape xi(x, a) = (zeta(x), lam(x) + theta(a)) where lam is an
eta-compatible 1-cochain with

    delta(lam)(x, y) = theta(sigma(x, y)) - sigma(zeta(x), zeta(y)),

two lifts of the same pair differ by a 1-cocycle, and the lifts of the
identity pair form a group isomorphic to Z^1.
"""

from itertools import permutations, product
from math import factorial

from . import limits
from .abelian import AbGroup, AbHom, subgroup_elements
from .cohomology import (
    THEORY_SQ,
    THEORY_SR,
    Cochain,
    _cochain_to_vec,
    _vec_to_cochain,
    coboundary_witness,
    cohomology_presentation,
    is_cocycle,
)
from .dynamical import build_extension, from_cocycle
from .errors import (
    Diagnostic,
    InfiniteGroupUnsupported,
    NotACocycle,
    NotConstantModule,
    SearchSpaceExceeded,
    SizeBoundExceeded,
    ValidationError,
)
from .modules import validate_module
from .racks import (
    QUANDLE,
    RackMorphism,
    _is_automorphism_word,
    enumerate_automorphisms,
    is_isomorphism,
)


class AbelianExtension:
    """X x A with the affine product; the glued table exists when A is finite.

    Over an infinite A only the cohomological data is kept: obstruction
    classes and lift equations never need the total space itself.
    """

    __slots__ = ("module", "sigma", "theory", "presentation", "cocycle", "extension", "rack")

    def __init__(self, module, sigma, theory, presentation, cocycle, extension):
        self.module = module
        self.sigma = sigma
        self.theory = theory
        self.presentation = presentation
        self.cocycle = cocycle
        self.extension = extension
        self.rack = extension.rack if extension is not None else None

    @property
    def size(self):
        if self.extension is None:
            raise InfiniteGroupUnsupported("the total space is infinite")
        return self.rack.size

    def index_of(self, x, a):
        if self.extension is None:
            raise InfiniteGroupUnsupported("no index table on an infinite total space")
        return self.extension.index_of((x, self.module.A.element_index(a)))

    def pair_of(self, index):
        if self.extension is None:
            raise InfiniteGroupUnsupported("no index table on an infinite total space")
        x, s = self.extension.pair_of(index)
        return x, self.module.A.elements()[s]

    def __repr__(self):
        total = self.rack.size if self.rack is not None else "infinite"
        return (
            f"AbelianExtension(base_size={self.module.base.size}, "
            f"total={total}, theory={self.theory!r})"
        )


def build_abelian_extension(m, sigma, theory=None):
    """Assemble the affine extension of a constant module by a 2-cocycle.

    For a finite fiber group the table is glued through the dynamical
    route and rechecked against the affine product formula; an infinite
    fiber group keeps the extension symbolic.  The default theory follows
    the kind of the base.
    """
    if not m.constant:
        raise NotConstantModule("extension symmetries need a constant module")
    X = m.base
    if sigma.degree != 2 or sigma.size != X.size or sigma.group != m.A:
        raise ValueError("sigma must be a 2-cochain on the base with values in A")
    if theory is None:
        theory = THEORY_SQ if X.kind == QUANDLE else THEORY_SR
    if m.A.is_finite():
        dc = from_cocycle(m, sigma, theory)
        dext = build_extension(dc)
        _check_affine_table(m, sigma, dext)
    else:
        check = validate_module(m)
        if not check.ok:
            raise ValidationError("coefficients are not a module", check.diagnostics)
        ok, diags = is_cocycle(m, sigma, theory)
        if not ok:
            raise NotACocycle(
                "not a 2-cocycle: " + "; ".join(d.axiom for d in diags)
            )
        dc = None
        dext = None
    pres = cohomology_presentation(m, 2, theory)
    return AbelianExtension(m, sigma, theory, pres, dc, dext)


def _check_affine_table(m, sigma, dext):
    # the glued table must match the product formula computed from scratch
    X, A = m.base, m.A
    elems = A.elements()
    phi, psi, eta = m.phi[0][0], m.psi[0][0], m.eta[0]
    rack = dext.rack
    for i in range(rack.size):
        x, s = dext.pair_of(i)
        r = dext.index_of((X.rho[x], A.element_index(eta(elems[s]))))
        if rack.rho[i] != r:
            raise AssertionError("extension involution disagrees with the affine formula")
        for j in range(rack.size):
            y, t = dext.pair_of(j)
            fib = A.add(A.add(phi(elems[s]), psi(elems[t])), sigma.value(x, y))
            k = dext.index_of((X.op(x, y), A.element_index(fib)))
            if rack.op(i, j) != k:
                raise AssertionError("extension table disagrees with the affine formula")


def module_automorphisms(m, bound=None):
    """All invertible endomorphisms of A commuting with phi, psi and eta.

    Needs a constant module whose fiber group has free rank at most one:
    rank two already makes the symmetry group infinite.  Candidates are
    enumerated by generator images, torsion order capped by the bound.
    """
    if not m.constant:
        raise NotConstantModule("fiber symmetries need a constant module")
    A = m.A
    cap = limits.resolve(bound, limits.MODULE_AUT_ORDER)
    if sum(1 for d in A.orders if d == 0) > 1:
        raise InfiniteGroupUnsupported(
            "free rank above one gives infinitely many fiber symmetries"
        )
    torsion_order = 1
    for d in A.orders:
        if d:
            torsion_order *= d
    if torsion_order > cap:
        raise SizeBoundExceeded(f"fiber symmetry search capped at torsion order {cap}")
    torsion = [
        A.reduce(v) for v in product(*[range(d) if d else (0,) for d in A.orders])
    ]
    zero = A.zero()
    options = []
    for i, d in enumerate(A.orders):
        if d == 0:
            # a unit must carry the free generator to +-1 plus torsion
            opts = []
            for sign in (1, -1):
                for t in torsion:
                    v = list(t)
                    v[i] = sign
                    opts.append(tuple(v))
            options.append(opts)
        else:
            options.append([t for t in torsion if A.scale(d, t) == zero])
    total = 1
    for opts in options:
        total *= len(opts)
    if total > limits.resolve(None, limits.ENDO_ENUM):
        raise SearchSpaceExceeded("too many candidate fiber maps to scan")
    phi, psi, eta = m.phi[0][0], m.psi[0][0], m.eta[0]
    out = []
    for cols in product(*options):
        h = AbHom(A, A, [[col[i] for col in cols] for i in range(A.rank)])
        if h.inverse() is None:
            continue
        if (
            h.compose(phi) != phi.compose(h)
            or h.compose(psi) != psi.compose(h)
            or h.compose(eta) != eta.compose(h)
        ):
            continue
        out.append(h)
    out.sort(key=lambda h: h.matrix)
    found = set(out)
    if AbHom.identity(A) not in found:
        raise AssertionError("fiber symmetries miss the identity")
    for h in out:
        if h.inverse() not in found:
            raise AssertionError("fiber symmetries not closed under inverse")
        for g in out:
            if h.compose(g) not in found:
                raise AssertionError("fiber symmetries not closed under composition")
    return out


class AutPair:
    """A rack symmetry together with a compatible fiber symmetry."""

    __slots__ = ("zeta", "theta")

    def __init__(self, zeta, theta):
        zeta = tuple(int(v) for v in zeta)
        if sorted(zeta) != list(range(len(zeta))):
            raise ValueError("zeta must be a permutation word")
        self.zeta = zeta
        self.theta = theta

    @classmethod
    def identity(cls, m):
        return cls(tuple(range(m.base.size)), AbHom.identity(m.A))

    def is_identity(self):
        return self.zeta == tuple(range(len(self.zeta))) and self.theta.is_identity()

    def compose(self, other):
        """self after other in both coordinates."""
        return AutPair(
            tuple(self.zeta[v] for v in other.zeta),
            self.theta.compose(other.theta),
        )

    def inverse(self):
        inv = [0] * len(self.zeta)
        for i, v in enumerate(self.zeta):
            inv[v] = i
        th = self.theta.inverse()
        if th is None:
            raise ValueError("theta is not invertible")
        return AutPair(inv, th)

    def __eq__(self, other):
        return (
            isinstance(other, AutPair)
            and self.zeta == other.zeta
            and self.theta == other.theta
        )

    def __hash__(self):
        return hash((self.zeta, self.theta))

    def __repr__(self):
        return f"AutPair(zeta={self.zeta}, theta={self.theta.matrix})"


def validate_aut_pair(m, pair):
    """Diagnostics for a candidate pair; empty means valid."""
    if not m.constant:
        raise NotConstantModule("symmetry pairs act on constant modules")
    X, A = m.base, m.A
    out = []
    if len(pair.zeta) != X.size or not _is_automorphism_word(X, pair.zeta):
        out.append(Diagnostic("zeta-symmetry", [pair.zeta]))
    th = pair.theta
    problems = []
    if th.source != A or th.target != A:
        problems.append("shape")
    else:
        if th.inverse() is None:
            problems.append("invertible")
        for name, h in (("phi", m.phi[0][0]), ("psi", m.psi[0][0]), ("eta", m.eta[0])):
            if th.compose(h) != h.compose(th):
                problems.append(name)
    if problems:
        out.append(Diagnostic("theta-symmetry", problems))
    return out


def enumerate_aut_pairs(ext, bound=None):
    """Every symmetry pair of the base data, rack symmetries major."""
    zetas = enumerate_automorphisms(ext.module.base, bound)
    thetas = module_automorphisms(ext.module, bound)
    return [AutPair(z, t) for z in zetas for t in thetas]


def act_on_cocycle(m, pair, sigma):
    """(pair . sigma)(x, y) = theta(sigma(zeta^-1(x), zeta^-1(y)))."""
    X = m.base
    inv = [0] * X.size
    for i, v in enumerate(pair.zeta):
        inv[v] = i
    values = [
        pair.theta(sigma.value(inv[x], inv[y]))
        for x in range(X.size)
        for y in range(X.size)
    ]
    return Cochain(2, X.size, m.A, values)


def lambda_map(ext, pair):
    """Obstruction class [sigma] - [pair . sigma] of a symmetry pair."""
    diags = validate_aut_pair(ext.module, pair)
    if diags:
        raise ValidationError("not a symmetry pair", diags)
    acted = act_on_cocycle(ext.module, pair, ext.sigma)
    ok, _ = is_cocycle(ext.module, acted, ext.theory)
    if not ok:
        raise AssertionError("pair action left the cocycle space")
    pres = ext.presentation
    return pres.group.sub(pres.project(ext.sigma), pres.project(acted))


def stabilizer(ext, pairs=None, bound=None):
    """Pairs fixing [sigma], found by solving for a coboundary witness.

    This route is independent of the projection used by lambda_map; the
    report checks that both agree.
    """
    if pairs is None:
        pairs = enumerate_aut_pairs(ext, bound)
    m = ext.module
    out = []
    for p in pairs:
        diags = validate_aut_pair(m, p)
        if diags:
            raise ValidationError("not a symmetry pair", diags)
        acted = act_on_cocycle(m, p, ext.sigma)
        if coboundary_witness(m, ext.sigma.sub(acted), ext.theory) is not None:
            out.append(p)
    return out


class LiftedAutomorphism:
    """xi(x, a) = (zeta(x), lam(x) + theta(a)), a symmetry of E over a pair.

    The defining identities are checked on construction; with a finite
    fiber group the permutation of extension labels is built and verified
    as a symmetric-rack isomorphism as well.
    """

    __slots__ = ("extension", "pair", "lam", "perm")

    def __init__(self, extension, pair, lam):
        _check_lift(extension, pair, lam)
        self.extension = extension
        self.pair = pair
        self.lam = lam
        if extension.extension is not None:
            self.perm = _lift_permutation(extension, pair, lam)
            f = RackMorphism(extension.rack, extension.rack, self.perm)
            if not is_isomorphism(f):
                raise AssertionError("lift is not a symmetry of the extension")
        else:
            self.perm = None

    def apply(self, x, a):
        A = self.extension.module.A
        return self.pair.zeta[x], A.add(self.lam.value(x), self.pair.theta(a))

    def __call__(self, index):
        if self.perm is None:
            raise InfiniteGroupUnsupported("no index table on an infinite total space")
        return self.perm[index]

    def compose(self, other):
        """self after other; lambdas combine as lam o zeta' + theta . lam'."""
        if self.extension is not other.extension:
            raise ValueError("lifts live on different extensions")
        m = self.extension.module
        vals = [
            m.A.add(
                self.lam.value(other.pair.zeta[x]),
                self.pair.theta(other.lam.value(x)),
            )
            for x in range(m.base.size)
        ]
        return LiftedAutomorphism(
            self.extension,
            self.pair.compose(other.pair),
            Cochain(1, m.base.size, m.A, vals),
        )

    def inverse(self):
        pair = self.pair.inverse()
        m = self.extension.module
        vals = [
            m.A.neg(pair.theta(self.lam.value(pair.zeta[x])))
            for x in range(m.base.size)
        ]
        return LiftedAutomorphism(
            self.extension, pair, Cochain(1, m.base.size, m.A, vals)
        )

    def __eq__(self, other):
        return (
            isinstance(other, LiftedAutomorphism)
            and self.pair == other.pair
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash((self.pair, self.lam))

    def __repr__(self):
        return f"LiftedAutomorphism(pair={self.pair!r}, lam={list(self.lam.values)})"


def _check_lift(ext, pair, lam):
    # eta-compatibility of lam and the lift equation, straight from the
    # product formula; independent of any coboundary sign convention
    m = ext.module
    X, A = m.base, m.A
    diags = validate_aut_pair(m, pair)
    if diags:
        raise ValidationError("not a symmetry pair", diags)
    if lam.degree != 1 or lam.size != X.size or lam.group != A:
        raise ValueError("lam must be a 1-cochain on the base with values in A")
    phi, psi, eta = m.phi[0][0], m.psi[0][0], m.eta[0]
    bad = [x for x in range(X.size) if lam.value(X.rho[x]) != eta(lam.value(x))]
    if bad:
        raise ValidationError(
            "lam is not compatible with the involutions",
            [Diagnostic("eta-twist", bad)],
        )
    z = pair.zeta
    sigma = ext.sigma
    bad = []
    for x in range(X.size):
        for y in range(X.size):
            lhs = A.add(lam.value(X.op(x, y)), pair.theta(sigma.value(x, y)))
            rhs = A.add(
                A.add(phi(lam.value(x)), psi(lam.value(y))),
                sigma.value(z[x], z[y]),
            )
            if lhs != rhs:
                bad.append((x, y))
    if bad:
        raise ValidationError("the lift equation fails", [Diagnostic("lift", bad)])


def _lift_permutation(ext, pair, lam):
    A = ext.module.A
    elems = A.elements()
    dext = ext.extension
    perm = []
    for i in range(ext.rack.size):
        x, s = dext.pair_of(i)
        fib = A.add(lam.value(x), pair.theta(elems[s]))
        perm.append(dext.index_of((pair.zeta[x], A.element_index(fib))))
    return tuple(perm)


def extend_pair(ext, pair):
    """A lift of the pair to E, or None exactly when it is obstructed.

    The witness nu with delta(nu) = (pair . sigma) - sigma is pulled back
    along zeta to the lift lambda; the lift is verified on construction.
    """
    diags = validate_aut_pair(ext.module, pair)
    if diags:
        raise ValidationError("not a symmetry pair", diags)
    m = ext.module
    acted = act_on_cocycle(m, pair, ext.sigma)
    nu = coboundary_witness(m, acted.sub(ext.sigma), ext.theory)
    if nu is None:
        return None
    lam = Cochain(
        1, m.base.size, m.A, [nu.value(pair.zeta[x]) for x in range(m.base.size)]
    )
    return LiftedAutomorphism(ext, pair, lam)


def z1_elements(ext, bound=None):
    """Every eta-compatible 1-cocycle, through the degree-1 presentation."""
    m = ext.module
    pres = cohomology_presentation(m, 1, ext.theory)
    gens = [_cochain_to_vec(c) for c in pres.cocycle_gens]
    ambient = AbGroup(m.A.orders * m.base.size)
    vecs = subgroup_elements(ambient, gens, limits.resolve(bound, limits.ENDO_ENUM))
    if vecs is None:
        raise SearchSpaceExceeded("too many 1-cocycles to enumerate")
    return [_vec_to_cochain(1, m.base.size, m.A, v) for v in vecs]


def enumerate_autA_extension(ext, bound=None):
    """All fiber-preserving symmetries of E: lifts of every unobstructed pair.

    Lifts of one pair differ by 1-cocycles.  The result is verified to be
    a group: closed under composition and the inverse formula.
    """
    if ext.extension is None:
        raise InfiniteGroupUnsupported("symmetry enumeration needs a finite total space")
    zs = z1_elements(ext, bound)
    out = []
    for pair in enumerate_aut_pairs(ext, bound):
        base = extend_pair(ext, pair)
        if base is None:
            continue
        for zc in zs:
            out.append(LiftedAutomorphism(ext, pair, base.lam.add(zc)))
    keys = {(xi.pair, xi.lam) for xi in out}
    probe = out if len(out) <= 64 else out[:64]
    for a in probe:
        inv = a.inverse()
        if (inv.pair, inv.lam) not in keys:
            raise AssertionError("lift group not closed under inverse")
        for b in probe:
            c = a.compose(b)
            if (c.pair, c.lam) not in keys:
                raise AssertionError("lift group not closed under composition")
    return out


def gamma_restriction(ext, xi):
    """The symmetry pair underlying a fiber-preserving permutation of E.

    Accepts a lift or a raw permutation of extension labels; a raw
    permutation must cover a base permutation and move every fiber by one
    affine map, otherwise a ValidationError explains which part failed.
    """
    if isinstance(xi, LiftedAutomorphism):
        return xi.pair
    if ext.extension is None:
        raise InfiniteGroupUnsupported("no index table on an infinite total space")
    rack = ext.rack
    perm = tuple(int(v) for v in xi)
    if sorted(perm) != list(range(rack.size)):
        raise ValueError("xi must be a permutation of the extension labels")
    X, A = ext.module.base, ext.module.A
    elems = A.elements()
    dext = ext.extension
    zeta = [None] * X.size
    fiber = [[None] * len(elems) for _ in range(X.size)]
    split = []
    for i, j in enumerate(perm):
        x, s = dext.pair_of(i)
        y, t = dext.pair_of(j)
        if zeta[x] is None:
            zeta[x] = y
        elif zeta[x] != y and x not in split:
            split.append(x)
        fiber[x][s] = t
    if split:
        raise ValidationError(
            "the permutation does not cover a base permutation",
            [Diagnostic("fiber-map", split)],
        )
    zero_idx = A.element_index(A.zero())
    imgs = []
    for k in range(A.rank):
        e = A.reduce(tuple(1 if i == k else 0 for i in range(A.rank)))
        s = A.element_index(e)
        imgs.append(A.sub(elems[fiber[0][s]], elems[fiber[0][zero_idx]]))
    try:
        theta = AbHom(A, A, [[img[i] for img in imgs] for i in range(A.rank)])
    except ValueError:
        raise ValidationError(
            "fibers are not moved by one affine map",
            [Diagnostic("fiber-affine", [])],
        )
    bad = []
    for x in range(X.size):
        lam_x = elems[fiber[x][zero_idx]]
        for s, e in enumerate(elems):
            if elems[fiber[x][s]] != A.add(lam_x, theta(e)):
                bad.append((x, s))
    if bad:
        raise ValidationError(
            "fibers are not moved by one affine map",
            [Diagnostic("fiber-affine", bad)],
        )
    pair = AutPair(tuple(zeta), theta)
    diags = validate_aut_pair(ext.module, pair)
    if diags:
        raise ValidationError("not a symmetry pair", diags)
    return pair


def brute_force_fiber_automorphisms(ext, bound=None):
    """Scan all permutations of E for fiber-preserving symmetries.

    Exponential in the total size and capped; cross-checks the lift
    enumeration on small extensions.
    """
    if ext.extension is None:
        raise InfiniteGroupUnsupported("the scan needs a finite total space")
    rack = ext.rack
    n = rack.size
    cap = limits.resolve(bound, limits.GAUGE_SEARCH)
    if factorial(n) > cap:
        raise SearchSpaceExceeded(f"{n}! permutations exceed the scan cap {cap}")
    dext = ext.extension
    bases = [dext.pair_of(i)[0] for i in range(n)]
    nb = ext.module.base.size
    rho = rack.rho
    table = rack.rack.table
    out = []
    for perm in permutations(range(n)):
        zeta = [None] * nb
        ok = True
        for i in range(n):
            b, b2 = bases[i], bases[perm[i]]
            if zeta[b] is None:
                zeta[b] = b2
            elif zeta[b] != b2:
                ok = False
                break
        if not ok:
            continue
        if any(perm[rho[i]] != rho[perm[i]] for i in range(n)):
            continue
        good = True
        for i in range(n):
            row = table[i]
            prow = table[perm[i]]
            for j in range(n):
                if perm[row[j]] != prow[perm[j]]:
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(perm)
    return out


class WellsReport:
    """Order bookkeeping and exactness verdicts for the symmetry sequence.

    The sequence 0 -> Z^1 -> fiber-preserving symmetries -> pairs -> H^2
    is checked at its three interior nodes: the 1-cocycles embed as lifts
    of the identity pair, the kernel of restriction is exactly that image,
    and the image of restriction is the vanishing locus of the obstruction.
    """

    __slots__ = (
        "extension",
        "pairs",
        "classes",
        "image",
        "stab",
        "z1_size",
        "kernel_size",
        "image_size",
        "aut_size",
        "exact_at_cocycles",
        "exact_at_symmetries",
        "exact_at_pairs",
    )

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    @property
    def exact(self):
        return self.exact_at_cocycles and self.exact_at_symmetries and self.exact_at_pairs

    def as_dict(self):
        return {
            "pairs": len(self.pairs),
            "z1": self.z1_size,
            "kernel": self.kernel_size,
            "image": self.image_size,
            "aut": self.aut_size,
            "exact": [
                self.exact_at_cocycles,
                self.exact_at_symmetries,
                self.exact_at_pairs,
            ],
            "classes": [
                {
                    "zeta": list(p.zeta),
                    "theta": [list(r) for r in p.theta.matrix],
                    "class": list(c),
                }
                for p, c in zip(self.pairs, self.classes)
            ],
        }

    def __repr__(self):
        return (
            f"WellsReport(pairs={len(self.pairs)}, z1={self.z1_size}, "
            f"kernel={self.kernel_size}, image={self.image_size}, "
            f"aut={self.aut_size}, exact={self.exact})"
        )


def wells_report(ext, bound=None):
    """Enumerate pairs, lifts and obstructions; verify the exactness claims."""
    pairs = enumerate_aut_pairs(ext, bound)
    classes = [lambda_map(ext, p) for p in pairs]
    zero = ext.presentation.group.zero()
    stab = stabilizer(ext, pairs)
    zs = z1_elements(ext, bound)
    auts = enumerate_autA_extension(ext, bound)
    if len({xi.perm for xi in auts}) != len(auts):
        raise AssertionError("lift enumeration produced duplicates")
    ident = AutPair.identity(ext.module)
    kernel = [xi for xi in auts if xi.pair == ident]
    zlifts = [LiftedAutomorphism(ext, ident, z) for z in zs]
    exact_cocycles = len({xi.perm for xi in zlifts}) == len(zs)
    if exact_cocycles:
        probe = zlifts if len(zlifts) <= 64 else zlifts[:64]
        for a in probe:
            for b in probe:
                c = a.compose(b)
                if c.pair != ident or c.lam != a.lam.add(b.lam):
                    exact_cocycles = False
                    break
            if not exact_cocycles:
                break
    exact_symmetries = {xi.perm for xi in kernel} == {xi.perm for xi in zlifts}
    # image of restriction (lift construction), witness-based stabilizer and
    # the vanishing locus of the projected obstruction must all agree
    image_keys = {xi.pair for xi in auts}
    stab_keys = set(stab)
    vanish_keys = {p for p, c in zip(pairs, classes) if c == zero}
    image = [p for p in pairs if p in image_keys]
    return WellsReport(
        extension=ext,
        pairs=pairs,
        classes=classes,
        image=image,
        stab=stab,
        z1_size=len(zs),
        kernel_size=len(kernel),
        image_size=len(image),
        aut_size=len(auts),
        exact_at_cocycles=exact_cocycles,
        exact_at_symmetries=exact_symmetries,
        exact_at_pairs=image_keys == stab_keys == vanish_keys,
    )
