"""Dynamical cocycles: fiberwise data gluing a new symmetric rack over a base.

Over a symmetric rack (X, rho) assign a finite fiber S_x to each x, maps
alpha_{x,y}: S_x x S_y -> S_{x*y} and beta_x: S_x -> S_{rho(x)} with

  (1) alpha_{x,y}(-, t) bijective for every t
  (2) alpha_{x*y,z}(alpha_{x,y}(s,t), w)
        = alpha_{x*z,y*z}(alpha_{x,z}(s,w), alpha_{y,z}(t,w))
  (3) alpha_{rho(x),y}(beta_x(s), t) = beta_{x*y}(alpha_{x,y}(s,t))
  (4) beta_{rho(x)}(beta_x(s)) = s
  (5) alpha_{x invop y, y}(alpha_{x,rho(y)}(s, beta_y(t)), t) = s

and, when the glued object is asked to be a quandle over a quandle base,

  (6) alpha_{x,x}(s,s) = s.

Then (x,s)*(y,t) = (x*y, alpha_{x,y}(s,t)) with rho(x,s) = (rho(x), beta_x(s))
is again a symmetric rack, fibered over X; (6) is exactly what makes it a
quandle.  A quandle base can perfectly well carry a rack extension, so the
quandle requirement is a flag, not something inferred from the base.
Changing each fiber by a permutation gamma_x produces an equivalent
cocycle; the equivalences are exactly the fiber-preserving isomorphisms
over the base.
"""

import itertools
import math

from . import limits
from .errors import (
    Diagnostic,
    InfiniteGroupUnsupported,
    NotACocycle,
    NotNormal,
    NotSurjective,
    SearchSpaceExceeded,
    ValidationError,
)
from .groups import conj_quandle, core_quandle, is_normal, quotient_group, subgroup_check
from .modules import validate_module
from .racks import (
    QUANDLE,
    RACK,
    FiniteRack,
    FiniteSymmetricRack,
    RackMorphism,
    good_involution_diagnostics,
    is_isomorphism,
    rack_diagnostics,
)


def _resolve_quandle_flag(X, quandle):
    if quandle is None:
        quandle = X.kind == QUANDLE
    if quandle and X.kind != QUANDLE:
        raise ValueError("a quandle extension needs a quandle base")
    return bool(quandle)


class DynamicalCocycle:
    """Shape-checked fiber data over a base; axioms live in validate_dynamical.

    quandle=True asks the glued extension to be a quandle (condition (6));
    the default follows the kind of the base.
    """

    __slots__ = ("base", "sizes", "alpha", "beta", "quandle")

    def __init__(self, base, sizes, alpha, beta, quandle=None):
        n = base.size
        sizes = tuple(int(s) for s in sizes)
        if len(sizes) != n or any(s <= 0 for s in sizes):
            raise ValueError("need one positive fiber size per base element")
        shape = _shape_problems(base, sizes, alpha, beta)
        if shape:
            raise ValueError(f"malformed fiber tables: {shape[:4]}")
        self.base = base
        self.sizes = sizes
        self.alpha = tuple(
            tuple(tuple(tuple(r) for r in alpha[x][y]) for y in range(n))
            for x in range(n)
        )
        self.beta = tuple(tuple(beta[x]) for x in range(n))
        self.quandle = _resolve_quandle_flag(base, quandle)

    def op_fiber(self, x, y, s, t):
        return self.alpha[x][y][s][t]

    def __eq__(self, other):
        return (
            isinstance(other, DynamicalCocycle)
            and self.base == other.base
            and self.sizes == other.sizes
            and self.quandle == other.quandle
            and self.alpha == other.alpha
            and self.beta == other.beta
        )

    def __hash__(self):
        return hash((self.sizes, self.alpha, self.beta, self.quandle))

    def __repr__(self):
        return (
            f"DynamicalCocycle(base_size={self.base.size}, "
            f"sizes={list(self.sizes)}, quandle={self.quandle})"
        )


def _shape_problems(X, sizes, alpha, beta):
    problems = []
    n = X.size
    if len(alpha) != n or any(len(alpha[x]) != n for x in range(n)):
        return [("alpha", "outer shape")]
    if len(beta) != n:
        return [("beta", "outer shape")]
    for x in range(n):
        for y in range(n):
            block = alpha[x][y]
            target = sizes[X.op(x, y)]
            if len(block) != sizes[x] or any(len(row) != sizes[y] for row in block):
                problems.append(("alpha", x, y))
                continue
            if any(not (0 <= v < target) for row in block for v in row):
                problems.append(("alpha", x, y))
        row = beta[x]
        target = sizes[X.rho[x]]
        if len(row) != sizes[x] or any(not (0 <= v < target) for v in row):
            problems.append(("beta", x))
    return problems


def dynamical_diagnostics(X, sizes, alpha, beta, quandle=None):
    """Axiom diagnostics for raw fiber tables; shape problems short-circuit."""
    quandle = _resolve_quandle_flag(X, quandle)
    shape = _shape_problems(X, sizes, alpha, beta)
    if shape:
        return [Diagnostic("fiber-map", shape)]
    n = X.size
    found = {}

    def hit(axiom, w):
        found.setdefault(axiom, []).append(w)

    mismatched = set()
    for x in range(n):
        for y in range(n):
            if sizes[x] != sizes[X.op(x, y)]:
                hit("fiber-size", (x, y))
                mismatched.add((x, y))
        if sizes[x] != sizes[X.rho[x]]:
            hit("fiber-size", (x,))

    for x in range(n):
        for y in range(n):
            if (x, y) in mismatched:
                continue
            full = set(range(sizes[X.op(x, y)]))
            for t in range(sizes[y]):
                if {alpha[x][y][s][t] for s in range(sizes[x])} != full:
                    hit("alpha-bijective", (x, y, t))

    if found:
        # later axioms compose maps whose endpoints already disagree
        order = ["fiber-size", "alpha-bijective"]
        return [Diagnostic(a, found[a]) for a in order if a in found]

    op, rho = X.op, X.rho
    for x in range(n):
        for y in range(n):
            for z in range(n):
                xy, xz, yz = op(x, y), op(x, z), op(y, z)
                for s in range(sizes[x]):
                    for t in range(sizes[y]):
                        for w in range(sizes[z]):
                            lhs = alpha[xy][z][alpha[x][y][s][t]][w]
                            rhs = alpha[xz][yz][alpha[x][z][s][w]][alpha[y][z][t][w]]
                            if lhs != rhs:
                                hit("alpha-cocycle", (x, y, z, s, t, w))
    for x in range(n):
        for y in range(n):
            xy = op(x, y)
            a = X.left_inverse_op(x, y)
            for s in range(sizes[x]):
                for t in range(sizes[y]):
                    if alpha[rho[x]][y][beta[x][s]][t] != beta[xy][alpha[x][y][s][t]]:
                        hit("beta-alpha", (x, y, s, t))
                    if alpha[a][y][alpha[x][rho[y]][s][beta[y][t]]][t] != s:
                        hit("left-inverse", (x, y, s, t))
    for x in range(n):
        for s in range(sizes[x]):
            if beta[rho[x]][beta[x][s]] != s:
                hit("beta-involution", (x, s))
        if quandle:
            for s in range(sizes[x]):
                if alpha[x][x][s][s] != s:
                    hit("idempotence", (x, s))

    order = [
        "fiber-size",
        "alpha-bijective",
        "alpha-cocycle",
        "beta-alpha",
        "left-inverse",
        "beta-involution",
        "idempotence",
    ]
    return [Diagnostic(a, found[a]) for a in order if a in found]


def validate_dynamical(X, sizes, alpha, beta, quandle=None):
    """Checked constructor: returns a DynamicalCocycle or raises with diagnostics."""
    diags = dynamical_diagnostics(X, sizes, alpha, beta, quandle)
    if diags:
        raise ValidationError("fiber data is not a dynamical cocycle", diags)
    return DynamicalCocycle(X, sizes, alpha, beta, quandle)


class DynamicalExtension:
    """The glued symmetric rack, with the (x, s) <-> index dictionary."""

    __slots__ = ("rack", "cocycle", "labels", "_index")

    def __init__(self, rack, cocycle, labels):
        self.rack = rack
        self.cocycle = cocycle
        self.labels = tuple(labels)
        self._index = {p: i for i, p in enumerate(self.labels)}

    def index_of(self, pair):
        return self._index[pair]

    def pair_of(self, index):
        return self.labels[index]

    def __repr__(self):
        return (
            f"DynamicalExtension(size={self.rack.size}, "
            f"base_size={self.cocycle.base.size})"
        )


def build_extension(dc):
    """Glue the total symmetric rack of a valid dynamical cocycle."""
    X = dc.base
    diags = dynamical_diagnostics(X, dc.sizes, dc.alpha, dc.beta, dc.quandle)
    if diags:
        raise ValidationError("fiber data is not a dynamical cocycle", diags)
    labels = [(x, s) for x in range(X.size) for s in range(dc.sizes[x])]
    index = {p: i for i, p in enumerate(labels)}
    total = len(labels)
    table = [[0] * total for _ in range(total)]
    rho = [0] * total
    for i, (x, s) in enumerate(labels):
        rho[i] = index[(X.rho[x], dc.beta[x][s])]
        for j, (y, t) in enumerate(labels):
            table[i][j] = index[(X.op(x, y), dc.alpha[x][y][s][t])]
    kind = QUANDLE if dc.quandle else RACK
    if rack_diagnostics(table, kind):
        raise AssertionError("extension table failed rack axioms")
    rack = FiniteRack(table, kind)
    if good_involution_diagnostics(rack, rho):
        raise AssertionError("extension involution failed")
    return DynamicalExtension(FiniteSymmetricRack(rack, rho), dc, labels)


class Gauge:
    """A permutation of every fiber; acts on cocycles and nothing else."""

    __slots__ = ("perms",)

    def __init__(self, perms):
        perms = tuple(tuple(p) for p in perms)
        for p in perms:
            if sorted(p) != list(range(len(p))):
                raise ValueError("each fiber map must be a permutation")
        self.perms = perms

    @classmethod
    def identity(cls, sizes):
        return cls([tuple(range(s)) for s in sizes])

    def inverse(self):
        out = []
        for p in self.perms:
            q = [0] * len(p)
            for i, v in enumerate(p):
                q[v] = i
            out.append(tuple(q))
        return Gauge(out)

    def __eq__(self, other):
        return isinstance(other, Gauge) and self.perms == other.perms

    def __hash__(self):
        return hash(self.perms)

    def __repr__(self):
        return f"Gauge({[list(p) for p in self.perms]})"


def gauge_transform(dc, gauge):
    """Twist: alpha'(s,t) = g_{x*y}(alpha(ginv_x(s), ginv_y(t))), beta' alike."""
    g = gauge if isinstance(gauge, Gauge) else Gauge(gauge)
    X = dc.base
    n = X.size
    if tuple(len(p) for p in g.perms) != dc.sizes:
        raise ValueError("gauge fiber sizes do not match the cocycle")
    ginv = g.inverse()
    alpha = [
        [
            [
                [
                    g.perms[X.op(x, y)][
                        dc.alpha[x][y][ginv.perms[x][s]][ginv.perms[y][t]]
                    ]
                    for t in range(dc.sizes[y])
                ]
                for s in range(dc.sizes[x])
            ]
            for y in range(n)
        ]
        for x in range(n)
    ]
    beta = [
        [g.perms[X.rho[x]][dc.beta[x][ginv.perms[x][s]]] for s in range(dc.sizes[x])]
        for x in range(n)
    ]
    return DynamicalCocycle(X, dc.sizes, alpha, beta, dc.quandle)


def are_cohomologous_dynamical(dc1, dc2, bound=None):
    """Search for a gauge carrying dc1 to dc2; None if there is none.

    Fibers are filled in base order with pruning on every fully assigned
    constraint.  A found gauge is double-checked by transporting dc1 and by
    exhibiting the fiber-preserving isomorphism of the two extensions.
    """
    if dc1.base != dc2.base:
        raise ValueError("cocycles live over different bases")
    if dc1.quandle != dc2.quandle:
        raise ValueError("cocycles target different extension kinds")
    if dc1.sizes != dc2.sizes:
        return None
    X = dc1.base
    n = X.size
    sizes = dc1.sizes
    cap = limits.resolve(bound, limits.GAUGE_SEARCH)
    space = 1
    for s in sizes:
        space *= math.factorial(s)
    if space > cap:
        raise SearchSpaceExceeded(f"{space} gauges exceed the search cap {cap}")

    pair_when = {}
    beta_when = {}
    for x in range(n):
        for y in range(n):
            k = max(x, y, X.op(x, y))
            pair_when.setdefault(k, []).append((x, y))
        beta_when.setdefault(max(x, X.rho[x]), []).append(x)

    perms = [None] * n

    def consistent(k):
        for x, y in pair_when.get(k, ()):
            gx, gy, gz = perms[x], perms[y], perms[X.op(x, y)]
            for s in range(sizes[x]):
                for t in range(sizes[y]):
                    if gz[dc1.alpha[x][y][s][t]] != dc2.alpha[x][y][gx[s]][gy[t]]:
                        return False
        for x in beta_when.get(k, ()):
            gx, gr = perms[x], perms[X.rho[x]]
            for s in range(sizes[x]):
                if gr[dc1.beta[x][s]] != dc2.beta[x][gx[s]]:
                    return False
        return True

    def search(k):
        if k == n:
            return True
        for p in itertools.permutations(range(sizes[k])):
            perms[k] = p
            if consistent(k) and search(k + 1):
                return True
        perms[k] = None
        return False

    if not search(0):
        return None
    found = Gauge(perms)
    if gauge_transform(dc1, found) != dc2:
        raise AssertionError("gauge transport check failed")
    e1 = build_extension(dc1)
    e2 = build_extension(dc2)
    carry = [e2.index_of((x, found.perms[x][s])) for (x, s) in e1.labels]
    if not is_isomorphism(RackMorphism(e1.rack, e2.rack, carry)):
        raise AssertionError("gauge does not induce an isomorphism over the base")
    return found


# ---------------------------------------------------------------------------
# constructions


def affine_tables(m, sigma):
    """Raw fiber tables of alpha(a,b) = phi(a) + psi(b) + sigma(x,y), beta = eta.

    No axiom is checked here: the tables of an arbitrary candidate triple
    are exactly what a validator needs to see.
    """
    X, A = m.base, m.A
    if not A.is_finite():
        raise InfiniteGroupUnsupported("fibers must be finite to tabulate")
    elems = A.elements()
    idx = {a: i for i, a in enumerate(elems)}
    n = X.size
    size = len(elems)
    alpha = [
        [
            [
                [
                    idx[
                        A.add(
                            A.add(m.phi[x][y](a), m.psi[x][y](b)),
                            sigma.value(x, y),
                        )
                    ]
                    for b in elems
                ]
                for a in elems
            ]
            for y in range(n)
        ]
        for x in range(n)
    ]
    beta = [[idx[m.eta[x](a)] for a in elems] for x in range(n)]
    return (size,) * n, alpha, beta


def from_cocycle(m, sigma, theory=None):
    """Dynamical cocycle of a module 2-cocycle; every route is verified.

    The module axioms and the cocycle conditions are rechecked, the affine
    tables are built, and the dynamical axioms are confirmed on the result.
    The quandle theory asks for a quandle extension, the rack theory for a
    rack extension; the default follows the kind of the base.
    """
    from .cohomology import THEORY_SQ, is_cocycle

    if theory is None:
        theory = THEORY_SQ if m.base.kind == QUANDLE else "sr"
    check = validate_module(m)
    if not check.ok:
        raise ValidationError("coefficients are not a module", check.diagnostics)
    ok, diags = is_cocycle(m, sigma, theory)
    if not ok:
        raise NotACocycle("not a 2-cocycle: " + "; ".join(d.axiom for d in diags))
    sizes, alpha, beta = affine_tables(m, sigma)
    return validate_dynamical(m.base, sizes, alpha, beta, quandle=theory == THEORY_SQ)


def from_surjection(f):
    """Unpack a surjection of symmetric racks into a dynamical cocycle.

    Fibers are the preimages in increasing element order; returns
    (cocycle, fibers) with fibers[x][s] the total-space element named (x, s).
    The reglued extension is checked to be isomorphic to the source.
    """
    diags = f.diagnostics()
    if diags:
        raise ValidationError("not a morphism of symmetric racks", diags)
    if not f.is_surjective():
        raise NotSurjective("the morphism misses part of the base")
    src, X = f.source, f.target
    fibers = [[e for e in range(src.size) if f.map[e] == x] for x in range(X.size)]
    pos = {}
    for x, fib in enumerate(fibers):
        for s, e in enumerate(fib):
            pos[e] = (x, s)
    n = X.size
    sizes = tuple(len(fib) for fib in fibers)
    alpha = [
        [
            [
                [
                    pos[src.op(fibers[x][s], fibers[y][t])][1]
                    for t in range(sizes[y])
                ]
                for s in range(sizes[x])
            ]
            for y in range(n)
        ]
        for x in range(n)
    ]
    beta = [
        [pos[src.rho[fibers[x][s]]][1] for s in range(sizes[x])] for x in range(n)
    ]
    dc = validate_dynamical(X, sizes, alpha, beta, quandle=src.kind == QUANDLE)
    ext = build_extension(dc)
    carry = [fibers[x][s] for (x, s) in ext.labels]
    if not is_isomorphism(RackMorphism(ext.rack, src, carry)):
        raise AssertionError("reglued extension does not match the source")
    return dc, fibers


class GroupExtensionSplitting:
    """A group-built quandle over its quotient, split along a section.

    kappa picks the least element of each coset (the identity for the
    trivial coset), fibers are identified with the subgroup through
    s |-> kappa(x) s, and theta(x, y) = kappa(x*y)^-1 (kappa(x) * kappa(y))
    records how the section fails to respect the quandle operation.
    """

    __slots__ = (
        "group",
        "subgroup",
        "quotient",
        "coset_of",
        "total",
        "base",
        "kappa",
        "cocycle",
        "theta",
        "flavor",
    )

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def __repr__(self):
        return (
            f"GroupExtensionSplitting(flavor={self.flavor!r}, "
            f"group_size={self.group.size}, subgroup_size={len(self.subgroup)})"
        )


def from_group_extension(G, sub_elements, flavor="conj", n=1, z=None):
    """Split a conjugation or core quandle of G over G/A, A normal.

    flavor "conj" uses x*y = y^-n x y^n with rho = inversion; "core" uses
    x*y = y x^-1 y with rho = id; "core_z" twists core by rho(y) = yz for a
    given central involution z.  When z lies in A the quotient involution
    collapses to the identity.
    """
    A = subgroup_check(G, sub_elements)
    if not is_normal(G, A):
        raise NotNormal("fiber subgroup must be normal")
    Q, coset_of = quotient_group(G, A)
    if flavor == "conj":
        total = conj_quandle(G, n)
        base = conj_quandle(Q, n)
    elif flavor == "core":
        total = core_quandle(G)
        base = core_quandle(Q)
    elif flavor == "core_z":
        if z is None:
            raise ValueError("core_z needs the central involution z")
        total = core_quandle(G, z)
        zbar = coset_of[z]
        base = core_quandle(Q) if zbar == Q.identity else core_quandle(Q, zbar)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")

    proj = RackMorphism(total, base, coset_of)
    if proj.diagnostics():
        raise AssertionError("projection to the quotient is not a morphism")

    kappa = []
    for q in range(Q.size):
        members = [e for e in range(G.size) if coset_of[e] == q]
        kappa.append(G.identity if coset_of[G.identity] == q else min(members))
    a_index = {a: i for i, a in enumerate(A)}
    size = len(A)

    def mu(x, s):
        return G.m(kappa[x], A[s])

    def unmu(x, e):
        return a_index[G.m(G.inv[kappa[x]], e)]

    nq = Q.size
    alpha = [
        [
            [
                [
                    unmu(base.op(x, y), total.op(mu(x, s), mu(y, t)))
                    for t in range(size)
                ]
                for s in range(size)
            ]
            for y in range(nq)
        ]
        for x in range(nq)
    ]
    beta = [
        [unmu(base.rho[x], total.rho[mu(x, s)]) for s in range(size)]
        for x in range(nq)
    ]
    dc = validate_dynamical(base, (size,) * nq, alpha, beta, quandle=True)
    ext = build_extension(dc)
    carry = [mu(x, s) for (x, s) in ext.labels]
    if not is_isomorphism(RackMorphism(ext.rack, total, carry)):
        raise AssertionError("section regluing does not match the group quandle")

    i0 = a_index[G.identity]
    theta = {
        (x, y): A[dc.alpha[x][y][i0][i0]] for x in range(nq) for y in range(nq)
    }
    return GroupExtensionSplitting(
        group=G,
        subgroup=tuple(A),
        quotient=Q,
        coset_of=tuple(coset_of),
        total=total,
        base=base,
        kappa=tuple(kappa),
        cocycle=dc,
        theta=theta,
        flavor=flavor,
    )
