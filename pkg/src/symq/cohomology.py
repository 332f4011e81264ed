"""Chain complex and low-degree cohomology of symmetric racks.

For a finite symmetric rack (X, rho) with module A the degree-n chain
group is spanned by n-tuples over X, with boundary

  d(x_1,..,x_n) = sum_{j=2..n} (-1)^(n+j) *
                    [ phi_{[x_1..^j..x_n],[x_j..x_n]} (x_1,..,^j,..,x_n)
                      - (x_1*x_j,..,x_{j-1}*x_j, x_{j+1},..,x_n) ]
                  + (-1)^n psi_{[x_1 ^2 x_3..x_n],[x_2..x_n]} (x_2,..,x_n)

for n >= 2 and d(x) = -psi_{x invop p, p}(p) for a basepoint p, where
[x_1..x_k] is the left-normed product ((x_1*x_2)*..)*x_k and ^j marks an
omitted entry.  Structure maps travel to the coefficient: the dual of a
term h.(u) evaluates a cochain f as h(f(u)).

A 2-cochain sigma is eta/phi-compatible (lies in C^2) when

  eta_{x*y} sigma(x,y) = sigma(rho(x), y)
  phi_{x,y} sigma(x*y, rho(y)) + sigma(x,y) = 0

with sigma(x,x) = 0 required additionally in the quandle theory, and is a
cocycle when for all triples

  phi_{x*y,z} sigma(x,y) + sigma(x*y,z)
    = phi_{x*z,y*z} sigma(x,z) + sigma(x*z,y*z) + psi_{x*z,y*z} sigma(y,z).

A 1-cochain lam lies in C^1 when eta_x(lam(x)) = lam(rho(x)); its
coboundary is (x,y) |-> phi_{x,y} lam(x) - lam(x*y) + psi_{x,y} lam(y).
"""

import itertools

from . import limits
from .abelian import AbGroup, AbHom, Subquotient, kernel, solve
from .errors import (
    Diagnostic,
    NotACocycle,
    SizeBoundExceeded,
    ValidationError,
)
from .racks import QUANDLE

THEORY_SR = "sr"
THEORY_SQ = "sq"


def _check_theory(X, theory):
    if theory not in (THEORY_SR, THEORY_SQ):
        raise ValueError(f"unknown theory {theory!r}, expected 'sr' or 'sq'")
    if theory == THEORY_SQ and X.kind != QUANDLE:
        raise ValueError("the quandle theory needs a quandle carrier")


def bracket(X, seq):
    """Left-normed product ((x1*x2)*..)*xk of a nonempty sequence."""
    it = iter(seq)
    acc = next(it)
    for x in it:
        acc = X.op(acc, x)
    return acc


def _tuples(size, degree):
    return itertools.product(range(size), repeat=degree)


def _flat(tup, size):
    idx = 0
    for x in tup:
        idx = idx * size + x
    return idx


class FormalChain:
    """Signed sum of terms h.(tuple) with h one of id, phi_{a,b}, psi_{a,b}."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms):
        self.degree = degree
        for coeff, kind, pair, tup in terms:
            if coeff not in (1, -1) or kind not in ("one", "phi", "psi"):
                raise ValueError("malformed chain term")
            if len(tup) != degree:
                raise ValueError("term arity mismatch")
        self.terms = tuple(terms)

    def evaluate(self, m):
        """Realize each term's coefficient as an AbHom on the module group."""
        out = []
        for coeff, kind, pair, tup in self.terms:
            if kind == "one":
                h = AbHom.scalar(m.A, coeff)
            else:
                table = m.phi if kind == "phi" else m.psi
                h = table[pair[0]][pair[1]]
                if coeff < 0:
                    h = h.neg()
            out.append((h, tup))
        return out

    def collect(self, m):
        """Total coefficient per target tuple, as a dict tuple -> AbHom."""
        acc = {}
        for h, tup in self.evaluate(m):
            acc[tup] = acc[tup].add(h) if tup in acc else h
        return acc

    def __repr__(self):
        bits = []
        for coeff, kind, pair, tup in self.terms:
            sign = "+" if coeff > 0 else "-"
            head = "" if kind == "one" else f"{kind}_{pair}"
            bits.append(f"{sign}{head}{tup}")
        return " ".join(bits) or "0"


def boundary(X, n, tup, basepoint=0, psi_sign=1):
    """Boundary of the degree-n generator tup as a FormalChain.

    psi_sign flips the sign of every psi term; anything but +1 breaks the
    complex and exists only so tests can prove the verifier notices.
    """
    tup = tuple(tup)
    if len(tup) != n or n < 1:
        raise ValueError("tuple arity mismatch")
    if n == 1:
        a = X.left_inverse_op(tup[0], basepoint)
        return FormalChain(0, [(-psi_sign, "psi", (a, basepoint), ())])
    terms = []
    s = -1 if n % 2 else 1
    for j in range(2, n + 1):
        sign = s * (1 if j % 2 == 0 else -1)
        omitted = tup[: j - 1] + tup[j:]
        pair = (bracket(X, omitted), bracket(X, tup[j - 1 :]))
        terms.append((sign, "phi", pair, omitted))
        shifted = tuple(X.op(tup[i], tup[j - 1]) for i in range(j - 1)) + tup[j:]
        terms.append((-sign, "one", None, shifted))
    psi_pair = (bracket(X, tup[:1] + tup[2:]), bracket(X, tup[1:]))
    terms.append((s * psi_sign, "psi", psi_pair, tup[1:]))
    return FormalChain(n - 1, terms)


def verify_chain_complex(X, m, n, basepoint=0, bound=None, psi_sign=1):
    """Check d o d = 0 from degree n, composing coefficients outer-first.

    Returns (True, None) or (False, (source_tuple, target_tuple, hom)) for
    the lexicographically first offender.  Tuple count is capped.
    """
    if n < 2:
        raise ValueError("need n >= 2 to compose two boundaries")
    cap = limits.resolve(bound, limits.CHAIN_VERIFY_TUPLES)
    if X.size ** n > cap:
        raise SizeBoundExceeded(
            f"{X.size}^{n} tuples exceed the verification cap {cap}"
        )
    for tup in _tuples(X.size, n):
        acc = {}
        outer = boundary(X, n, tup, basepoint, psi_sign)
        for h1, u in outer.evaluate(m):
            inner = boundary(X, n - 1, u, basepoint, psi_sign)
            for h2, v in inner.evaluate(m):
                h = h1.compose(h2)
                acc[v] = acc[v].add(h) if v in acc else h
        for v in sorted(acc):
            if not acc[v].is_zero():
                return False, (tup, v, acc[v])
    return True, None


class Cochain:
    """Map X^degree -> A, stored flat in lexicographic tuple order."""

    __slots__ = ("degree", "size", "group", "values")

    def __init__(self, degree, size, group, values):
        values = tuple(group.reduce(v) for v in values)
        if len(values) != size ** degree:
            raise ValueError("value table has wrong length")
        self.degree = degree
        self.size = size
        self.group = group
        self.values = values

    @classmethod
    def zero(cls, degree, size, group):
        return cls(degree, size, group, [group.zero()] * (size ** degree))

    def value(self, *xs):
        if len(xs) != self.degree:
            raise ValueError("wrong number of arguments")
        return self.values[_flat(xs, self.size)]

    def _binop(self, other, fn):
        if (self.degree, self.size, self.group) != (
            other.degree,
            other.size,
            other.group,
        ):
            raise ValueError("cochain shape mismatch")
        return Cochain(
            self.degree,
            self.size,
            self.group,
            [fn(a, b) for a, b in zip(self.values, other.values)],
        )

    def add(self, other):
        return self._binop(other, self.group.add)

    def sub(self, other):
        return self._binop(other, self.group.sub)

    def neg(self):
        return Cochain(
            self.degree, self.size, self.group, [self.group.neg(a) for a in self.values]
        )

    def is_zero(self):
        z = self.group.zero()
        return all(v == z for v in self.values)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.size == other.size
            and self.group == other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.degree, self.size, self.group, self.values))

    def __repr__(self):
        return f"Cochain(degree={self.degree}, size={self.size}, values={list(self.values)})"


def _cochain_to_vec(c):
    return tuple(x for v in c.values for x in v)


def _vec_to_cochain(degree, size, group, vec):
    r = group.rank
    vals = [tuple(vec[k * r : (k + 1) * r]) for k in range(size ** degree)]
    return Cochain(degree, size, group, vals)


def delta(m, f, basepoint=0):
    """Coboundary: (delta f)(t) = sum h(f(u)) over terms h.(u) of d(t)."""
    X, A = m.base, m.A
    n = f.degree + 1
    vals = []
    for tup in _tuples(X.size, n):
        total = A.zero()
        for h, u in boundary(X, n, tup, basepoint).evaluate(m):
            total = A.add(total, h(f.value(*u)))
        vals.append(total)
    return Cochain(n, X.size, A, vals)


# ---------------------------------------------------------------------------
# constraint rows: each row is a dict flat_index -> AbHom, read as the
# condition  sum_k row[k](f_k) = 0  on a flat cochain vector.


def _merge(row, idx, h):
    row[idx] = row[idx].add(h) if idx in row else h


def _eta_rows(X, m, degree):
    # eta_{[t]}(f(t)) - f(rho(t_0), t_1, ..) = 0
    rows = []
    ident = AbHom.identity(m.A)
    for t in _tuples(X.size, degree):
        row = {}
        _merge(row, _flat(t, X.size), m.eta[bracket(X, t)])
        _merge(row, _flat((X.rho[t[0]],) + t[1:], X.size), ident.neg())
        rows.append(row)
    return rows


def _phi_rows(X, m, degree):
    # phi_w(f(t_1*t_i,..,t_{i-1}*t_i, rho(t_i), t_{i+1},..)) + f(t) = 0
    rows = []
    ident = AbHom.identity(m.A)
    for i in range(2, degree + 1):
        for t in _tuples(X.size, degree):
            omitted = t[: i - 1] + t[i:]
            w = (bracket(X, omitted), bracket(X, t[i - 1 :]))
            modified = (
                tuple(X.op(t[k], t[i - 1]) for k in range(i - 1))
                + (X.rho[t[i - 1]],)
                + t[i:]
            )
            row = {}
            _merge(row, _flat(modified, X.size), m.phi[w[0]][w[1]])
            _merge(row, _flat(t, X.size), ident)
            rows.append(row)
    return rows


def _degenerate_rows(X, m, degree):
    # f(.., x, x, ..) = 0 on tuples with an adjacent repeat
    rows = []
    ident = AbHom.identity(m.A)
    for t in _tuples(X.size, degree):
        if any(t[k] == t[k + 1] for k in range(degree - 1)):
            rows.append({_flat(t, X.size): ident})
    return rows


def _delta_rows(X, m, degree, basepoint=0):
    # rows expressing (delta f)(t) = 0 for every (degree+1)-tuple t
    rows = []
    for t in _tuples(X.size, degree + 1):
        row = {}
        for u, h in boundary(X, degree + 1, t, basepoint).collect(m).items():
            _merge(row, _flat(u, X.size), h)
        rows.append(row)
    return rows


def _membership_rows(X, m, degree, theory):
    if degree == 0:
        return []
    rows = _eta_rows(X, m, degree)
    rows += _phi_rows(X, m, degree)
    if theory == THEORY_SQ:
        rows += _degenerate_rows(X, m, degree)
    return rows


def _rows_to_hom(A, n_unknowns, rows):
    r = A.rank
    source = AbGroup(A.orders * n_unknowns)
    target = AbGroup(A.orders * len(rows))
    mat = [[0] * (r * n_unknowns) for _ in range(r * len(rows))]
    for k, row in enumerate(rows):
        for idx, h in row.items():
            for i in range(r):
                for j in range(r):
                    mat[k * r + i][idx * r + j] += h.matrix[i][j]
    return AbHom(source, target, mat)


class CochainSpace:
    """C^degree in the chosen theory, presented by generators."""

    __slots__ = ("module", "degree", "theory", "constraint", "gens")

    def __init__(self, module, degree, theory, constraint, gens):
        self.module = module
        self.degree = degree
        self.theory = theory
        self.constraint = constraint
        self.gens = gens

    def contains(self, c):
        vec = _cochain_to_vec(c)
        return self.constraint(vec) == self.constraint.target.zero()


def cochain_space(m, degree, theory=THEORY_SR):
    X, A = m.base, m.A
    _check_theory(X, theory)
    if degree < 0:
        raise ValueError("degree must be non-negative")
    n_unknowns = X.size ** degree
    rows = _membership_rows(X, m, degree, theory)
    constraint = _rows_to_hom(A, n_unknowns, rows)
    gens = [
        _vec_to_cochain(degree, X.size, A, v) for v in kernel(constraint)
    ]
    return CochainSpace(m, degree, theory, constraint, gens)


def delta1(m, lam):
    """Coboundary of a 1-cochain; lam must be eta-compatible."""
    if lam.degree != 1:
        raise ValueError("delta1 expects a 1-cochain")
    ok, diags = is_cochain(m, lam)
    if not ok:
        raise ValidationError("1-cochain is not eta-compatible", diags)
    out = delta(m, lam)
    memb = _membership_rows(m.base, m, 2, THEORY_SR)
    hom = _rows_to_hom(m.A, m.base.size ** 2, memb)
    if hom(_cochain_to_vec(out)) != hom.target.zero():
        raise AssertionError("coboundary left C^2; module axioms are inconsistent")
    return out


def delta0(m, f, basepoint=0):
    """Coboundary of a 0-cochain: x |-> -psi_{x invop p, p}(f(p))."""
    if f.degree != 0:
        raise ValueError("delta0 expects a 0-cochain")
    return delta(m, f, basepoint)


def is_cochain(m, c):
    """Membership of c in C^degree (eta/phi compatibility), with witnesses."""
    X, A = m.base, m.A
    found = {}
    zero = A.zero()
    for t in _tuples(X.size, c.degree):
        lhs = m.eta[bracket(X, t)](c.value(*t))
        rhs = c.value(*((X.rho[t[0]],) + t[1:]))
        if lhs != rhs:
            found.setdefault("eta-twist", []).append(t)
    for i in range(2, c.degree + 1):
        for t in _tuples(X.size, c.degree):
            omitted = t[: i - 1] + t[i:]
            w = (bracket(X, omitted), bracket(X, t[i - 1 :]))
            modified = (
                tuple(X.op(t[k], t[i - 1]) for k in range(i - 1))
                + (X.rho[t[i - 1]],)
                + t[i:]
            )
            if A.add(m.phi[w[0]][w[1]](c.value(*modified)), c.value(*t)) != zero:
                found.setdefault("phi-twist", []).append((i,) + t)
    diags = [Diagnostic(k, v) for k, v in found.items()]
    return (not diags, diags)


def is_cocycle(m, c, theory=THEORY_SR, basepoint=0):
    """Full cocycle test in the chosen theory, with labeled witnesses."""
    X, A = m.base, m.A
    _check_theory(X, theory)
    ok, diags = is_cochain(m, c)
    diags = list(diags)
    if theory == THEORY_SQ:
        bad = [
            t
            for t in _tuples(X.size, c.degree)
            if any(t[k] == t[k + 1] for k in range(c.degree - 1))
            and c.value(*t) != A.zero()
        ]
        if bad:
            diags.append(Diagnostic("degenerate", bad))
    d = delta(m, c, basepoint)
    bad = [t for t in _tuples(X.size, d.degree) if d.value(*t) != A.zero()]
    if bad:
        diags.append(Diagnostic("cocycle", bad))
    return (not diags, diags)


class CohomologyPresentation:
    """Z, B and H = Z/B in one degree, with projection to class vectors."""

    __slots__ = (
        "module",
        "degree",
        "theory",
        "basepoint",
        "group",
        "cocycle_gens",
        "coboundary_gens",
        "_ambient",
        "_sub",
    )

    def __init__(self, module, degree, theory, basepoint, z_gens, b_gens):
        X, A = module.base, module.A
        self.module = module
        self.degree = degree
        self.theory = theory
        self.basepoint = basepoint
        self._ambient = AbGroup(A.orders * (X.size ** degree))
        z_vecs = [_cochain_to_vec(c) for c in z_gens]
        b_vecs = [_cochain_to_vec(c) for c in b_gens]
        self._sub = Subquotient(self._ambient, z_vecs, b_vecs)
        self.group = self._sub.group
        self.cocycle_gens = z_gens
        self.coboundary_gens = b_gens

    def project(self, c):
        """Cohomology class of a cocycle as a vector in `group`."""
        vec = _cochain_to_vec(c)
        if not self._sub.contains(vec):
            raise NotACocycle("cochain is not a cocycle in this theory")
        return self._sub.project(vec)

    def section(self, class_vector):
        return _vec_to_cochain(
            self.degree, self.module.base.size, self.module.A, self._sub.section(class_vector)
        )

    def are_cohomologous(self, c1, c2):
        return self.project(c1) == self.project(c2)

    def cocycle_group(self):
        """Z^degree as an abstract group."""
        z = [_cochain_to_vec(c) for c in self.cocycle_gens]
        return Subquotient(self._ambient, z, []).group

    def coboundary_group(self):
        """B^degree as an abstract group."""
        b = [_cochain_to_vec(c) for c in self.coboundary_gens]
        return Subquotient(self._ambient, b, []).group

    def __repr__(self):
        return (
            f"CohomologyPresentation(degree={self.degree}, theory={self.theory!r}, "
            f"group={self.group!r})"
        )


def cohomology_presentation(m, degree, theory=THEORY_SR, basepoint=0):
    """Cocycles, coboundaries and their quotient in degree 1 or 2.

    Degree 2: Z^2 = ker(cocycle rows stacked over membership rows),
    B^2 = delta1(C^1).  Degree 1: Z^1 = ker(membership rows stacked over
    coboundary rows), B^1 = delta0(C^0); only this degree uses basepoint.
    """
    X, A = m.base, m.A
    _check_theory(X, theory)
    if degree not in (1, 2):
        raise ValueError("only degrees 1 and 2 are presented")
    n_unknowns = X.size ** degree
    if degree == 2:
        rows = _delta_rows(X, m, 2) + _membership_rows(X, m, 2, theory)
        z_gens = [
            _vec_to_cochain(2, X.size, A, v)
            for v in kernel(_rows_to_hom(A, n_unknowns, rows))
        ]
        b_gens = [delta1(m, g) for g in cochain_space(m, 1, theory).gens]
    else:
        rows = _membership_rows(X, m, 1, theory) + _delta_rows(X, m, 1, basepoint)
        z_gens = [
            _vec_to_cochain(1, X.size, A, v)
            for v in kernel(_rows_to_hom(A, n_unknowns, rows))
        ]
        b_gens = [
            delta0(m, g, basepoint) for g in cochain_space(m, 0, theory).gens
        ]
    return CohomologyPresentation(m, degree, theory, basepoint, z_gens, b_gens)


def coboundary_witness(m, c, theory=THEORY_SR, basepoint=0):
    """A cochain tau with delta(tau) = c, or None; c must be a cocycle.

    Degree-2 input: tau is an eta-compatible 1-cochain (the witness system
    stacks the coboundary rows over the membership rows).  Degree-1 input:
    tau is a 0-cochain for the given basepoint.  The returned witness is
    the canonical (lexicographically least) solution.
    """
    X, A = m.base, m.A
    ok, diags = is_cocycle(m, c, theory, basepoint)
    if not ok:
        raise NotACocycle(
            "input is not a cocycle: " + "; ".join(d.axiom for d in diags)
        )
    low = c.degree - 1
    n_low = X.size ** low
    # unknown tau |-> (delta tau, membership constraints on tau)
    drows = _delta_rows(X, m, low, basepoint)
    mrows = _membership_rows(X, m, low, theory)
    hom = _rows_to_hom(A, n_low, drows + mrows)
    target_vec = list(_cochain_to_vec(c))
    target_vec += [0] * (A.rank * len(mrows))
    x = solve(hom, tuple(target_vec))
    if x is None:
        return None
    tau = _vec_to_cochain(low, X.size, A, x)
    check = delta(m, tau, basepoint)
    if check != c:
        raise AssertionError("witness verification failed")
    return tau
