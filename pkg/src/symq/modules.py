"""(X, rho)-modules: an abelian group A acted on by pair-indexed maps.

The structure maps are invertible phi_{x,y}, arbitrary psi_{x,y} and eta_x
in End(A), subject to axioms M1-M8 (M9 additionally on quandles):

    M1  phi_{x*y,z} phi_{x,y} = phi_{x*z,y*z} phi_{x,z}
    M2  phi_{x*y,z} psi_{x,y} = psi_{x*z,y*z} phi_{y,z}
    M3  eta_{rho(x)} eta_x = id
    M4  eta_{x*y} phi_{x,y} = phi_{rho(x),y} eta_x
    M5  psi_{rho(x),y} = eta_{x*y} psi_{x,y}
    M6  phi_{x inv* y,y} phi_{x,rho(y)} = id
    M7  psi_{x*y,z} = phi_{x*z,y*z} psi_{x,z} + psi_{x*z,y*z} psi_{y,z}
    M8  phi_{x inv* y,y} psi_{x,rho(y)} eta_y = -psi_{x*rho(y),y}
    M9  phi_{x,x} + psi_{x,x} = id        (quandles only)
"""

import random

from .abelian import AbHom
from .errors import Diagnostic, ValidationError
from .racks import QUANDLE

# all-pairs checking is exhaustive up to this carrier size, sampled above
EXHAUSTIVE_SIZE = 16
SAMPLE_TRIPLES = 10 ** 4


class RackModule:
    """Module data over a symmetric rack: dense tables of AbHoms on A."""

    __slots__ = ("base", "A", "phi", "psi", "eta", "constant")

    def __init__(self, base, A, phi, psi, eta):
        n = base.size
        phi = tuple(tuple(row) for row in phi)
        psi = tuple(tuple(row) for row in psi)
        eta = tuple(eta)
        if len(phi) != n or any(len(r) != n for r in phi):
            raise ValueError("phi table must be size x size")
        if len(psi) != n or any(len(r) != n for r in psi):
            raise ValueError("psi table must be size x size")
        if len(eta) != n:
            raise ValueError("eta table must have one entry per element")
        for table in (phi, psi):
            for row in table:
                for h in row:
                    if h.source != A or h.target != A:
                        raise ValueError("structure maps must be endomorphisms of A")
        for h in eta:
            if h.source != A or h.target != A:
                raise ValueError("structure maps must be endomorphisms of A")
        self.base = base
        self.A = A
        self.phi = phi
        self.psi = psi
        self.eta = eta
        first_phi, first_psi, first_eta = phi[0][0], psi[0][0], eta[0]
        self.constant = (
            all(h == first_phi for row in phi for h in row)
            and all(h == first_psi for row in psi for h in row)
            and all(h == first_eta for h in eta)
        )

    def __repr__(self):
        return (
            f"RackModule(base_size={self.base.size}, A={self.A!r}, "
            f"constant={self.constant})"
        )


class ModuleCheck:
    """Validation outcome: diagnostics plus whether the scan was exhaustive."""

    __slots__ = ("diagnostics", "probabilistic")

    def __init__(self, diagnostics, probabilistic):
        self.diagnostics = diagnostics
        self.probabilistic = probabilistic

    @property
    def ok(self):
        return not self.diagnostics

    def __bool__(self):
        return self.ok

    def __repr__(self):
        mode = "sampled" if self.probabilistic else "exhaustive"
        return f"ModuleCheck(ok={self.ok}, mode={mode}, diagnostics={self.diagnostics})"


def validate_module(m):
    """Check M1-M8 (and M9 on quandles) plus invertibility of every phi.

    Exhaustive over all triples for carriers up to EXHAUSTIVE_SIZE; above
    that a fixed-seed sample of triples is used and the result is marked
    probabilistic.  The constant flag never short-circuits any axiom.
    """
    X = m.base
    n = X.size
    rho = X.rho
    op = X.op
    linv = X.left_inverse_op
    ident = AbHom.identity(m.A)
    found = {}

    def hit(axiom, witness):
        found.setdefault(axiom, []).append(witness)

    non_invertible = [
        (x, y)
        for x in range(n)
        for y in range(n)
        if m.phi[x][y].inverse() is None
    ]
    if non_invertible:
        for w in non_invertible:
            hit("phi-invertible", w)

    exhaustive = n <= EXHAUSTIVE_SIZE
    if exhaustive:
        triples = (
            (x, y, z) for x in range(n) for y in range(n) for z in range(n)
        )
        pairs = ((x, y) for x in range(n) for y in range(n))
    else:
        rng = random.Random(0)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(SAMPLE_TRIPLES)
        )
        pairs = (
            (rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLE_TRIPLES)
        )

    for x, y, z in triples:
        xy, xz, yz = op(x, y), op(x, z), op(y, z)
        if m.phi[xy][z].compose(m.phi[x][y]) != m.phi[xz][yz].compose(m.phi[x][z]):
            hit("M1", (x, y, z))
        if m.phi[xy][z].compose(m.psi[x][y]) != m.psi[xz][yz].compose(m.phi[y][z]):
            hit("M2", (x, y, z))
        if m.psi[xy][z] != m.phi[xz][yz].compose(m.psi[x][z]).add(
            m.psi[xz][yz].compose(m.psi[y][z])
        ):
            hit("M7", (x, y, z))

    for x, y in pairs:
        xy = op(x, y)
        if m.eta[xy].compose(m.phi[x][y]) != m.phi[rho[x]][y].compose(m.eta[x]):
            hit("M4", (x, y))
        if m.psi[rho[x]][y] != m.eta[xy].compose(m.psi[x][y]):
            hit("M5", (x, y))
        if not m.phi[linv(x, y)][y].compose(m.phi[x][rho[y]]).is_identity():
            hit("M6", (x, y))
        lhs = m.phi[linv(x, y)][y].compose(m.psi[x][rho[y]]).compose(m.eta[y])
        if lhs != m.psi[op(x, rho[y])][y].neg():
            hit("M8", (x, y))

    for x in range(n):
        if not m.eta[rho[x]].compose(m.eta[x]).is_identity():
            hit("M3", (x,))
        if X.kind == QUANDLE and m.phi[x][x].add(m.psi[x][x]) != ident:
            hit("M9", (x,))

    order = ["phi-invertible", "M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8", "M9"]
    diags = [Diagnostic(a, found[a]) for a in order if a in found]
    return ModuleCheck(diags, probabilistic=not exhaustive)


def constant_module(base, A, phi_matrix, psi_matrix, eta_matrix):
    """Module with a single (phi, psi, eta) triple repeated everywhere."""
    n = base.size
    phi = AbHom(A, A, phi_matrix)
    psi = AbHom(A, A, psi_matrix)
    eta = AbHom(A, A, eta_matrix)
    m = RackModule(
        base,
        A,
        [[phi] * n for _ in range(n)],
        [[psi] * n for _ in range(n)],
        [eta] * n,
    )
    check = validate_module(m)
    if not check.ok:
        raise ValidationError("constant maps do not form a module", check.diagnostics)
    return m


def dihedral_kamada_module(base, A):
    """The constant module (phi, psi, eta) = (id, 0, -id)."""
    r = A.rank
    ident = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    zero = [[0] * r for _ in range(r)]
    neg = [[-1 if i == j else 0 for j in range(r)] for i in range(r)]
    return constant_module(base, A, ident, zero, neg)
