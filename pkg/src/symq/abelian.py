"""Exact linear algebra over finitely generated abelian groups.

A group is a direct sum of cyclic groups, given by a tuple of non-negative
orders where 0 stands for an infinite cyclic (Z) summand.  Elements are
integer vectors reduced componentwise modulo the orders.  Homomorphisms are
integer matrices acting on the left.  Everything is arbitrary-precision;
kernels, images, solving and subquotients go through Smith normal form.

    >>> G = AbGroup([4])
    >>> f = AbHom(G, G, [[2]])
    >>> kernel(f)
    [(2,)]
    >>> solve(f, (2,))
    (1,)
    >>> str(quotient(AbGroup([0]), [(1,)], [(2,)]).group)
    'Z2'
"""

from fractions import Fraction

from .errors import InfiniteGroupUnsupported, NotASubgroup, SizeBoundExceeded
from . import limits


def _egcd(a, b):
    # returns (g, p, q) with p*a + q*b = g = gcd(a, b) >= 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    """Product of integer matrices given as lists of rows."""
    if not A:
        return []
    inner = len(A[0])
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        out.append([sum(row[k] * B[k][j] for k in range(inner)) for j in range(cols)])
    return out


def mat_vec(A, v):
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in A)


class SmithDecomposition:
    """U @ M @ V = D with D diagonal under a divisibility chain.

    U and V are unimodular; Uinv and Vinv are their exact integer inverses.
    """

    __slots__ = ("U", "D", "V", "Uinv", "Vinv")

    def __init__(self, U, D, V, Uinv, Vinv):
        self.U = U
        self.D = D
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv

    def diagonal(self):
        m = len(self.D)
        n = len(self.D[0]) if m else 0
        return [self.D[i][i] for i in range(min(m, n))]

    def rank(self):
        return sum(1 for d in self.diagonal() if d != 0)


def smith_normal_form(M):
    """Smith normal form of an integer matrix (list of rows, possibly empty).

    >>> smith_normal_form([[2, 0], [0, 3]]).diagonal()
    [1, 6]
    """
    m = len(M)
    n = len(M[0]) if m else 0
    D = [[int(x) for x in row] for row in M]
    U, Uinv = _identity(m), _identity(m)
    V, Vinv = _identity(n), _identity(n)

    def row_op(i, j, p, q, u, v):
        # rows i,j <- (p*ri + q*rj, u*ri + v*rj); the 2x2 block has det 1
        for mat in (D, U):
            ri, rj = mat[i], mat[j]
            mat[i] = [p * a + q * b for a, b in zip(ri, rj)]
            mat[j] = [u * a + v * b for a, b in zip(ri, rj)]
        # Uinv <- Uinv * block^{-1}, i.e. new columns (v*ci - u*cj, -q*ci + p*cj)
        for row in Uinv:
            a, b = row[i], row[j]
            row[i] = a * v - b * u
            row[j] = -a * q + b * p

    def col_op(i, j, p, q, u, v):
        # cols i,j <- (p*ci + q*cj, u*ci + v*cj); det(p*v - q*u) = 1
        for row in D:
            a, b = row[i], row[j]
            row[i] = p * a + q * b
            row[j] = u * a + v * b
        for row in V:
            a, b = row[i], row[j]
            row[i] = p * a + q * b
            row[j] = u * a + v * b
        ri, rj = Vinv[i], Vinv[j]
        Vinv[i] = [v * a - u * b for a, b in zip(ri, rj)]
        Vinv[j] = [-q * a + p * b for a, b in zip(ri, rj)]

    def swap_rows(i, j):
        if i == j:
            return
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    t = 0
    while t < min(m, n):
        # deterministic pivot: least |value|, ties by position
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v != 0 and (piv is None or abs(v) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            for i in range(t + 1, m):
                b = D[i][t]
                if b == 0:
                    continue
                a = D[t][t]
                if b % a == 0:
                    row_op(t, i, 1, 0, -(b // a), 1)
                else:
                    g, p, q = _egcd(a, b)
                    row_op(t, i, p, q, -(b // g), a // g)
            for j in range(t + 1, n):
                b = D[t][j]
                if b == 0:
                    continue
                a = D[t][t]
                if b % a == 0:
                    col_op(t, j, 1, 0, -(b // a), 1)
                else:
                    g, p, q = _egcd(a, b)
                    col_op(t, j, p, q, -(b // g), a // g)
            if all(D[i][t] == 0 for i in range(t + 1, m)) and all(
                D[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        t += 1

    for i in range(min(m, n)):
        if D[i][i] < 0:
            negate_row(i)

    # enforce the divisibility chain d_i | d_j for i < j (zeros sort last)
    r = min(m, n)
    changed = True
    while changed:
        changed = False
        for i in range(r):
            for j in range(i + 1, r):
                a, b = D[i][i], D[j][j]
                if b == 0 and a == 0:
                    continue
                if a != 0 and b % a == 0:
                    continue
                changed = True
                col_op(i, j, 1, 1, 0, 1)  # col_i += col_j
                g, p, q = _egcd(D[i][i], D[j][i])
                row_op(i, j, p, q, -(D[j][i] // g), D[i][i] // g)
                if D[i][j] != 0:
                    col_op(i, j, 1, 0, -(D[i][j] // D[i][i]), 1)
                if D[j][j] < 0:
                    negate_row(j)

    if mat_mul(mat_mul(U, [[int(x) for x in row] for row in M]), V) != D:
        raise AssertionError("smith normal form internal check failed")
    return SmithDecomposition(U, D, V, Uinv, Vinv)


def integer_kernel(M):
    """Basis (list of column vectors) of the integer kernel of M."""
    m = len(M)
    n = len(M[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    snf = smith_normal_form(M)
    diag = snf.diagonal()
    basis = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            basis.append(tuple(snf.V[i][j] for i in range(n)))
    return basis


class AbGroup:
    """Finitely generated abelian group as a tuple of cyclic orders (0 = Z).

    >>> A = AbGroup([2, 4])
    >>> A.add((1, 3), (1, 2))
    (0, 1)
    >>> str(A)
    'Z2 x Z4'
    """

    __slots__ = ("orders",)

    def __init__(self, orders):
        orders = tuple(int(d) for d in orders)
        if any(d < 0 for d in orders):
            raise ValueError("orders must be non-negative")
        self.orders = orders

    @property
    def rank(self):
        return len(self.orders)

    def reduce(self, v):
        if len(v) != len(self.orders):
            raise ValueError("element length mismatch")
        return tuple(int(x) % d if d else int(x) for x, d in zip(v, self.orders))

    def zero(self):
        return (0,) * len(self.orders)

    def add(self, u, v):
        return self.reduce(tuple(a + b for a, b in zip(u, v)))

    def neg(self, u):
        return self.reduce(tuple(-a for a in u))

    def sub(self, u, v):
        return self.reduce(tuple(a - b for a, b in zip(u, v)))

    def scale(self, k, u):
        return self.reduce(tuple(k * a for a in u))

    def is_finite(self):
        return all(d != 0 for d in self.orders)

    def order(self):
        if not self.is_finite():
            raise InfiniteGroupUnsupported("group has an infinite cyclic summand")
        n = 1
        for d in self.orders:
            n *= d
        return n

    def elements(self):
        """All elements in lexicographic order; finite groups only."""
        if not self.is_finite():
            raise InfiniteGroupUnsupported("cannot enumerate an infinite group")
        out = [()]
        for d in self.orders:
            out = [e + (x,) for e in out for x in range(d)]
        return [tuple(e) for e in out]

    def element_index(self, v):
        # mixed-radix index matching elements() order
        idx = 0
        for x, d in zip(v, self.orders):
            idx = idx * d + x
        return idx

    def __eq__(self, other):
        return isinstance(other, AbGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return f"AbGroup({list(self.orders)})"

    def __str__(self):
        parts = []
        for d in self.orders:
            if d == 1:
                continue
            parts.append("Z" if d == 0 else f"Z{d}")
        return " x ".join(parts) if parts else "0"


def direct_power(A, n):
    """A^n with coordinates blocked per copy."""
    return AbGroup(A.orders * n)


class AbHom:
    """Homomorphism between AbGroups as an integer matrix (target x source).

    Entries are kept canonical modulo the target orders; well-definedness
    (order of each source generator killed in the target) is checked on
    construction.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        rows = [tuple(int(x) for x in row) for row in matrix]
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError("matrix shape mismatch")
        canon = []
        for i, row in enumerate(rows):
            d = target.orders[i]
            canon.append(tuple(x % d if d else x for x in row))
        for j, dj in enumerate(source.orders):
            if dj == 0:
                continue
            for i, di in enumerate(target.orders):
                v = dj * canon[i][j]
                if (v % di if di else v) != 0:
                    raise ValueError(
                        f"not a well-defined homomorphism at entry ({i},{j})"
                    )
        self.source = source
        self.target = target
        self.matrix = tuple(canon)

    @classmethod
    def identity(cls, group):
        n = group.rank
        return cls(group, group, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, [[0] * source.rank for _ in range(target.rank)])

    @classmethod
    def scalar(cls, group, k):
        n = group.rank
        return cls(group, group, [[k if i == j else 0 for j in range(n)] for i in range(n)])

    def __call__(self, v):
        v = self.source.reduce(v)
        return self.target.reduce(mat_vec(self.matrix, v))

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        return AbHom(other.source, self.target, mat_mul([list(r) for r in self.matrix],
                                                        [list(r) for r in other.matrix]))

    def add(self, other):
        return AbHom(self.source, self.target,
                     [[a + b for a, b in zip(r1, r2)]
                      for r1, r2 in zip(self.matrix, other.matrix)])

    def neg(self):
        return AbHom(self.source, self.target, [[-a for a in r] for r in self.matrix])

    def sub(self, other):
        return self.add(other.neg())

    def is_zero(self):
        return all(all(x == 0 for x in row) for row in self.matrix)

    def is_identity(self):
        return self.source == self.target and self == AbHom.identity(self.source)

    def inverse(self):
        """Two-sided inverse hom, or None if this is not an isomorphism."""
        cols = []
        n = self.target.rank
        for i in range(n):
            e = self.target.reduce(tuple(1 if k == i else 0 for k in range(n)))
            x = solve(self, e)
            if x is None:
                return None
            cols.append(x)
        try:
            g = AbHom(self.target, self.source,
                      [[cols[j][i] for j in range(n)] for i in range(self.source.rank)])
        except ValueError:
            return None
        if g.compose(self).is_identity() and self.compose(g).is_identity():
            return g
        return None

    def is_invertible(self):
        return self.inverse() is not None

    def __eq__(self, other):
        return (
            isinstance(other, AbHom)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"AbHom({self.source!r} -> {self.target!r}, {[list(r) for r in self.matrix]})"


def _torsion_columns(group):
    # columns d_i * e_i spanning the relation lattice of the group
    cols = []
    n = group.rank
    for i, d in enumerate(group.orders):
        if d != 0:
            cols.append(tuple(d if k == i else 0 for k in range(n)))
    return cols


def _stacked_matrix(M_cols_source, group):
    # [M | torsion columns of group] as a list of rows; M given by columns
    tor = _torsion_columns(group)
    all_cols = list(M_cols_source) + tor
    n = group.rank
    return [[col[i] for col in all_cols] for i in range(n)], len(M_cols_source)


def _lattice_solve(rows, b):
    # one integer solution x of rows @ x = b, or None
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0:
        return (0,) * n
    snf = smith_normal_form(rows)
    y = mat_vec(snf.U, b)
    diag = snf.diagonal()
    xprime = [0] * n
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % d != 0:
                return None
            if i < n:
                xprime[i] = y[i] // d
    return mat_vec(snf.V, xprime)


def _orient(group, v):
    # fix the sign so the first nonzero free coordinate is positive
    for x, d in zip(v, group.orders):
        if d == 0 and x:
            return group.neg(v) if x < 0 else v
    return v


def kernel(f):
    """Generators of ker f as canonical elements of f.source.

    The list may be empty (trivial kernel); zero vectors are dropped.
    """
    if f.target.rank == 0:
        # map to the trivial group: kernel is the whole source
        gens = []
        for i in range(f.source.rank):
            g = f.source.reduce(tuple(1 if k == i else 0
                                      for k in range(f.source.rank)))
            if g != f.source.zero():
                gens.append(g)
        return gens
    cols = [tuple(f.matrix[i][j] for i in range(f.target.rank))
            for j in range(f.source.rank)]
    rows, nsrc = _stacked_matrix(cols, f.target)
    gens = []
    seen = set()
    for v in integer_kernel(rows):
        g = _orient(f.source, f.source.reduce(v[:nsrc] if nsrc else ()))
        if g != f.source.zero() and g not in seen:
            seen.add(g)
            gens.append(g)
    # source torsion relations project to zero, so nothing else is needed
    return gens


def image(f):
    """Generators of im f: the columns of the matrix, reduced in the target."""
    gens = []
    seen = set()
    for j in range(f.source.rank):
        g = f.target.reduce(tuple(f.matrix[i][j] for i in range(f.target.rank)))
        if g != f.target.zero() and g not in seen:
            seen.add(g)
            gens.append(g)
    return gens


def subgroup_elements(group, gens, cap=None):
    """All elements of the subgroup generated by gens, or None if more than cap.

    Closure under addition of generators: a finite closed subset of a group
    already contains negatives, and an infinite subgroup hits the cap.
    """
    cap = limits.resolve(cap, limits.SUBGROUP_ENUM)
    zero = group.zero()
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                s = group.add(e, g)
                if s not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen)


def solve(f, b):
    """Some x with f(x) = b, or None; deterministic and canonical.

    When the kernel is small enough to enumerate, the lexicographically
    least solution is returned.
    """
    b = f.target.reduce(b)
    if f.target.rank == 0:
        return f.source.zero()
    cols = [tuple(f.matrix[i][j] for i in range(f.target.rank))
            for j in range(f.source.rank)]
    rows, nsrc = _stacked_matrix(cols, f.target)
    x = _lattice_solve(rows, b)
    if x is None:
        return None
    v = f.source.reduce(x[:nsrc] if nsrc else ())
    if f(v) != b:
        raise AssertionError("solve internal check failed")
    ker = kernel(f)
    if ker:
        els = subgroup_elements(f.source, ker, cap=4096)
        if els is not None:
            v = min(f.source.add(v, k) for k in els)
    return v


class Subquotient:
    """A subgroup-modulo-subgroup of an ambient AbGroup, presented canonically.

    project sends an ambient element of the subgroup to its class vector in
    the quotient group; section picks a representative; project(section(w)) == w.
    """

    __slots__ = ("ambient", "sub_gens", "by_gens", "group", "_orders_full",
                 "_kept", "_U", "_Uinv", "_memb_rows", "_nsub")

    def __init__(self, ambient, sub_gens, by_gens):
        self.ambient = ambient
        self.sub_gens = [ambient.reduce(g) for g in sub_gens]
        self.by_gens = [ambient.reduce(g) for g in by_gens]
        k = len(self.sub_gens)
        memb_rows, nsub = _stacked_matrix(self.sub_gens, ambient)
        self._memb_rows = memb_rows
        self._nsub = nsub
        # coordinates of each by-generator in terms of the sub-generators
        by_coords = []
        for b in self.by_gens:
            u = _lattice_solve(memb_rows, b)
            if u is None:
                raise NotASubgroup("a by-generator is outside the subgroup")
            by_coords.append(tuple(u[:k]))
        # relations among the sub-generators inside the ambient group
        relations = [v[:k] for v in integer_kernel(memb_rows)] if k else []
        rel_cols = relations + by_coords
        rel_matrix = [[col[i] for col in rel_cols] for i in range(k)]
        if k == 0:
            self.group = AbGroup(())
            self._orders_full = ()
            self._kept = ()
            self._U = []
            self._Uinv = []
            return
        snf = smith_normal_form(rel_matrix) if rel_cols else None
        if snf is None:
            orders = [0] * k
            U = _identity(k)
            Uinv = _identity(k)
        else:
            diag = snf.diagonal()
            orders = [diag[i] if i < len(diag) else 0 for i in range(k)]
            U, Uinv = snf.U, snf.Uinv
        self._orders_full = tuple(orders)
        self._kept = tuple(i for i, d in enumerate(orders) if d != 1)
        self.group = AbGroup(tuple(orders[i] for i in self._kept))
        self._U = U
        self._Uinv = Uinv

    def contains(self, element):
        """Membership of an ambient element in the subgroup (not the quotient)."""
        element = self.ambient.reduce(element)
        return _lattice_solve(self._memb_rows, element) is not None

    def project(self, element):
        """Class of a subgroup element in the quotient group."""
        element = self.ambient.reduce(element)
        u = _lattice_solve(self._memb_rows, element)
        if u is None:
            raise NotASubgroup("element is outside the subgroup")
        k = self._nsub
        w = mat_vec(self._U, u[:k])
        w = tuple(
            x % d if d else x for x, d in zip(w, self._orders_full)
        )
        return self.group.reduce(tuple(w[i] for i in self._kept))

    def section(self, class_vector):
        """A representative ambient element of the given class."""
        class_vector = self.group.reduce(class_vector)
        k = self._nsub
        w_full = [0] * k
        for pos, i in enumerate(self._kept):
            w_full[i] = class_vector[pos]
        u = mat_vec(self._Uinv, w_full)
        total = self.ambient.zero()
        for coeff, g in zip(u, self.sub_gens):
            total = self.ambient.add(total, self.ambient.scale(coeff, g))
        return total

    def is_zero_class(self, element):
        return self.project(element) == self.group.zero()


def quotient(ambient, sub_generators, by_generators):
    """Subquotient <sub>/<by> of the ambient group.

    >>> str(quotient(AbGroup([0, 0]), [(1, 0), (0, 1)], [(2, 0), (0, 2)]).group)
    'Z2 x Z2'
    """
    return Subquotient(ambient, sub_generators, by_generators)


def hom_inverse_exists(f):
    return f.inverse() is not None


def det(M):
    """Determinant of a square integer matrix (exact, fraction-free)."""
    n = len(M)
    if n == 0:
        return 1
    A = [[Fraction(x) for x in row] for row in M]
    sign = 1
    for i in range(n):
        piv = next((r for r in range(i, n) if A[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            A[i], A[piv] = A[piv], A[i]
            sign = -sign
        for r in range(i + 1, n):
            factor = A[r][i] / A[i][i]
            A[r] = [a - factor * b for a, b in zip(A[r], A[i])]
    out = Fraction(sign)
    for i in range(n):
        out *= A[i][i]
    if out.denominator != 1:
        raise AssertionError("determinant of an integer matrix must be integral")
    return int(out)
