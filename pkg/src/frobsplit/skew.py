"""The skew field K = F_q[F] tensored with F_p(F^ell) over F_p[F^ell],
matrices over it, division-ring Gaussian elimination, the tilde embedding
into M_{n*ell}(F_q(F^ell)), minimal polynomials over the center, and
constructive inversion via central multipliers.
"""

from .fields import (CPoly, RatFun, char_poly, kernel_basis, prime_coords,
                     solve_linear)
from .ore import OrePoly


class SingularMatrixError(ValueError):
    pass


class SkewElem:
    """Element of K: sum_{i<ell} parts[i](s) * F^i with parts in F_q(s).

    Multiplication uses F * c(s) = phi(c)(s) * F, where phi applies the
    coefficientwise Frobenius and s = F^ell is central.
    """

    __slots__ = ("spec", "parts")

    def __init__(self, spec, parts):
        self.spec = spec
        self.parts = tuple(parts)
        assert len(self.parts) == spec.ell

    @classmethod
    def zero(cls, spec):
        return cls(spec, (RatFun.zero(spec),) * spec.ell)

    @classmethod
    def one(cls, spec):
        return cls(spec, (RatFun.one(spec),)
                   + (RatFun.zero(spec),) * (spec.ell - 1))

    @classmethod
    def from_ore(cls, P):
        return cls(P.spec, tuple(RatFun(a) for a in P.center_decompose()))

    @classmethod
    def from_ratfun(cls, rf):
        return cls(rf.spec, (rf,) + (RatFun.zero(rf.spec),) * (rf.spec.ell - 1))

    @classmethod
    def F(cls, spec, power=1):
        q, r = divmod(power, spec.ell)
        parts = [RatFun.zero(spec)] * spec.ell
        parts[r] = RatFun(CPoly.monomial(spec, spec.one(), q), _canonical=True)
        return cls(spec, parts)

    def is_zero(self):
        return all(a.is_zero() for a in self.parts)

    def is_one(self):
        return self.parts[0].is_one() and all(a.is_zero() for a in self.parts[1:])

    def __add__(self, other):
        return SkewElem(self.spec, tuple(a + b for a, b in
                                         zip(self.parts, other.parts)))

    def __sub__(self, other):
        return SkewElem(self.spec, tuple(a - b for a, b in
                                         zip(self.parts, other.parts)))

    def __neg__(self):
        return SkewElem(self.spec, tuple(-a for a in self.parts))

    def __mul__(self, other):
        if isinstance(other, RatFun):
            other = SkewElem.from_ratfun(other)
        spec = self.spec
        ell = spec.ell
        out = [RatFun.zero(spec)] * ell
        for i, a in enumerate(self.parts):
            if a.is_zero():
                continue
            for j, b in enumerate(other.parts):
                if b.is_zero():
                    continue
                k, r = divmod(i + j, ell)
                term = a * b.frobenius(i)
                if k:
                    term = term * RatFun(CPoly.monomial(spec, spec.one(), k),
                                         _canonical=True)
                out[r] = out[r] + term
        return SkewElem(spec, out)

    def __rmul__(self, other):
        if isinstance(other, RatFun):
            return SkewElem.from_ratfun(other) * self
        return NotImplemented

    def scale_central(self, rf):
        """Multiply by a central rational function (commutes)."""
        return SkewElem(self.spec, tuple(a * rf for a in self.parts))

    def clear_central(self):
        """Returns (c, P) with c in F_p[s] nonzero, P an OrePoly and
        c(F^ell) * self = P."""
        spec = self.spec
        c = CPoly.one(spec)
        for a in self.parts:
            if not a.den.is_one():
                c = c.lcm(a.den.norm_to_prime())
        cleared = []
        for a in self.parts:
            num = a.num * c.exact_div(a.den)
            cleared.append(num)
        return c, OrePoly.from_parts(spec, cleared)

    def to_ore(self):
        """Convert to OrePoly; requires all parts polynomial."""
        if not all(a.den.is_one() for a in self.parts):
            raise ValueError("element has nontrivial central denominator")
        return OrePoly.from_parts(self.spec, [a.num for a in self.parts])

    def inverse(self):
        """Two-sided inverse in the skew field K."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        c, P = self.clear_central()
        Q, gamma = central_multiplier(P)
        # Q * P = gamma(F^ell)  =>  inverse = (c / gamma)(s) * Q
        scale = RatFun(c) / RatFun(gamma)
        return SkewElem.from_ore(Q).scale_central(scale)

    def __eq__(self, other):
        return (isinstance(other, SkewElem) and self.spec == other.spec
                and self.parts == other.parts)

    def __hash__(self):
        return hash((self.spec, self.parts))

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.parts):
            if a.is_zero():
                continue
            f = "" if i == 0 else ("F" if i == 1 else "F^%d" % i)
            terms.append("(%s)%s" % (repr(a), ("*" + f) if f else ""))
        return " + ".join(terms) if terms else "0"


class SkewMatrix:
    """Rectangular matrix over the skew field K."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec, entries):
        self.spec = spec
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        assert all(len(r) == self.cols for r in self.entries)

    @classmethod
    def identity(cls, spec, n):
        z = SkewElem.zero(spec)
        o = SkewElem.one(spec)
        return cls(spec, [[o if i == j else z for j in range(n)]
                          for i in range(n)])

    @classmethod
    def zero(cls, spec, rows, cols):
        z = SkewElem.zero(spec)
        return cls(spec, [[z] * cols for _ in range(rows)])

    @classmethod
    def from_ore(cls, spec, ore_entries):
        return cls(spec, [[SkewElem.from_ore(e) for e in row]
                          for row in ore_entries])

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __add__(self, other):
        return SkewMatrix(self.spec,
                          [[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return SkewMatrix(self.spec,
                          [[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return SkewMatrix(self.spec,
                          [[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, SkewElem):
            return SkewMatrix(self.spec, [[a * other for a in row]
                                          for row in self.entries])
        assert self.cols == other.rows
        z = SkewElem.zero(self.spec)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SkewMatrix(self.spec, out)

    def scale_central(self, rf):
        return SkewMatrix(self.spec, [[a.scale_central(rf) for a in row]
                                      for row in self.entries])

    def __pow__(self, e):
        assert self.rows == self.cols
        result = SkewMatrix.identity(self.spec, self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return all(a.is_zero() for row in self.entries for a in row)

    def __eq__(self, other):
        return (isinstance(other, SkewMatrix) and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def direct_sum(self, other):
        spec = self.spec
        z = SkewElem.zero(spec)
        out = []
        for i in range(self.rows):
            out.append(list(self.entries[i]) + [z] * other.cols)
        for i in range(other.rows):
            out.append([z] * self.cols + list(other.entries[i]))
        return SkewMatrix(spec, out)

    def submatrix(self, row0, row1, col0, col1):
        return SkewMatrix(self.spec,
                          [row[col0:col1] for row in self.entries[row0:row1]])

    def transform_rows(self, T):
        return T * self

    def __repr__(self):
        return "SkewMatrix(%d x %d)\n%s" % (
            self.rows, self.cols,
            "\n".join("  [" + ", ".join(repr(e) for e in row) + "]"
                      for row in self.entries))


# ---------------------------------------------------------------------------
# the tilde embedding

def tilde(A):
    """The unique matrix over F_q(F^ell) representing right multiplication
    by A on center-decomposed rows: (BA)_parts = B_parts * tilde(A).

    A is an n x n SkewMatrix; the result is an (n*ell) x (n*ell) matrix
    over RatFun, organized in ell x ell blocks of n x n."""
    spec = A.spec
    n = A.rows
    assert A.cols == n
    ell = spec.ell
    N = n * ell
    out = [[RatFun.zero(spec) for _ in range(N)] for _ in range(N)]
    for i in range(ell):
        Fi = SkewElem.F(spec, i)
        for m in range(n):
            for c in range(n):
                prod = Fi * A.entries[m][c]
                for j in range(ell):
                    out[i * n + m][j * n + c] = prod.parts[j]
    return out


def tilde_ore(spec, ore_entries):
    return tilde(SkewMatrix.from_ore(spec, ore_entries))


# ---------------------------------------------------------------------------
# central multipliers and inverses

def central_multiplier(P):
    """For nonzero P in F_q[F], find Q in F_q[F] and nonzero c in F_p[s]
    with Q * P = c(F^ell)."""
    if P.is_zero():
        raise ValueError("central multiplier of zero")
    spec = P.spec
    ell = spec.ell
    if ell == 1:
        # F_q[F] is already commutative with center F_p[F]
        lc = P.coeffs[-1]
        Q = OrePoly.constant(lc.inverse())
        return Q, (Q * P).center_decompose()[0]
    Pt = tilde(SkewMatrix.from_ore(spec, [[P]]))
    # solve (Q_0, ..., Q_{ell-1}) * Pt = (alpha, 0, ..., 0)
    transposed = [[Pt[j][i] for j in range(ell)] for i in range(ell)]
    rhs = [RatFun.one(spec)] + [RatFun.zero(spec)] * (ell - 1)
    y = solve_linear(transposed, rhs)
    if y is None:
        raise AssertionError("tilde of a nonzero Ore polynomial is invertible")
    den = CPoly.one(spec)
    for v in y:
        if not v.den.is_one():
            den = den.lcm(v.den)
    parts = [v.num * den.exact_div(v.den) for v in y]
    Q = OrePoly.from_parts(spec, parts)
    # Q * P = d(F^ell) with d in F_q[s]; clear to the prime field by the
    # norm: (prod_{j>=1} phi^j(d)) * d lies in F_p[s].
    d_parts = (Q * P).center_decompose()
    assert all(a.is_zero() for a in d_parts[1:])
    d = d_parts[0]
    cof = CPoly.one(spec)
    for j in range(1, ell):
        cof = cof * d.frobenius(j)
    Q = OrePoly.from_parts(spec, [cof] + [CPoly.zero(spec)] * (ell - 1)) * Q
    c = cof * d
    assert c.in_prime_field() and not c.is_zero()
    return Q, c


def skew_inverse(u):
    return u.inverse()


# ---------------------------------------------------------------------------
# division-ring Gaussian elimination

def gauss_eliminate(M):
    """Row reduce a SkewMatrix over K.

    Returns (rank, R, T) with T * M = R, T invertible, R in reduced row
    echelon form (pivots 1, pivot columns cleared)."""
    spec = M.spec
    rows = [list(r) for r in M.entries]
    n, m = M.rows, M.cols
    T = [list(r) for r in SkewMatrix.identity(spec, n).entries]
    piv = 0
    pivots = []
    for c in range(m):
        pr = None
        for i in range(piv, n):
            if not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[piv], rows[pr] = rows[pr], rows[piv]
        T[piv], T[pr] = T[pr], T[piv]
        inv = rows[piv][c].inverse()
        rows[piv] = [inv * e for e in rows[piv]]
        T[piv] = [inv * e for e in T[piv]]
        for i in range(n):
            if i == piv:
                continue
            f = rows[i][c]
            if f.is_zero():
                continue
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv])]
            T[i] = [a - f * b for a, b in zip(T[i], T[piv])]
        pivots.append((piv, c))
        piv += 1
        if piv == n:
            break
    return piv, SkewMatrix(spec, rows), SkewMatrix(spec, T)


def matrix_rank(M):
    return gauss_eliminate(M)[0]


def matrix_inverse(M):
    """Exact inverse of a square SkewMatrix; raises SingularMatrixError."""
    assert M.rows == M.cols
    rank, R, T = gauss_eliminate(M)
    if rank < M.rows:
        raise SingularMatrixError("matrix is singular over K")
    # R is the identity (reduced echelon of full-rank square matrix)
    return T


def column_space_basis(M):
    """Indices and columns of a maximal right-linearly-independent set of
    columns of M (column space with right scalar multiplication)."""
    rank, R, _ = gauss_eliminate(M)
    # pivot columns of the echelon form index independent columns of M
    pivot_cols = []
    for i in range(rank):
        for j in range(M.cols):
            if not R.entries[i][j].is_zero():
                pivot_cols.append(j)
                break
    return pivot_cols


def solve_right(M, b):
    """Solve M x = b (b a list of SkewElem column entries) over K, or None."""
    spec = M.spec
    aug = SkewMatrix(spec, [list(row) + [bv]
                            for row, bv in zip(M.entries, b)])
    rank, R, _ = gauss_eliminate(aug)
    n, m = M.rows, M.cols
    x = [SkewElem.zero(spec)] * m
    for i in range(rank):
        # find pivot column
        pc = None
        for j in range(m + 1):
            if not R.entries[i][j].is_zero():
                pc = j
                break
        if pc == m:
            return None  # inconsistent
        if pc is None:
            continue
        # reduced form: row i reads x[pc] + sum_{j>pc} R[i][j] x[j] = R[i][m]
        x[pc] = R.entries[i][m]
    # verify (free variables set to zero may not satisfy non-reduced parts;
    # with reduced echelon form they do, but keep the check cheap and exact)
    for i in range(n):
        acc = SkewElem.zero(spec)
        for j in range(m):
            acc = acc + M.entries[i][j] * x[j]
        if not (acc - b[i]).is_zero():
            return None
    return x


def right_kernel(M):
    """Basis of {v : M v = 0} as columns over K (right kernel)."""
    spec = M.spec
    rank, R, _ = gauss_eliminate(M)
    m = M.cols
    pivot_cols = []
    for i in range(rank):
        for j in range(m):
            if not R.entries[i][j].is_zero():
                pivot_cols.append(j)
                break
    free = [j for j in range(m) if j not in pivot_cols]
    basis = []
    for fc in free:
        v = [SkewElem.zero(spec)] * m
        v[fc] = SkewElem.one(spec)
        for i in reversed(range(rank)):
            pc = pivot_cols[i]
            acc = SkewElem.zero(spec)
            for j in range(pc + 1, m):
                if not R.entries[i][j].is_zero() and not v[j].is_zero():
                    acc = acc + R.entries[i][j] * v[j]
            v[pc] = -acc
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# polynomials over the center F_p(s)

class CenterPoly:
    """Polynomial in x with coefficients in F_q(s); the public pipeline
    only produces instances whose coefficients lie in F_p(s)."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.spec = spec
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, spec):
        return cls(spec, ())

    @classmethod
    def one(cls, spec):
        return cls(spec, (RatFun.one(spec),))

    @classmethod
    def x(cls, spec):
        return cls(spec, (RatFun.zero(spec), RatFun.one(spec)))

    @classmethod
    def from_ratfuns(cls, spec, coeffs):
        return cls(spec, coeffs)

    @classmethod
    def x_minus(cls, value):
        return cls(value.spec, (-value, RatFun.one(value.spec)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def coeff(self, i):
        if i < len(self.coeffs):
            return self.coeffs[i]
        return RatFun.zero(self.spec)

    def leading(self):
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeff(0)

    def in_prime_field(self):
        return all(c.in_prime_field() for c in self.coeffs)

    def assert_prime_field(self):
        if not self.in_prime_field():
            raise ValueError("coefficients do not lie in F_p(s)")
        return self

    def is_integral(self):
        """Coefficients lie in F_q[s] (no denominators)."""
        return all(c.den.is_one() for c in self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return CenterPoly(self.spec,
                          [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return CenterPoly(self.spec,
                          [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return CenterPoly(self.spec, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, RatFun):
            return CenterPoly(self.spec, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return CenterPoly.zero(self.spec)
        z = RatFun.zero(self.spec)
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return CenterPoly(self.spec, out)

    def __pow__(self, e):
        result = CenterPoly.one(self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree
        if self.degree < dd:
            return CenterPoly.zero(self.spec), self
        inv = other.leading().inverse()
        quot = [RatFun.zero(self.spec)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c * inv
            quot[k - dd] = q
            for i in range(dd + 1):
                rem[k - dd + i] = rem[k - dd + i] - q * other.coeffs[i]
        return CenterPoly(self.spec, quot), CenterPoly(self.spec, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """(g, u, v) with u*self + v*other = g, g monic gcd."""
        spec = self.spec
        a, b = self, other
        ua, va = CenterPoly.one(spec), CenterPoly.zero(spec)
        ub, vb = CenterPoly.zero(spec), CenterPoly.one(spec)
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            ua, ub = ub, ua - q * ub
            va, vb = vb, va - q * vb
        if a.is_zero():
            return a, ua, va
        inv = a.leading().inverse()
        return a * inv, ua * inv, va * inv

    def derivative(self):
        spec = self.spec
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * RatFun.from_int(spec, i))
        return CenterPoly(spec, out)

    def evaluate(self, x):
        """Horner evaluation at a RatFun."""
        acc = RatFun.zero(self.spec)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, A):
        """Q(A) for a square SkewMatrix A; coefficients act centrally."""
        n = A.rows
        acc = SkewMatrix.zero(A.spec, n, n)
        for c in reversed(self.coeffs):
            acc = acc * A + SkewMatrix.identity(A.spec, n).scale_central(c)
        return acc

    def evaluate_ratfun_matrix(self, M):
        """Q(M) for a square RatFun matrix."""
        from .fields import mat_identity, mat_mul
        n = len(M)
        spec = self.spec
        acc = [[RatFun.zero(spec)] * n for _ in range(n)]
        for c in reversed(self.coeffs):
            acc = mat_mul(acc, M)
            for i in range(n):
                acc[i][i] = acc[i][i] + c
        return acc

    def map_coeffs(self, fn):
        return CenterPoly(self.spec, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, CenterPoly) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            xv = "" if i == 0 else ("x" if i == 1 else "x^%d" % i)
            if not xv:
                parts.append("(%s)" % repr(c))
            elif c.is_one():
                parts.append(xv)
            else:
                parts.append("(%s)*%s" % (repr(c), xv))
        return " + ".join(parts)


def companion_matrix(g):
    """Companion matrix of a monic CenterPoly, over RatFun."""
    n = g.degree
    spec = g.spec
    z = RatFun.zero(spec)
    o = RatFun.one(spec)
    M = [[z] * n for _ in range(n)]
    for i in range(1, n):
        M[i][i - 1] = o
    for i in range(n):
        M[i][n - 1] = -g.coeff(i)
    return M


def min_poly_center(A):
    """Monic least-degree Q over F_p(s) with Q(A) = 0, for a square
    SkewMatrix A.  Terminates by the Cayley-Hamilton bound deg <= n*ell."""
    spec = A.spec
    n = A.rows
    ell = spec.ell

    def vec(M):
        out = []
        for row in M.entries:
            for e in row:
                for part in e.parts:
                    out.extend(prime_coords(part))
        return out

    powers = [SkewMatrix.identity(spec, n)]
    vecs = [vec(powers[0])]
    bound = n * ell
    B = powers[0]
    for k in range(1, bound + 1):
        B = B * A
        vk = vec(B)
        matrix = [[vecs[j][i] for j in range(k)] + [vk[i]]
                  for i in range(len(vk))]
        for w in kernel_basis(matrix):
            if not w[k].is_zero():
                inv = w[k].inverse()
                coeffs = [w[i] * inv for i in range(k)] + [RatFun.one(spec)]
                Q = CenterPoly(spec, coeffs)
                return Q.assert_prime_field()
        vecs.append(vk)
    raise AssertionError("no annihilating polynomial below Cayley-Hamilton bound")


def char_poly_tilde(A):
    """Characteristic polynomial of tilde(A) as a CenterPoly over F_q(s)."""
    return CenterPoly(A.spec, char_poly(tilde(A)))
