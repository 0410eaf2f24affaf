"""Exact arithmetic foundations: prime fields, extension fields F_{p^ell},
univariate polynomials and rational functions over them, and fraction-free
linear algebra over the rational function field.

All values are immutable; every operation is a pure function.
"""

from functools import lru_cache


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over F_p represented as tuples of ints (used only for moduli)

def _fp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fp_mulmod(a, b, m, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    return _fp_mod(tuple(res), m, p)


def _fp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1]:
            q = a[-1] * inv % p
            shift = len(a) - 1 - dm
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - q * c) % p
        a.pop()
    return _fp_trim(a)


def _fp_powmod(a, e, m, p):
    result = (1,)
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(a), _fp_trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b) and r:
            if r[-1]:
                q = r[-1] * inv % p
                shift = len(r) - len(b)
                for i, c in enumerate(b):
                    r[shift + i] = (r[shift + i] - q * c) % p
            r.pop()
        a, b = b, _fp_trim(r)
    return a


def fp_poly_is_irreducible(coeffs, p):
    """Irreducibility of a monic polynomial over F_p (Rabin's test)."""
    coeffs = _fp_trim(coeffs)
    n = len(coeffs) - 1
    if n < 1:
        return False
    x = (0, 1)
    if _fp_powmod(x, p ** n, coeffs, p) != _fp_mod(x, coeffs, p):
        return False
    r = 2
    factors = []
    m = n
    while r <= m:
        if m % r == 0:
            factors.append(r)
            while m % r == 0:
                m //= r
        r += 1
    if m > 1:
        factors.append(m)
    for r in factors:
        xq = _fp_powmod(x, p ** (n // r), coeffs, p)
        diff = list(xq) + [0] * (2 - len(xq))
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(tuple(diff), coeffs, p)
        if len(g) - 1 != 0:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p, ell):
    """Lexicographically smallest monic irreducible of degree ell over F_p."""
    if ell == 1:
        return (0, 1)
    # iterate over lower coefficient tuples in lex order (c0 most significant
    # position last, i.e. plain odometer over (c0,...,c_{ell-1}))
    for code in range(p ** ell):
        lower = []
        c = code
        for _ in range(ell):
            lower.append(c % p)
            c //= p
        cand = tuple(lower) + (1,)
        if fp_poly_is_irreducible(cand, p):
            return cand
    raise RuntimeError("no irreducible found")  # unreachable


class FieldSpec:
    """The field F_q with q = p^ell, as F_p[x]/(modulus)."""

    _cache = {}

    def __init__(self, p, ell, modulus=None):
        if not is_prime(p):
            raise ValueError("p must be prime: %r" % (p,))
        if ell < 1:
            raise ValueError("ell must be >= 1")
        if modulus is None:
            modulus = smallest_irreducible(p, ell)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != ell + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree ell")
        if not fp_poly_is_irreducible(modulus, p):
            raise ValueError("modulus is not irreducible over F_%d" % p)
        self.p = p
        self.ell = ell
        self.q = p ** ell
        self.modulus = modulus

    @classmethod
    def get(cls, p, ell, modulus=None):
        key = (p, ell, modulus)
        if key not in cls._cache:
            cls._cache[key] = cls(p, ell, modulus)
        return cls._cache[key]

    def zero(self):
        return FqElem(self, (0,) * self.ell)

    def one(self):
        return FqElem(self, (1,) + (0,) * (self.ell - 1))

    def from_int(self, n):
        return FqElem(self, (n % self.p,) + (0,) * (self.ell - 1))

    def generator(self):
        """The residue class of x (a generator of F_q over F_p)."""
        if self.ell == 1:
            return self.one()
        return FqElem(self, (0, 1) + (0,) * (self.ell - 2))

    def element(self, coeffs):
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) > self.ell:
            raise ValueError("too many coefficients for F_%d^%d" % (self.p, self.ell))
        return FqElem(self, coeffs + (0,) * (self.ell - len(coeffs)))

    def all_elements(self):
        for code in range(self.q):
            c, digits = code, []
            for _ in range(self.ell):
                digits.append(c % self.p)
                c //= self.p
            yield FqElem(self, tuple(digits))

    def random_element(self, rng):
        return FqElem(self, tuple(rng.randrange(self.p) for _ in range(self.ell)))

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.ell == other.ell and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.ell, self.modulus))

    def __repr__(self):
        return "FieldSpec(p=%d, ell=%d)" % (self.p, self.ell)


class FqElem:
    """Element of F_q as a length-ell coefficient vector over F_p."""

    __slots__ = ("spec", "coeffs", "_hash")

    def __init__(self, spec, coeffs):
        self.spec = spec
        self.coeffs = coeffs
        self._hash = None

    def __add__(self, other):
        return FqElem(self.spec, tuple((a + b) % self.spec.p
                                       for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return FqElem(self.spec, tuple((a - b) % self.spec.p
                                       for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return FqElem(self.spec, tuple((-a) % self.spec.p for a in self.coeffs))

    def __mul__(self, other):
        spec = self.spec
        if spec.ell == 1:
            return FqElem(spec, ((self.coeffs[0] * other.coeffs[0]) % spec.p,))
        p = spec.p
        a, b = self.coeffs, other.coeffs
        res = [0] * (2 * spec.ell - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] = (res[i + j] + x * y) % p
        m = spec.modulus
        for k in range(len(res) - 1, spec.ell - 1, -1):
            c = res[k]
            if c:
                shift = k - spec.ell
                for i in range(spec.ell):
                    res[shift + i] = (res[shift + i] - c * m[i]) % p
            res[k] = 0
        return FqElem(spec, tuple(res[:spec.ell]))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_q")
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        return self * other.inverse()

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def in_prime_field(self):
        return all(c == 0 for c in self.coeffs[1:])

    def frobenius(self, i=1):
        """Return self^(p^i).  frobenius(a, ell) is the identity on F_q."""
        if i < 0:
            raise ValueError("frobenius exponent must be nonnegative")
        i %= self.spec.ell
        if i == 0 or self.in_prime_field():
            return self
        return self ** (self.spec.p ** i)

    def __eq__(self, other):
        return (isinstance(other, FqElem) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec.p, self.spec.ell, self.coeffs))
        return self._hash

    def __repr__(self):
        if self.spec.ell == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def frobenius(a, i):
    """Coefficientwise Frobenius x -> x^(p^i) on F_q."""
    return a.frobenius(i)


# ---------------------------------------------------------------------------
# univariate polynomials over F_q (variable conventionally called s)

class CPoly:
    """Polynomial over F_q in the central variable s.

    The zero polynomial has degree -1 (sentinel).  Trailing zero
    coefficients are stripped on construction.
    """

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
        return cls(spec, (spec.one(),))

    @classmethod
    def s(cls, spec):
        return cls(spec, (spec.zero(), spec.one()))

    @classmethod
    def from_ints(cls, spec, ints):
        return cls(spec, tuple(spec.from_int(n) for n in ints))

    @classmethod
    def constant(cls, value):
        return cls(value.spec, (value,))

    @classmethod
    def monomial(cls, spec, coeff, exp):
        return cls(spec, (spec.zero(),) * exp + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        if i < len(self.coeffs):
            return self.coeffs[i]
        return self.spec.zero()

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CPoly(self.spec, out)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.spec.zero()
        out = [(self.coeffs[i] if i < len(self.coeffs) else z)
               - (other.coeffs[i] if i < len(other.coeffs) else z)
               for i in range(n)]
        return CPoly(self.spec, out)

    def __neg__(self):
        return CPoly(self.spec, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, FqElem):
            return CPoly(self.spec, tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return CPoly.zero(self.spec)
        z = self.spec.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return CPoly(self.spec, out)

    def __pow__(self, e):
        result = CPoly.one(self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return CPoly.zero(self.spec), self
        rem = list(self.coeffs)
        dlc = other.leading().inverse()
        dd = other.degree
        z = self.spec.zero()
        quot = [z] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c * dlc
            quot[k - dd] = q
            for i in range(dd + 1):
                rem[k - dd + i] = rem[k - dd + i] - q * other.coeffs[i]
        return CPoly(self.spec, quot), CPoly(self.spec, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def gcd(self, other):
        """Monic greatest common divisor; gcd(a, 0) = monic(a)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """(g, u, v) with u*self + v*other = g, g the monic gcd."""
        spec = self.spec
        a, b = self, other
        ua, va = CPoly.one(spec), CPoly.zero(spec)
        ub, vb = CPoly.zero(spec), CPoly.one(spec)
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            ua, ub = ub, ua - q * ub
            va, vb = vb, va - q * vb
        if a.is_zero():
            return a, ua, va
        inv = a.leading().inverse()
        return a * inv, ua * inv, va * inv

    def lcm(self, other):
        if self.is_zero() or other.is_zero():
            return CPoly.zero(self.spec)
        return (self * other).exact_div(self.gcd(other)).monic()

    def derivative(self):
        spec = self.spec
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * spec.from_int(i))
        return CPoly(spec, out)

    def evaluate(self, x):
        """Horner evaluation at x (an FqElem of any compatible field)."""
        acc = x.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + lift_element(c, x.spec)
        return acc

    def map_coeffs(self, fn):
        return CPoly(self.spec, tuple(fn(c) for c in self.coeffs))

    def frobenius(self, i=1):
        return self.map_coeffs(lambda c: c.frobenius(i))

    def norm_to_prime(self):
        """Product of all ell Frobenius conjugates; lies in F_p[s]."""
        out = self
        for j in range(1, self.spec.ell):
            out = out * self.frobenius(j)
        return out

    def in_prime_field(self):
        return all(c.in_prime_field() for c in self.coeffs)

    def shift_var(self, a):
        """Substitute s -> s + a."""
        spec = self.spec
        res = CPoly.zero(spec)
        base = CPoly(spec, (a, spec.one()))
        for c in reversed(self.coeffs):
            res = res * base + CPoly.constant(c)
        return res

    def __eq__(self, other):
        return (isinstance(other, CPoly) and self.spec == other.spec
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
            if i == 0:
                parts.append(repr(c))
            else:
                sv = "s" if i == 1 else "s^%d" % i
                parts.append(sv if c.is_one() else "%s*%s" % (repr(c), sv))
        return " + ".join(parts)


def lift_element(c, spec):
    """Lift a prime-field FqElem into another field of the same p."""
    if c.spec == spec:
        return c
    if not c.in_prime_field():
        raise ValueError("cannot lift non-prime-field element between specs")
    return spec.from_int(c.coeffs[0])


def lift_cpoly(f, spec):
    return CPoly(spec, tuple(lift_element(c, spec) for c in f.coeffs))


# ---------------------------------------------------------------------------
# rational functions over F_q(s)

class RatFun:
    """Rational function num/den over F_q[s] in canonical form:
    den monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = CPoly.one(num.spec)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            if den.degree == 0:
                if not den.coeffs[0].is_one():
                    num = num * den.coeffs[0].inverse()
                    den = CPoly.one(num.spec)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.leading()
                if not lc.is_one():
                    inv = lc.inverse()
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den

    @property
    def spec(self):
        return self.num.spec

    @classmethod
    def zero(cls, spec):
        return cls(CPoly.zero(spec), _canonical=True)

    @classmethod
    def one(cls, spec):
        return cls(CPoly.one(spec), _canonical=True)

    @classmethod
    def s(cls, spec):
        return cls(CPoly.s(spec), _canonical=True)

    @classmethod
    def from_int(cls, spec, n):
        return cls(CPoly.constant(spec.from_int(n)), _canonical=True)

    @classmethod
    def constant(cls, value):
        return cls(CPoly.constant(value), _canonical=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def in_prime_field(self):
        return self.num.in_prime_field() and self.den.in_prime_field()

    def __add__(self, other):
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num + other.num, _canonical=True)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other):
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num - other.num, _canonical=True)
        if self.den == other.den:
            return RatFun(self.num - other.num, self.den)
        return RatFun(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den, _canonical=True)

    def __mul__(self, other):
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num * other.num, _canonical=True)
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFun(self.num ** e, self.den ** e)

    def frobenius(self, i=1):
        return RatFun(self.num.frobenius(i), self.den.frobenius(i))

    def __eq__(self, other):
        return (isinstance(other, RatFun) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return "(%s) / (%s)" % (repr(self.num), repr(self.den))


def prime_coords(rf):
    """F_p(s)-coordinates of rf in F_q(s) w.r.t. the basis 1, w, ..., w^(ell-1).

    Returns a list of ell RatFun with all coefficients in the prime field.
    """
    spec = rf.spec
    ell = spec.ell
    if ell == 1:
        return [rf]
    cof = CPoly.one(spec)
    for j in range(1, ell):
        cof = cof * rf.den.frobenius(j)
    num2 = rf.num * cof
    den2 = rf.den * cof  # = Norm(den), lies in F_p[s]
    if not den2.in_prime_field():
        raise AssertionError("norm denominator not in prime field")
    out = []
    z = spec.zero()
    for k in range(ell):
        comp = CPoly(spec, tuple(spec.from_int(c.coeffs[k]) for c in num2.coeffs))
        out.append(RatFun(comp, den2))
    return out


# ---------------------------------------------------------------------------
# linear algebra over the rational function field

def _clear_rows(M):
    """Scale each row by its common denominator; returns CPoly matrix.

    Row scaling by a nonzero element does not change the right kernel."""
    out = []
    for row in M:
        den = CPoly.one(row[0].spec) if row else None
        for e in row:
            if not e.den.is_one():
                den = den.lcm(e.den)
        cleared = []
        for e in row:
            if den.is_one():
                cleared.append(e.num)
            else:
                cleared.append(e.num * den.exact_div(e.den))
        out.append(cleared)
    return out


def _echelon_fraction_free(rows, ncols):
    """Bareiss-style fraction-free elimination on a CPoly matrix.

    Returns (rows, pivot list of (row, col))."""
    rows = [list(r) for r in rows]
    pivots = []
    prev = None
    r = 0
    for c in range(ncols):
        # find pivot
        pr = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, len(rows)):
            head = rows[i][c]
            new = []
            for j in range(ncols):
                v = piv * rows[i][j] - head * rows[r][j]
                if prev is not None and not v.is_zero():
                    v = v.exact_div(prev)
                new.append(v)
            rows[i] = new
        pivots.append((r, c))
        prev = piv
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(M):
    """Basis of the right kernel of a matrix over RatFun.

    M is a list of rows (lists of RatFun).  Returns a list of kernel
    vectors (lists of RatFun); empty list iff the kernel is trivial.
    Implemented fraction-free: rows are cleared to F_q[s], eliminated
    Bareiss-style, and back substitution divides back in the fraction
    field.
    """
    if not M:
        return []
    ncols = len(M[0])
    spec = M[0][0].spec
    rows, pivots = _echelon_fraction_free(_clear_rows(M), ncols)
    pivot_cols = [c for (_, c) in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    zero = RatFun.zero(spec)
    one = RatFun.one(spec)
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = one
        for (r, c) in reversed(pivots):
            # rows[r] . v = 0  => solve for v[c]
            acc = zero
            for j in range(c + 1, ncols):
                if not rows[r][j].is_zero() and not v[j].is_zero():
                    acc = acc + RatFun(rows[r][j], _canonical=True) * v[j]
            v[c] = -(acc / RatFun(rows[r][c], _canonical=True))
        basis.append(v)
    return basis


def matrix_rank(M):
    if not M:
        return 0
    _, pivots = _echelon_fraction_free(_clear_rows(M), len(M[0]))
    return len(pivots)


def solve_linear(M, b):
    """One solution x of M x = b over RatFun, or None if inconsistent.

    M: list of rows; b: list of RatFun."""
    if not M:
        return []
    ncols = len(M[0])
    aug = [row + [bi] for row, bi in zip(M, b)]
    for v in kernel_basis(aug):
        if not v[ncols].is_zero():
            scale = -(v[ncols].inverse())
            return [vi * scale for vi in v[:ncols]]
    # b may be zero: x = 0 works
    if all(bi.is_zero() for bi in b):
        return [RatFun.zero(M[0][0].spec)] * ncols
    return None


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    spec = A[0][0].spec
    zero = RatFun.zero(spec)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for t in range(k):
                a = A[i][t]
                if a.is_zero():
                    continue
                b = B[t][j]
                if b.is_zero():
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_identity(spec, n):
    one = RatFun.one(spec)
    zero = RatFun.zero(spec)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_scalar_mul(c, A):
    return [[c * a for a in row] for row in A]


def mat_is_zero(A):
    return all(a.is_zero() for row in A for a in row)


def determinant(M):
    """Exact determinant of a square RatFun matrix via fraction-free
    (Bareiss) elimination on a denominator-cleared copy."""
    if not M:
        raise ValueError("empty matrix")
    return _bareiss_det(M, M[0][0].spec)


def _bareiss_det(rows_from, spec):
    n = len(rows_from)
    dens = CPoly.one(spec)
    rows = []
    for row in rows_from:
        den = CPoly.one(spec)
        for e in row:
            if not e.den.is_one():
                den = den.lcm(e.den)
        dens = dens * den
        rows.append([e.num * den.exact_div(e.den) if not den.is_one() else e.num
                     for e in row])
    sign = 1
    prev = None
    for k in range(n - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return RatFun.zero(spec)
        piv = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = piv * rows[i][j] - rows[i][k] * rows[k][j]
                if prev is not None:
                    v = v.exact_div(prev)
                rows[i][j] = v
            rows[i][k] = CPoly.zero(spec)
        prev = piv
    det = rows[n - 1][n - 1]
    if sign < 0:
        det = -det
    return RatFun(det, dens)


def char_poly(M):
    """Characteristic polynomial det(x I - M) of a square RatFun matrix.

    Returned as a list of RatFun coefficients, low degree first, monic.
    Computed by evaluation at n+1 distinct points of F_p(s) followed by
    Lagrange interpolation (exact)."""
    n = len(M)
    spec = M[0][0].spec
    pts = []
    code = 0
    while len(pts) < n + 1:
        # enumerate polynomials in s over F_p by base-p digits
        digits, c = [], code
        while True:
            digits.append(c % spec.p)
            c //= spec.p
            if c == 0:
                break
        pts.append(RatFun(CPoly.from_ints(spec, digits), _canonical=True))
        code += 1
    vals = []
    for x in pts:
        A = [[(x if i == j else RatFun.zero(spec)) - M[i][j] for j in range(n)]
             for i in range(n)]
        vals.append(_bareiss_det(A, spec))
    # Lagrange interpolation
    coeffs = [RatFun.zero(spec)] * (n + 1)
    for i, xi in enumerate(pts):
        # basis polynomial prod_{j!=i} (x - xj)/(xi - xj)
        basis = [RatFun.one(spec)]
        denom = RatFun.one(spec)
        for j, xj in enumerate(pts):
            if j == i:
                continue
            new = [RatFun.zero(spec)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] = new[k] - c * xj
                new[k + 1] = new[k + 1] + c
            basis = new
            denom = denom * (xi - xj)
        scale = vals[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] = coeffs[k] + c * scale
    return coeffs
