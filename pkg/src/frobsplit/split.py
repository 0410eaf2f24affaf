"""Splitting a dominant additive endomorphism into a Frobenius-diagonal
part and a multiplicatively independent part.

The pipeline: factor the minimal polynomial over the center F_p(s),
classify each irreducible factor (does some power of its roots equal a
power of s?), raise the map to a suitable power, conjugate it into block
diagonal form by central idempotents, put the Frobenius part in Jordan
form, and power up once more until the Frobenius part is exactly
diagonal.
"""

import itertools
import math

from .fields import CPoly, FieldSpec, RatFun, char_poly, lift_cpoly
from .fqfactor import factor as fq_factor
from .skew import (CenterPoly, SkewElem, SkewMatrix, column_space_basis,
                   companion_matrix, gauss_eliminate, matrix_inverse,
                   min_poly_center, right_kernel)


class CapacityError(ValueError):
    """A configurable degree/search cap was exceeded."""


class NonDominantError(ValueError):
    """The endomorphism is not dominant (minimal polynomial has root 0)."""


class UnknownClassificationError(RuntimeError):
    """A factor could not be classified within the search bound."""

    def __init__(self, classification):
        self.classification = classification
        RuntimeError.__init__(
            self, "factor classification exhausted its search bound: %r"
            % (classification.factor,))


# ---------------------------------------------------------------------------
# factorization of monic polynomials in x over F_p(s)

_DEGREE_CAP_X = 64
_DEGREE_CAP_S = 256


def _ratfun_down(rf, fp):
    """Map a RatFun with prime-field coefficients down to F_p = F_p^1."""
    def down(c):
        return CPoly(fp, tuple(fp.from_int(e.coeffs[0]) for e in c.coeffs))
    return RatFun(down(rf.num), down(rf.den))


def _ratfun_up(rf, spec):
    return RatFun(lift_cpoly(rf.num, spec), lift_cpoly(rf.den, spec))


def factor_center(r):
    """Factor a monic CenterPoly with F_p(s) coefficients into monic
    irreducibles over F_p(s); returns a list of (factor, multiplicity).
    """
    if r.is_zero():
        raise ValueError("cannot factor zero")
    if not r.leading().is_one():
        raise ValueError("input must be monic")
    r.assert_prime_field()
    spec = r.spec
    if r.degree > _DEGREE_CAP_X:
        raise CapacityError("x-degree %d exceeds cap %d"
                            % (r.degree, _DEGREE_CAP_X))
    fp = FieldSpec.get(spec.p, 1)
    rd = CenterPoly(fp, [_ratfun_down(c, fp) for c in r.coeffs])
    found = _factor_prime(rd)
    out = [(CenterPoly(spec, [_ratfun_up(c, spec) for c in g.coeffs]), m)
           for g, m in found.items()]
    out.sort(key=lambda t: (t[0].degree, t[1]))
    # exactness check: the product must reconstruct the input
    prod = CenterPoly.one(spec)
    for g, m in out:
        prod = prod * g ** m
    assert prod == r, "factorization does not multiply back"
    return out


def _factor_prime(f):
    """Recursive full factorization of monic f over F_p(s); returns a
    dict irreducible -> multiplicity."""
    result = {}
    if f.degree < 1:
        return result
    p = f.spec.p
    fx = f.derivative()
    if fx.is_zero():
        # f = g(x^p); factor g, then handle each piece
        g = CenterPoly(f.spec, [f.coeff(i) for i in range(0, f.degree + 1, p)])
        for h, m in _factor_prime(g).items():
            rooted = _pth_root_coeffs(h)
            if rooted is not None:
                # h(x^p) = rooted(x)^p
                for irr, mm in _factor_prime(rooted).items():
                    result[irr] = result.get(irr, 0) + m * mm * p
            else:
                hxp = CenterPoly(f.spec, _spread(h.coeffs, p, f.spec))
                result[hxp] = result.get(hxp, 0) + m
        return result
    c = f.gcd(fx)
    w = f.exact_div(c)  # squarefree, contains each factor of f with p∤mult
    for irr in _factor_squarefree(w):
        result[irr] = result.get(irr, 0) + 1
    if c.degree > 0:
        for irr, m in _factor_prime(c).items():
            result[irr] = result.get(irr, 0) + m
    return result


def _spread(coeffs, p, spec):
    out = []
    for c in coeffs:
        out.append(c)
        out.extend([RatFun.zero(spec)] * (p - 1))
    return out[:len(out) - (p - 1)] if coeffs else []


def _pth_root_coeffs(h):
    """If every coefficient of h lies in F_p(s^p), return the polynomial
    with p-th-rooted coefficients; else None."""
    spec = h.spec
    p = spec.p
    out = []
    for c in h.coeffs:
        nr = _cpoly_pth_root(c.num)
        dr = _cpoly_pth_root(c.den)
        if nr is None or dr is None:
            return None
        out.append(RatFun(nr, dr))
    return CenterPoly(spec, out)


def _cpoly_pth_root(u):
    """p-th root of u in F_p[s] (coefficients are Frobenius-fixed), or
    None if some exponent is not divisible by p."""
    p = u.spec.p
    out = []
    for i, c in enumerate(u.coeffs):
        if i % p:
            if not c.is_zero():
                return None
            continue
        out.append(c)
    return CPoly(u.spec, out)


def _factor_squarefree(g):
    """Monic squarefree g over F_p(s) (gcd(g, g') = 1) -> list of monic
    irreducible factors."""
    spec = g.spec  # F_p with ell = 1
    p = spec.p
    if g.degree <= 1:
        return [g] if g.degree == 1 else []
    # clear denominators: g2(x) = d^n * g(x/d) has coefficients in F_p[s]
    d = CPoly.one(spec)
    for c in g.coeffs:
        if not c.den.is_one():
            d = d.lcm(c.den)
    n = g.degree
    biv = []
    for i, c in enumerate(g.coeffs):
        scaled = c * RatFun(d ** (n - i), _canonical=True)
        assert scaled.den.is_one()
        biv.append(scaled.num)
    degs = max(c.degree for c in biv)
    if degs > _DEGREE_CAP_S:
        raise CapacityError("s-degree %d exceeds cap %d"
                            % (degs, _DEGREE_CAP_S))
    if degs == 0:
        # really a univariate polynomial over F_p
        uni = CPoly(spec, [c.coeff(0) for c in biv])
        _, facs = fq_factor(uni)
        pieces = [CenterPoly(spec, [RatFun.constant(cc) for cc in irr.coeffs])
                  for irr, _ in facs]
    else:
        pieces = _factor_bivariate(biv, spec)
    # undo the x -> x/d substitution: factor h of g2 gives d^{-deg h} h(dx)
    if d.is_one():
        return pieces
    out = []
    dr = RatFun(d, _canonical=True)
    for h in pieces:
        m = h.degree
        out.append(CenterPoly(spec, [h.coeff(i) * dr ** (i - m)
                                     for i in range(m + 1)]))
    return out


def _find_good_specialization(biv, spec):
    """Field element a with squarefree image biv(s=a, x); searches
    extensions of increasing degree deterministically."""
    for k in range(1, 9):
        ext = FieldSpec.get(spec.p, k)
        for a in ext.all_elements():
            ga = CPoly(ext, [c.evaluate(a) for c in biv])
            if ga.gcd(ga.derivative()).degree == 0:
                return ext, a, ga
    raise CapacityError("no squarefree specialization found up to degree 8")


def _xpoly_mul(f, g, B):
    """Product of x-polynomials with truncated-CPoly coefficients."""
    spec = f[0].spec
    z = CPoly.zero(spec)
    out = [z] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a.is_zero():
            continue
        for j, b in enumerate(g):
            if b.is_zero():
                continue
            prod = a * b
            out[i + j] = out[i + j] + CPoly(spec, prod.coeffs[:B])
    return [CPoly(spec, c.coeffs[:B]) for c in out]


def _hensel_lift(ft, g0, h0, B):
    """Given ft (x-poly with CPoly-in-t coefficients, monic in x) with
    ft == g0*h0 mod t and gcd(g0, h0) = 1, lift to G monic with
    ft == G*H mod t^B.  Returns G as an x-coefficient list of CPoly."""
    spec = g0.spec
    _, u, v = g0.xgcd(h0)
    G = [CPoly.constant(c) for c in g0.coeffs]
    H = [CPoly.constant(c) for c in h0.coeffs]
    for m in range(1, B):
        prod = _xpoly_mul(G, H, B)
        err = [ft[i] - (prod[i] if i < len(prod) else CPoly.zero(spec))
               for i in range(len(ft))]
        e = CPoly(spec, [c.coeff(m) for c in err])
        if e.is_zero():
            continue
        q, dg = (v * e).divmod(g0)
        dh = u * e + q * h0
        assert dg.degree < g0.degree and dh.degree < h0.degree
        for j in range(dg.degree + 1):
            G[j] = G[j] + CPoly.monomial(spec, dg.coeff(j), m)
        for j in range(dh.degree + 1):
            H[j] = H[j] + CPoly.monomial(spec, dh.coeff(j), m)
    return G


def _factor_bivariate(biv, spec):
    """Factor a monic-in-x squarefree polynomial with F_p[s] coefficients
    (biv = list of CPoly over F_p, leading entry 1) into monic
    irreducibles over F_p(s).

    Evaluation at a squarefree specialization s = a, univariate
    factorization, Hensel lifting to s-precision deg_s + 1 (which bounds
    any monic factor's s-degree), and subset recombination with exact
    trial division."""
    ext, a, ga = _find_good_specialization(biv, spec)
    _, local = fq_factor(ga)
    locals_ = [irr for irr, _ in local]
    remaining_cp = CenterPoly(spec, [RatFun(c, _canonical=True) for c in biv])
    if len(locals_) == 1:
        return [remaining_cp]
    B = max(c.degree for c in biv) + 1
    # shift into the local parameter t = s - a
    ft = [lift_cpoly(c, ext).shift_var(a) for c in biv]
    lifted = []
    for gi in locals_:
        hi = ga.exact_div(gi)
        lifted.append(_hensel_lift(ft, gi, hi, B))
    factors = []
    pool = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(pool):
        progress = False
        for subset in itertools.combinations(pool, size):
            cand = _recombine(lifted, subset, a, B, spec, ext)
            if cand is None:
                continue
            q, rem = remaining_cp.divmod(cand)
            if rem.is_zero():
                factors.append(cand)
                remaining_cp = q
                pool = [i for i in pool if i not in subset]
                progress = True
                break
        if not progress:
            size += 1
    if remaining_cp.degree > 0:
        factors.append(remaining_cp)
    return factors


def _recombine(lifted, subset, a, B, spec, ext):
    """Product of the chosen lifted local factors, pulled back to the s
    variable; None unless all coefficients land in F_p[s]."""
    prod = [CPoly.one(ext)]
    for i in subset:
        prod = _xpoly_mul(prod, lifted[i], B)
    out = []
    for c in prod:
        cs = c.shift_var(-a)
        if not cs.in_prime_field():
            return None
        out.append(RatFun(CPoly(spec, tuple(spec.from_int(e.coeffs[0])
                                            for e in cs.coeffs)),
                          _canonical=True))
    return CenterPoly(spec, out)


# ---------------------------------------------------------------------------
# classification of irreducible factors

class FactorClassification:
    """Verdict for one irreducible factor of the central minimal
    polynomial: Frobenius type (some power of each root is a power of s)
    or multiplicatively independent of s, or unknown if the search bound
    was truncated."""

    FROBENIUS = "frobenius"
    INDEPENDENT = "independent"
    UNKNOWN = "unknown"

    def __init__(self, factor, kind, n=None, j=None, bound=None, reason=""):
        self.factor = factor
        self.kind = kind
        self.n = n
        self.j = j
        self.bound = bound
        self.reason = reason

    def is_frobenius(self):
        return self.kind == self.FROBENIUS

    def __repr__(self):
        if self.kind == self.FROBENIUS:
            return "FrobeniusType(n=%d, j=%d)" % (self.n, self.j)
        return self.kind


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _mat_pow(M, e, spec):
    from .fields import mat_identity, mat_mul
    result = mat_identity(spec, len(M))
    base = M
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def _monomial_of(rf):
    """(unit, exponent) if rf = unit * s^k with unit in F_q^*; else None.
    Negative exponents are allowed (unit * s^-k)."""
    nterms = [i for i, c in enumerate(rf.num.coeffs) if not c.is_zero()]
    dterms = [i for i, c in enumerate(rf.den.coeffs) if not c.is_zero()]
    if len(nterms) != 1 or len(dterms) != 1:
        return None
    unit = rf.num.coeffs[nterms[0]] / rf.den.coeffs[dterms[0]]
    return unit, nterms[0] - dterms[0]


def classify_factor(g, cap=512):
    """Classify a monic irreducible g over F_p(s): FrobeniusType{n, j}
    with minimal n >= 1 such that every root u satisfies u^n = s^j, or
    Independent, or Unknown if the candidate list had to be truncated.

    The test for a candidate n is exact: the characteristic polynomial
    of C_g^n (companion matrix power) must equal (x - s^j)^deg g."""
    spec = g.spec
    p = spec.p
    deg = g.degree
    if deg < 1:
        raise ValueError("constant polynomial cannot be classified")
    c0 = g.constant_term()
    if c0.is_zero():
        raise ValueError("factor has root zero (non-dominant source)")
    # norm filter: the product of the roots is +-c0; if some power of
    # every root is a monomial in s, c0 must be a unit times a monomial.
    mono = _monomial_of(c0)
    if mono is None:
        return FactorClassification(g, FactorClassification.INDEPENDENT,
                                    reason="norm filter: constant term is "
                                           "not a unit times a monomial")
    # candidate powers: n = p^e * n' with p^e >= nothing beyond covering
    # deg and n' dividing lcm{p^k - 1 : k <= min(deg!, 6)}
    e_max = 0
    while p ** e_max < deg:
        e_max += 1
    kmax = min(math.factorial(deg), 6)
    L = 1
    for k in range(1, kmax + 1):
        L = L * (p ** k - 1) // math.gcd(L, p ** k - 1)
    cands = sorted({p ** e * np for e in range(e_max + 1)
                    for np in _divisors(L)})
    truncated = [n for n in cands if n > cap]
    cands = [n for n in cands if n <= cap]
    C = companion_matrix(g)
    for n in cands:
        hn = CenterPoly(spec, char_poly(_mat_pow(C, n, spec)))
        m0 = _monomial_of(hn.coeff(0))
        if m0 is None:
            continue
        _, k = m0
        if k % deg or k < 0:
            continue
        j = k // deg
        target = CenterPoly.x_minus(RatFun(
            CPoly.monomial(spec, spec.one(), j), _canonical=True)) ** deg
        if hn == target:
            return FactorClassification(
                g, FactorClassification.FROBENIUS, n=n, j=j, bound=cap)
    if truncated:
        return FactorClassification(g, FactorClassification.UNKNOWN,
                                    bound=cap,
                                    reason="candidate list truncated at %d"
                                           % cap)
    return FactorClassification(g, FactorClassification.INDEPENDENT,
                                bound=cap,
                                reason="no candidate power matched")


# ---------------------------------------------------------------------------
# Jordan form for central eigenvalues

def _col_matrix(spec, vecs, n):
    return SkewMatrix(spec, [[v[i] for v in vecs] for i in range(n)])


def _col_rank(spec, vecs, n):
    if not vecs:
        return 0
    return gauss_eliminate(_col_matrix(spec, vecs, n))[0]


def jordan_form_central(A0):
    """Jordan form of a SkewMatrix whose minimal polynomial splits into
    (x - s^k)^e factors over F_p(s).

    Returns (Pj, blocks) with Pj invertible, Pj^{-1}*A0*Pj exactly the
    Jordan matrix, and blocks a list of (exponent k, size) pairs."""
    spec = A0.spec
    n = A0.rows
    mp = min_poly_center(A0)
    eigen = []
    for gfac, mult in factor_center(mp):
        if gfac.degree != 1:
            raise ValueError("non-central eigenvalue data (nonlinear factor)")
        root = -gfac.coeff(0)
        mono = _monomial_of(root) if not root.is_zero() else None
        if mono is None or not mono[0].is_one() or mono[1] < 0 \
                or not root.den.is_one():
            raise ValueError("non-central eigenvalue data (root %r)" % root)
        eigen.append((mono[1], root, mult))
    eigen.sort()
    all_chains = []  # (exponent, chain)
    for k, root, e in eigen:
        lamI = SkewMatrix.identity(spec, n).scale_central(root)
        M = A0 - lamI
        kernels = [[]]
        Mp = SkewMatrix.identity(spec, n)
        for j in range(1, e + 1):
            Mp = Mp * M
            kernels.append(right_kernel(Mp))
        chains = []
        for j in range(e, 0, -1):
            base = list(kernels[j - 1])
            for c in chains:
                if len(c) >= j:
                    base.append(c[len(c) - j])
            rank0 = _col_rank(spec, base, n)
            for v in kernels[j]:
                trial = base + [v]
                if _col_rank(spec, trial, n) > rank0:
                    chain = [v]
                    cur = v
                    for _ in range(j - 1):
                        cur = [sum((M.entries[i][t] * cur[t]
                                    for t in range(n)),
                                   SkewElem.zero(spec)) for i in range(n)]
                        chain.append(cur)
                    chains.append(chain)
                    base = trial
                    rank0 += 1
        for c in chains:
            all_chains.append((k, c))
    # assemble the basis: within each chain, deepest image first
    cols = []
    blocks = []
    for k, chain in all_chains:
        blocks.append((k, len(chain)))
        cols.extend(reversed(chain))
    assert len(cols) == n, "Jordan basis does not span"
    Pj = _col_matrix(spec, cols, n)
    Pj_inv = matrix_inverse(Pj)
    return Pj, Pj_inv, blocks


def power_up(p, blocks):
    """Smallest a with p^a >= every Jordan block size, plus the merged
    diagonal blocks after raising to the p^a power.

    blocks: list of (exponent k, size); the block J_{s^k, m} raised to
    the p^a becomes s^{k*p^a} * I_m.  Returns (a, [(n_i, m_i)]) with
    distinct n_i."""
    if not blocks:
        return 0, []
    maxsize = max(m for _, m in blocks)
    a = 0
    while p ** a < maxsize:
        a += 1
    merged = {}
    for k, m in blocks:
        key = k * p ** a
        merged[key] = merged.get(key, 0) + m
    return a, sorted(merged.items())


# ---------------------------------------------------------------------------
# the splitting pipeline

class SplitData:
    """Everything produced by split_endomorphism.

    P * A^n * P^{-1} = A0 (+) A1 exactly, where A0 is the diagonal
    matrix of the Frobenius blocks F^{n_i*ell} I_{m_i} and A1 has minimal
    polynomial r1 with multiplicatively independent roots.  h is a
    nonzero element of F_p[s] clearing the central denominators of P,
    P^{-1}, and the powers A1^i for i < deg r1."""

    def __init__(self, spec, n, P, P_inv, blocks, A0, A1, h, r0, r1,
                 a, classifications):
        self.spec = spec
        self.n = n
        self.P = P
        self.P_inv = P_inv
        self.blocks = blocks        # list of (n_i, m_i), distinct n_i
        self.A0 = A0                # N0 x N0 SkewMatrix (diagonal)
        self.A1 = A1                # N1 x N1 SkewMatrix
        self.h = h                  # CPoly over F_q, prime-field coeffs
        self.r0 = r0
        self.r1 = r1
        self.a = a                  # power-up exponent (p^a factor of n)
        self.classifications = classifications

    @property
    def N0(self):
        return self.A0.rows

    @property
    def N1(self):
        return self.A1.rows

    def min_ni(self):
        return min((k for k, _ in self.blocks), default=None)

    def max_mi(self):
        return max((m for _, m in self.blocks), default=0)


def _direct_sum_check(P, B, P_inv, A0, A1):
    lhs = P * B * P_inv
    return lhs == A0.direct_sum(A1)


def _monomial_eigen_exponent(cls):
    """Eigen exponent j for a linear Frobenius factor classified with
    n = 1 (root is exactly s^j)."""
    assert cls.is_frobenius() and cls.n == 1
    return cls.j


def split_endomorphism(A, cap=512):
    """Split a dominant endomorphism given as a SkewMatrix (or grid of
    OrePoly) over F_q[F].  Returns SplitData."""
    if not isinstance(A, SkewMatrix):
        spec = A[0][0].spec
        A = SkewMatrix.from_ore(spec, A)
    spec = A.spec
    p = spec.p
    mp = min_poly_center(A)
    if mp.constant_term().is_zero():
        raise NonDominantError("minimal polynomial has zero constant term")
    n = 1
    for _ in range(8):
        B = A ** n
        r = min_poly_center(B)
        facs = factor_center(r)
        classes = [classify_factor(g, cap=cap) for g, _ in facs]
        for cls in classes:
            if cls.kind == FactorClassification.UNKNOWN:
                raise UnknownClassificationError(cls)
        need = 1
        for cls in classes:
            if cls.is_frobenius():
                need = need * cls.n // math.gcd(need, cls.n)
        if need == 1:
            break
        n *= need
    else:
        raise CapacityError("power-up iteration did not stabilize")
    # partition the minimal polynomial
    r0 = CenterPoly.one(spec)
    r1 = CenterPoly.one(spec)
    for (g, m), cls in zip(facs, classes):
        if cls.is_frobenius():
            r0 = r0 * g ** m
        else:
            r1 = r1 * g ** m
    N = A.rows
    if r1.degree == 0:
        Q = SkewMatrix.identity(spec, N)
        Q_inv = Q
        A0_pre = B
        A1_pre = SkewMatrix.zero(spec, 0, 0)
        N0 = N
    elif r0.degree == 0:
        Q = SkewMatrix.identity(spec, N)
        Q_inv = Q
        A0_pre = SkewMatrix.zero(spec, 0, 0)
        A1_pre = B
        N0 = 0
    else:
        one, u0, u1 = r0.xgcd(r1)
        assert one.is_one(), "r0, r1 are not coprime"
        E0 = (u1 * r1).evaluate_matrix(B)
        E1 = (u0 * r0).evaluate_matrix(B)
        cols0 = [ [E0.entries[i][j] for i in range(N)]
                  for j in column_space_basis(E0) ]
        cols1 = [ [E1.entries[i][j] for i in range(N)]
                  for j in column_space_basis(E1) ]
        assert len(cols0) + len(cols1) == N, "idempotent images do not span"
        Q = _col_matrix(spec, cols0 + cols1, N)
        Q_inv = matrix_inverse(Q)
        C = Q_inv * B * Q
        N0 = len(cols0)
        A0_pre = C.submatrix(0, N0, 0, N0)
        A1_pre = C.submatrix(N0, N, N0, N)
        assert C.submatrix(0, N0, N0, N).is_zero()
        assert C.submatrix(N0, N, 0, N0).is_zero()
    # Jordanize the Frobenius part, then power up to pure diagonal
    if N0 > 0:
        Pj, Pj_inv, jblocks = jordan_form_central(A0_pre)
    else:
        Pj = Pj_inv = SkewMatrix.zero(spec, 0, 0)
        jblocks = []
    a, merged = power_up(p, jblocks)
    n_final = n * p ** a
    B_final = B ** (p ** a)
    # conjugation: P = (Pj (+) I)^{-1} * Q^{-1}
    if N0 > 0 and A1_pre.rows > 0:
        Pj_full = Pj.direct_sum(SkewMatrix.identity(spec, A1_pre.rows))
        Pj_full_inv = Pj_inv.direct_sum(SkewMatrix.identity(spec, A1_pre.rows))
    elif N0 > 0:
        Pj_full, Pj_full_inv = Pj, Pj_inv
    else:
        Pj_full = Pj_full_inv = SkewMatrix.identity(spec, N)
    P = Pj_full_inv * Q_inv
    P_inv = Q * Pj_full
    # final blocks
    A0 = SkewMatrix.zero(spec, 0, 0)
    if merged:
        diag = []
        for k, m in merged:
            diag.extend([k] * m)
        A0 = SkewMatrix(spec, [[SkewElem.F(spec, diag[i] * spec.ell)
                                if i == j else SkewElem.zero(spec)
                                for j in range(N0)] for i in range(N0)])
    A1 = A1_pre ** (p ** a) if A1_pre.rows else A1_pre
    assert _direct_sum_check(P, B_final, P_inv, A0, A1), \
        "block-diagonal identity failed"
    # minimal polynomial bookkeeping for the powered map
    r0_final = CenterPoly.one(spec)
    for k, _ in merged:
        r0_final = r0_final * CenterPoly.x_minus(
            RatFun(CPoly.monomial(spec, spec.one(), k), _canonical=True))
    r1_final = min_poly_center(A1) if A1.rows else CenterPoly.one(spec)
    assert r0_final.gcd(r1_final).is_one()
    assert min_poly_center(B_final) == r0_final * r1_final
    # central denominator clearing element h
    h = CPoly.one(spec)

    def absorb(matrix):
        nonlocal h
        for row in matrix.entries:
            for e in row:
                c, _ = e.clear_central()
                h = h.lcm(c)

    absorb(P)
    absorb(P_inv)
    if A1.rows:
        power = SkewMatrix.identity(spec, A1.rows)
        for _ in range(max(r1_final.degree, 1)):
            absorb(power)
            power = power * A1
    assert h.in_prime_field() and not h.is_zero()
    return SplitData(spec, n_final, P, P_inv, merged, A0, A1, h,
                     r0_final, r1_final, a, classes)
