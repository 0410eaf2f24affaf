"""The dense-orbit trichotomy: given a dominant additive endomorphism of
G_a^N and a transcendence degree d, decide which of the three outcomes
holds and produce a certificate.

  B: a nonzero linear functional v with v * A^n = v (invariant function).
  C: a full-row-rank T with T * A^m = F^r * T onto at least d+1
     coordinates (semiconjugacy onto a Frobenius power).
  A: a witness point whose orbit passes an empirical Zariski-density
     check (exact certificates are impossible from finite data).
"""

import random

from .fields import FieldSpec, RatFun
from .fqfactor import embedding, monic_irreducibles
from .mrat import MPoly, MRatFun, fp_kernel, linearize_fractions
from .ore import OrePoly
from .skew import SkewMatrix, gauss_eliminate
from .split import split_endomorphism


class AdditiveMap:
    """x -> A*x with additive-polynomial (Ore) entries."""

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)
        self.N = len(self.entries)
        assert all(len(row) == self.N for row in self.entries)
        self.spec = self.entries[0][0].spec

    @classmethod
    def identity(cls, spec, N):
        z = OrePoly.zero(spec)
        o = OrePoly.one(spec)
        return cls([[o if i == j else z for j in range(N)] for i in range(N)])

    def to_skew(self):
        return SkewMatrix.from_ore(self.spec, self.entries)

    def apply(self, point):
        out = []
        for i in range(self.N):
            acc = None
            for j in range(self.N):
                term = self.entries[i][j](point[j])
                acc = term if acc is None else acc + term
            out.append(acc)
        return out

    def __eq__(self, other):
        return (isinstance(other, AdditiveMap)
                and self.entries == other.entries)

    def __repr__(self):
        return "AdditiveMap(%d x %d over %r)" % (self.N, self.N, self.spec)


class FiniteToFiniteMap:
    """The correspondence x -> {y : [h](y) = B*x} with h in F_p[F^ell]."""

    def __init__(self, h, B):
        assert not h.is_zero()
        self.h = h
        self.B = B

    def __repr__(self):
        return "FiniteToFiniteMap(h=%r, B=%r)" % (self.h, self.B)


# ---------------------------------------------------------------------------
# Ore matrix helpers (exact arithmetic in F_q[F])

def ore_mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    spec = A[0][0].spec
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = OrePoly.zero(spec)
            for t in range(k):
                if A[i][t].is_zero() or B[t][j].is_zero():
                    continue
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def ore_mat_pow(A, e):
    spec = A[0][0].spec
    n = len(A)
    result = [[OrePoly.one(spec) if i == j else OrePoly.zero(spec)
               for j in range(n)] for i in range(n)]
    base = [list(r) for r in A]
    while e:
        if e & 1:
            result = ore_mat_mul(result, base)
        base = ore_mat_mul(base, base)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# certificates

class CertificateB:
    """Nonzero row v over F_q[F] with v * A^n = v."""

    def __init__(self, v, n):
        self.v = tuple(v)
        self.n = n

    def __repr__(self):
        return "CertificateB(n=%d, v=%r)" % (self.n, list(self.v))


class CertificateC:
    """Full-row-rank T over F_q[F] with T * A^m = F^r * T."""

    def __init__(self, T, m, r):
        self.T = tuple(tuple(row) for row in T)
        self.m = m
        self.r = r

    def rows(self):
        return len(self.T)

    def __repr__(self):
        return "CertificateC(m=%d, r=%d, rows=%d)" % (self.m, self.r,
                                                      len(self.T))


class DensityReport:
    """Finite empirical stand-in for Zariski density of an orbit."""

    def __init__(self, M, D, outcome, polynomial=None, trials=0,
                 field_size=0, ranks=()):
        self.M = M
        self.D = D
        self.outcome = outcome  # "dense-up-to-D" | "vanishing-polynomial"
        self.polynomial = polynomial  # list of (exponent tuple, FqElem)
        self.trials = trials
        self.field_size = field_size
        self.ranks = tuple(ranks)

    def is_dense(self):
        return self.outcome == "dense-up-to-D"

    def __repr__(self):
        return ("DensityReport(M=%d, D=%d, outcome=%s, trials=%d, "
                "field_size=%d, ranks=%r)"
                % (self.M, self.D, self.outcome, self.trials,
                   self.field_size, self.ranks))


class WitnessA:
    def __init__(self, alpha, report):
        self.alpha = tuple(alpha)
        self.report = report

    def __repr__(self):
        return "WitnessA(alpha=%r, report=%r)" % (list(self.alpha),
                                                  self.report)


class Verdict:
    def __init__(self, kind, certificate, split, applicable):
        self.kind = kind
        self.certificate = certificate
        self.split = split
        self.applicable = frozenset(applicable)

    def __repr__(self):
        return "Verdict(%s, applicable=%s)" % (
            self.kind, "".join(sorted(self.applicable)))


def build_certificate_B(split):
    """Row of the n_i = 0 block of P, cleared by [h]."""
    spec = split.spec
    idx = 0
    found = None
    for k, m in split.blocks:
        if k == 0:
            found = idx
            break
        idx += m
    if found is None:
        raise ValueError("no Frobenius block with exponent zero")
    hr = RatFun(split.h)
    v = [split.P.entries[found][j].scale_central(hr).to_ore()
         for j in range(split.P.cols)]
    assert any(not e.is_zero() for e in v)
    return CertificateB(v, split.n)


def build_certificate_C(split, d):
    """First m_i rows of the max-multiplicity block of P, cleared by [h]."""
    spec = split.spec
    best = None
    idx = 0
    for k, m in split.blocks:
        if best is None or m > best[2]:
            best = (idx, k, m)
        idx += m
    if best is None or best[2] < d + 1:
        raise ValueError("no block with multiplicity at least d+1")
    start, k, m = best
    hr = RatFun(split.h)
    T = [[split.P.entries[start + i][j].scale_central(hr).to_ore()
          for j in range(split.P.cols)] for i in range(m)]
    r = k * spec.ell
    return CertificateC(T, split.n, r)


def derive_iterate_certificate(cert, k):
    """If T*A^m = F^r*T then the same T satisfies T*A^{km} = F^{kr}*T."""
    return CertificateC(cert.T, k * cert.m, k * cert.r)


def verify_certificate(A, cert):
    """Exact verification; returns (ok, reason)."""
    if isinstance(A, AdditiveMap):
        entries = [list(r) for r in A.entries]
    else:
        entries = [list(r) for r in A]
    spec = entries[0][0].spec
    if isinstance(cert, CertificateB):
        if all(e.is_zero() for e in cert.v):
            return False, "certificate row is zero"
        if cert.n < 1:
            return False, "iterate exponent must be positive"
        An = ore_mat_pow(entries, cert.n)
        lhs = ore_mat_mul([list(cert.v)], An)[0]
        if all(a == b for a, b in zip(lhs, cert.v)):
            return True, "v*A^%d = v" % cert.n
        return False, "identity fails"
    if isinstance(cert, CertificateC):
        if cert.m < 1 or cert.r < 1:
            return False, "exponents must be positive"
        T = [list(row) for row in cert.T]
        An = ore_mat_pow(entries, cert.m)
        lhs = ore_mat_mul(T, An)
        F = OrePoly.F(spec, cert.r)
        rhs = [[F * e for e in row] for row in T]
        if lhs != rhs:
            return False, "identity fails"
        rank = gauss_eliminate(SkewMatrix.from_ore(spec, T))[0]
        if rank < len(T):
            return False, "T does not have full row rank"
        return True, "T*A^%d = F^%d*T, full row rank %d" % (cert.m, cert.r,
                                                            rank)
    return False, "unknown certificate type"


# ---------------------------------------------------------------------------
# independent points and the independence checker

def _mpoly_divisible_by_univar(D, pi, nvars):
    """Does the univariate monic pi(t_1) divide the MPoly D exactly?"""
    spec = pi.spec
    dd = pi.degree
    # long division in t_1 with MPoly coefficients in the other variables
    rem = dict(D.terms)
    while rem:
        lead = max(rem, key=lambda e: e[0])
        k = lead[0]
        if k < dd:
            break
        c = rem.pop(lead)
        # subtract c * t^(k-dd) * rest-of-lead-monomial * pi; the leading
        # term of that product is the popped entry itself
        for i, pc in enumerate(pi.coeffs[:-1]):
            if pc.is_zero():
                continue
            e = (k - dd + i,) + lead[1:]
            cur = rem.get(e, spec.zero())
            cur = cur - c * pc
            if cur.is_zero():
                rem.pop(e, None)
            else:
                rem[e] = cur
        # re-add nothing: lead already popped; continue
    return not rem


def construct_independent_points(k, deltas, spec, nvars):
    """k rational functions gamma_i = 1/pi_i(t_1) whose poles avoid the
    zeros and poles of every delta and of each other."""
    if k < 1:
        return []
    out = []
    used = []
    for pi in monic_irreducibles(spec, 1):
        bad = False
        for d in deltas:
            if _mpoly_divisible_by_univar(d.num, pi, nvars) \
                    or _mpoly_divisible_by_univar(d.den, pi, nvars):
                bad = True
                break
        if not bad and any(pi == q for q in used):
            bad = True
        if bad:
            continue
        used.append(pi)
        den = MPoly.zero(spec, nvars)
        for i, c in enumerate(pi.coeffs):
            if not c.is_zero():
                e = (i,) + (0,) * (nvars - 1)
                den = den + MPoly(spec, nvars, {e: c})
        out.append(MRatFun(MPoly.one(spec, nvars), den))
        if len(out) == k:
            return out
    raise AssertionError("irreducible supply exhausted")  # unreachable


def _mrat_embed(f, big):
    emb = embedding(f.spec, big)

    def mp(m):
        return MPoly(big, m.nvars, {e: emb(c) for e, c in m.terms.items()})

    return MRatFun(mp(f.num), mp(f.den))


def check_independence(gammas, deltas, D, k):
    """Is every relation sum P_i(F)(gamma_i) = sum Q_j(F)(delta_j), with
    operator degree <= D and coefficients in F_{p^k}, forced to have all
    P_i = 0?  Returns (ok, relation), where a relation is a list of
    (label, i, e, FqElem coefficient) for the found counterexample."""
    if not gammas:
        return True, None
    base = gammas[0].spec
    big = FieldSpec.get(base.p, k) if base.ell == 1 else \
        FieldSpec.get(base.p, k * base.ell)
    w = big.generator()
    funcs = []
    tags = []
    for label, fam in (("gamma", gammas), ("delta", deltas)):
        for i, g in enumerate(fam):
            ge = _mrat_embed(g, big)
            for e in range(D + 1):
                gfe = ge.frobenius_pow(e)
                for b in range(big.ell):
                    funcs.append(gfe * w ** b)
                    tags.append((label, i, e, b))
    matrix = linearize_fractions(funcs)
    for vec in fp_kernel(matrix, big.p):
        p_part = [(t, c) for t, c in zip(tags, vec)
                  if c and t[0] == "gamma"]
        if p_part:
            relation = []
            for (label, i, e, b), c in zip(tags, vec):
                if c:
                    relation.append((label, i, e, w ** b * big.from_int(c)))
            return False, relation
    return True, None


# ---------------------------------------------------------------------------
# orbits and density

def orbit(A, alpha, M):
    """First M points of the orbit of alpha under the additive map A."""
    pts = [list(alpha)]
    for _ in range(M - 1):
        pts.append(A.apply(pts[-1]))
    return pts


def orbit_sequence(h, A0, A1, alpha0, alpha1, M):
    """n-th term ([h] o (Phi_0^n, Phi_1^n))(alpha_0, alpha_1); the
    sequence is built from matrix powers, not by iterating one map."""
    spec = h.spec
    hr = RatFun(h)
    out = []
    for n in range(M):
        coords = []
        for (B, alpha) in ((A0, alpha0), (A1, alpha1)):
            if not alpha:
                continue
            Bn = B ** n
            for i in range(Bn.rows):
                acc = None
                for j in range(Bn.cols):
                    P = Bn.entries[i][j].scale_central(hr).to_ore()
                    term = P(alpha[j])
                    acc = term if acc is None else acc + term
                coords.append(acc)
        out.append(coords)
    return out


def _monomials(nvars, D):
    def rec(prefix, remaining, budget):
        if remaining == 0:
            yield tuple(prefix)
            return
        for e in range(budget + 1):
            yield from rec(prefix + [e], remaining - 1, budget - e)
    return sorted(rec([], nvars, D), key=lambda t: (sum(t), t))


def _fq_rref(rows, spec):
    """(rank, kernel basis) of a matrix over F_q."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for fc in range(ncols):
        if fc in pivot_cols:
            continue
        v = [spec.zero()] * ncols
        v[fc] = spec.one()
        for rr, cc in pivots:
            v[cc] = -rows[rr][fc]
        basis.append(v)
    return len(pivots), basis


def _specialization_field(spec):
    """Extension of the coefficient field with at least 2^20 elements."""
    k = spec.ell
    while spec.p ** k < 2 ** 20:
        k += spec.ell
    return FieldSpec.get(spec.p, k)


def density_check(points, D, seed=0, trials=3):
    """Empirical Zariski density of a finite point set up to degree D.

    Full column rank of the monomial-evaluation matrix under any random
    specialization certifies that no polynomial of degree <= D vanishes
    on all points (exact: a vanishing polynomial would force a singular
    specialization).  A rank-deficient kernel vector is only reported
    after exact symbolic re-verification."""
    assert points and D >= 1
    spec = points[0][0].spec
    nvars = points[0][0].nvars
    N = len(points[0])
    mons = _monomials(N, D)
    big = _specialization_field(spec)
    emb = embedding(spec, big)
    rng = random.Random(seed)
    ranks = []
    kernel_candidates = []
    for trial in range(trials):
        rows = []
        ok = True
        for attempt in range(64):
            values = [big.random_element(rng) for _ in range(nvars)]
            try:
                coords = [[c.evaluate(values, emb) for c in pt]
                          for pt in points]
            except ZeroDivisionError:
                continue
            break
        else:
            ok = False
        if not ok:
            ranks.append(-1)
            continue
        for coord in coords:
            rows.append([_eval_monomial(coord, m, big) for m in mons])
        rank, kern = _fq_rref(rows, big)
        ranks.append(rank)
        if rank == len(mons):
            return DensityReport(len(points), D, "dense-up-to-D",
                                 trials=trial + 1, field_size=big.q,
                                 ranks=ranks)
        kernel_candidates.extend(kern)
    # rank deficient in every trial: try to certify a vanishing polynomial
    emb_pts = [[_mrat_embed(c, big) for c in pt] for pt in points]
    for vec in kernel_candidates:
        if _vanishes_symbolically(emb_pts, mons, vec, big):
            poly = [(m, c) for m, c in zip(mons, vec) if not c.is_zero()]
            return DensityReport(len(points), D, "vanishing-polynomial",
                                 polynomial=poly, trials=trials,
                                 field_size=big.q, ranks=ranks)
    return DensityReport(len(points), D, "dense-up-to-D", trials=trials,
                         field_size=big.q, ranks=ranks)


def density_check_orbit(A, alpha, M, D, seed=0, trials=3):
    """Density check of the orbit of alpha under A, specializing alpha
    before iterating.  The map is polynomial, so iteration commutes with
    specialization; this avoids the symbolic orbit, whose coordinates can
    grow exponentially in term count.  The symbolic orbit is only built
    if a candidate vanishing polynomial must be re-verified."""
    assert M >= 1 and D >= 1
    spec = alpha[0].spec
    nvars = alpha[0].nvars
    mons = _monomials(A.N, D)
    big = _specialization_field(spec)
    emb = embedding(spec, big)
    rng = random.Random(seed)
    ranks = []
    kernel_candidates = []
    for trial in range(trials):
        for attempt in range(64):
            values = [big.random_element(rng) for _ in range(nvars)]
            try:
                coords = [c.evaluate(values, emb) for c in alpha]
            except ZeroDivisionError:
                continue
            break
        else:
            ranks.append(-1)
            continue
        pts = [coords]
        for _ in range(M - 1):
            pts.append(A.apply(pts[-1]))
        rows = [[_eval_monomial(pt, m, big) for m in mons] for pt in pts]
        rank, kern = _fq_rref(rows, big)
        ranks.append(rank)
        if rank == len(mons):
            return DensityReport(M, D, "dense-up-to-D", trials=trial + 1,
                                 field_size=big.q, ranks=ranks)
        kernel_candidates.extend(kern)
    emb_pts = [[_mrat_embed(c, big) for c in pt]
               for pt in orbit(A, alpha, M)]
    for vec in kernel_candidates:
        if _vanishes_symbolically(emb_pts, mons, vec, big):
            poly = [(m, c) for m, c in zip(mons, vec) if not c.is_zero()]
            return DensityReport(M, D, "vanishing-polynomial",
                                 polynomial=poly, trials=trials,
                                 field_size=big.q, ranks=ranks)
    return DensityReport(M, D, "dense-up-to-D", trials=trials,
                         field_size=big.q, ranks=ranks)


def _eval_monomial(coord, m, big):
    acc = big.one()
    for v, e in zip(coord, m):
        if e:
            acc = acc * v ** e
    return acc


def _vanishes_symbolically(emb_pts, mons, vec, big):
    nvars = emb_pts[0][0].nvars
    for pt in emb_pts:
        acc = MRatFun.zero(big, nvars)
        for m, c in zip(mons, vec):
            if c.is_zero():
                continue
            term = MRatFun.constant(c, nvars)
            for coord, e in zip(pt, m):
                if e:
                    term = term * coord ** e
            acc = acc + term
        if not acc.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# the trichotomy

def witness_A(split, d, density_M=20, density_D=2, seed=0, A=None):
    """Witness point for verdict A: fresh variables on each Frobenius
    block (reused across blocks), multiplicatively independent
    coordinates for the rest, pulled back through [h] o P^{-1}."""
    spec = split.spec
    if split.N0 and (split.min_ni() == 0 or split.max_mi() > d):
        raise ValueError("verdict A preconditions violated")
    nvars = max(d, 1)
    alpha0 = []
    for k, m in split.blocks:
        for i in range(m):
            alpha0.append(MRatFun.var(spec, nvars, i))
    deltas = [MRatFun.var(spec, nvars, i)
              for i in range(min(split.max_mi(), nvars))]
    alpha1 = construct_independent_points(split.N1, deltas, spec, nvars)
    y = alpha0 + alpha1
    hr = RatFun(split.h)
    alpha = []
    for i in range(split.P_inv.rows):
        acc = MRatFun.zero(spec, nvars)
        for j in range(split.P_inv.cols):
            P = split.P_inv.entries[i][j].scale_central(hr).to_ore()
            if P.is_zero():
                continue
            acc = acc + P(y[j])
        alpha.append(acc)
    report = None
    if A is not None:
        report = density_check_orbit(A, alpha, density_M, density_D,
                                     seed=seed)
    return WitnessA(alpha, report)


def classify(A, d, density_M=20, density_D=2, seed=0, cap=512):
    """Decide the trichotomy for a dominant AdditiveMap and d >= 1."""
    if not isinstance(A, AdditiveMap):
        A = AdditiveMap(A)
    assert d >= 1
    split = split_endomorphism(A.to_skew(), cap=cap)
    applicable = set()
    if any(k == 0 for k, _ in split.blocks):
        applicable.add("B")
    if split.max_mi() >= d + 1:
        applicable.add("C")
    if split.N0 == 0 or (split.min_ni() >= 1 and split.max_mi() <= d):
        applicable.add("A")
    assert applicable, "trichotomy totality violated"
    if "B" in applicable:
        cert = build_certificate_B(split)
        ok, reason = verify_certificate(A, cert)
        assert ok, reason
        return Verdict("B", cert, split, applicable)
    if "C" in applicable:
        cert = build_certificate_C(split, d)
        ok, reason = verify_certificate(A, cert)
        assert ok, reason
        return Verdict("C", cert, split, applicable)
    cert = witness_A(split, d, density_M=density_M, density_D=density_D,
                     seed=seed, A=A)
    return Verdict("A", cert, split, applicable)
