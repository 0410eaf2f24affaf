"""The dense-orbit trichotomy: verdicts, certificates, witness points,
density checks, and the independence machinery."""

from frobsplit.fields import FieldSpec
from frobsplit.mrat import MRatFun
from frobsplit.ore import OrePoly, parse_ore
from frobsplit.classify import (AdditiveMap, CertificateC, classify,
                                check_independence,
                                construct_independent_points,
                                density_check, density_check_orbit,
                                derive_iterate_certificate, orbit,
                                orbit_sequence, verify_certificate,
                                witness_A)
from frobsplit.split import split_endomorphism

F2 = FieldSpec.get(2, 1)
F4 = FieldSpec.get(2, 2)


def test_identity_is_B():
    A = AdditiveMap([[OrePoly.one(F2)]])
    v = classify(A, 1)
    assert v.kind == "B"
    assert v.certificate.n == 1
    ok, reason = verify_certificate(A, v.certificate)
    assert ok, reason


def test_diag_F_F_is_C_with_iterates():
    A = AdditiveMap([[OrePoly.F(F2), OrePoly.zero(F2)],
                     [OrePoly.zero(F2), OrePoly.F(F2)]])
    v = classify(A, 1)
    assert v.kind == "C"
    c = v.certificate
    assert c.m == 1 and c.r == 1
    assert verify_certificate(A, c)[0]
    for k in (2, 3):
        assert verify_certificate(A, derive_iterate_certificate(c, k))[0]
    bad = CertificateC(c.T, c.m, c.r + 1)
    ok, reason = verify_certificate(A, bad)
    assert not ok and "identity fails" in reason


def test_F_plus_one_is_A():
    A = AdditiveMap([[parse_ore("F + 1", F2)]])
    v = classify(A, 1, density_M=25, density_D=3)
    assert v.kind == "A"
    assert v.certificate.report.is_dense()


def test_pure_frobenius_is_A():
    A = AdditiveMap([[OrePoly.F(F2)]])
    v = classify(A, 1)
    assert v.kind == "A"
    assert v.certificate.report.is_dense()
    assert repr(v.certificate.alpha[0]) == "t1"


def test_two_frobenius_blocks_is_A():
    A = AdditiveMap([[OrePoly.F(F2), OrePoly.zero(F2)],
                     [OrePoly.zero(F2), OrePoly.F(F2, 2)]])
    v = classify(A, 1)
    assert v.kind == "A"
    assert v.certificate.report.is_dense()


def test_mixed_map_is_A():
    A = AdditiveMap([[OrePoly.F(F2), OrePoly.zero(F2)],
                     [OrePoly.zero(F2), parse_ore("F+1", F2)]])
    v = classify(A, 1)
    assert v.kind == "A"
    assert v.certificate.report.is_dense()


def test_mixed_map_is_B():
    D = [[OrePoly.one(F4), OrePoly.zero(F4)],
         [OrePoly.zero(F4), parse_ore("F^2 + 1", F4)]]
    v = classify(AdditiveMap(D), 1)
    assert v.kind == "B"
    assert verify_certificate(AdditiveMap(D), v.certificate)[0]


def test_verdict_priority_and_applicable():
    # identity on G_a^2: invariant functions exist (B) and the map
    # semiconjugates onto F^0 on 2 > d coordinates (C); B wins
    A = AdditiveMap.identity(F2, 2)
    v = classify(A, 1)
    assert v.kind == "B"
    assert "C" in v.applicable


def test_density_check_dense():
    t = MRatFun.var(F2, 1, 0)
    pts = orbit(AdditiveMap([[OrePoly.F(F2)]]), [t], 5)
    rep = density_check(pts, 2)
    assert rep.is_dense() and rep.ranks[0] == 3


def test_density_check_finds_vanishing_polynomial():
    z = MRatFun.zero(F2, 1)
    rep = density_check([[z]] * 4, 1)
    assert rep.outcome == "vanishing-polynomial"
    assert any(m == (1,) for m, c in rep.polynomial)
    t = MRatFun.var(F2, 1, 0)
    A = AdditiveMap([[OrePoly.F(F2), OrePoly.zero(F2)],
                     [OrePoly.zero(F2), OrePoly.F(F2)]])
    rep = density_check(orbit(A, [t, t], 6), 1)
    assert rep.outcome == "vanishing-polynomial"
    mons = dict(rep.polynomial)
    assert (1, 0) in mons and (0, 1) in mons and (0, 0) not in mons


def test_density_check_orbit_matches_symbolic():
    # specialize-then-iterate must agree with the symbolic orbit check
    t = MRatFun.var(F2, 1, 0)
    A = AdditiveMap([[parse_ore("F + 1", F2)]])
    alpha = [MRatFun.one(F2, 1) / t]
    numeric = density_check_orbit(A, alpha, 25, 3)
    symbolic = density_check(orbit(A, alpha, 25), 3)
    assert numeric.is_dense() and symbolic.is_dense()
    Adeg = AdditiveMap([[OrePoly.F(F2), OrePoly.zero(F2)],
                        [OrePoly.zero(F2), OrePoly.F(F2)]])
    rep = density_check_orbit(Adeg, [t, t], 6, 1)
    assert rep.outcome == "vanishing-polynomial"


def test_construct_independent_points():
    t = MRatFun.var(F2, 1, 0)
    gam = construct_independent_points(2, [], F2, 1)
    assert repr(gam[0]) == "(1) / (t1)"
    assert "t1 + 1" in repr(gam[1])
    ok, rel = check_independence(gam, [], 4, 2)
    assert ok, rel
    # the pole must avoid zeros and poles of the deltas
    g = construct_independent_points(1, [t], F2, 1)
    assert "t1 + 1" in repr(g[0])
    ok, rel = check_independence(g, [t], 3, 2)
    assert ok, rel


def test_planted_dependence_detected():
    t = MRatFun.var(F2, 1, 0)
    ok, rel = check_independence([t, t * t], [], 2, 2)
    assert not ok
    labels = {(lab, i, e) for lab, i, e, c in rel}
    assert ("gamma", 0, 1) in labels and ("gamma", 1, 0) in labels


def test_witness_and_orbit_sequence():
    sp = split_endomorphism([[OrePoly.F(F2), OrePoly.zero(F2)],
                             [OrePoly.zero(F2), parse_ore("F+1", F2)]])
    w = witness_A(sp, 1)
    assert len(w.alpha) == 2
    alpha0 = [MRatFun.var(F2, 1, 0)]
    gam = construct_independent_points(1, alpha0, F2, 1)
    seq = orbit_sequence(sp.h, sp.A0, sp.A1, alpha0, gam, 4)
    assert len(seq) == 4 and len(seq[0]) == 2
