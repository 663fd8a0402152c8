"""Acceptance suite: one criterion marker per requirement, exact equality only.

Run with ``pytest tests/test_acceptance.py`` (or ``python3 tests/test_acceptance.py``);
the terminal summary prints one PASS/FAIL line per criterion.
"""

import time
import warnings
from fractions import Fraction
from math import gcd

import pytest

from conftest import T444, f_family
from oracles import brieskorn_exponents, brieskorn_support
from nspec.corpus import non_isolated_variants
from nspec.errors import NotSimplicialError
from nspec.facepoly import face_q, face_qhat, face_s
from nspec.fracpoly import BivarPoly, FracPoly, mass, phi, reflect, slice_le, specialize_u, tpow
from nspec.hodge import (
    BCFReadingWarning,
    augment,
    augmented_spectrum,
    crosscheck_yomdin,
    hodge_spectrum_theorem2,
    slice_beta,
    slice_spectra,
)
from nspec.newton import build_polyhedron
from nspec.pairs import check_jordan, eigen_classes, jordan_counts_via_q, pairs_conjectural, pairs_steenbrink
from nspec.polyparse import Support, load_input
from nspec.spectrum import defect_theorem1, hodge_spectrum_plane, spectrum_eq4, spectrum_steenbrink
from nspec.zeta import mzeta, verify_zeta_identity

criterion = pytest.mark.criterion

X3_Y2Z = "x^3+y^2*z"
PLANE_B = "x^4*y^2+x^2*y^3"
MONOMIALS = [(4, 6), (6, 9), (5, 7)]


def frac_part(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def tsum(exps) -> FracPoly:
    return FracPoly((Fraction(e), 1) for e in exps)


def monomial_hodge(a: int, b: int) -> FracPoly:
    e = gcd(a, b)
    return tsum(Fraction(j, e) for j in range(e, 2 * e)) - tsum(Fraction(j, e) for j in range(1, e))


def monomial_augmented(a: int, b: int, r: int) -> FracPoly:
    return (
        monomial_hodge(a, b)
        + tsum(Fraction(j, a) + (frac_part(Fraction(-j * b, a)) + k) / r for j in range(1, a) for k in range(r))
        + tsum(Fraction(j, b) + (frac_part(Fraction(-j * a, b)) + k) / r for j in range(1, b) for k in range(r))
    )


def plane_b_augmented(r: int) -> FracPoly:
    return (
        tsum(Fraction(j, 8) for j in (3, 4, 6, 7, 9, 10, 12, 13))
        + tpow(1, 2)
        + tsum(Fraction(1, 2) + Fraction(k, r) for k in range(1, r))
        + tsum(Fraction(1, 2) + Fraction(1, 2 * r) + Fraction(k, r) for k in range(r))
    )


def x3_y2z_augmented(r: int) -> FracPoly:
    return (
        tpow("4/3")
        + tpow("5/3")
        + tsum(Fraction(5 * r + 3 + 6 * k, 6 * r) for k in range(r))
        + tsum(Fraction(7 * r + 3 + 6 * k, 6 * r) for k in range(r))
    )


def augmented_support(s: Support, r: int) -> Support:
    return Support(s.n, s.points + augment(s, r).new_vertices)


# 1 -----------------------------------------------------------------------

C1 = "defect golden values of the x^j family"


@criterion(1, C1)
def test_defect_j15():
    d = defect_theorem1(build_polyhedron(load_input(f_family(15))))
    assert d == tpow("3/2") + tsum(1 + Fraction(i, 15) for i in range(1, 15))


@criterion(1, C1)
def test_defect_j17():
    # Expected to fail: this stated value gives mu = 104, Kouchnirenko gives 105,
    # and the vertex (4, 2, 0) lies on five 2-faces, so it contributes 2 t^(3/2)
    d = defect_theorem1(build_polyhedron(load_input(f_family(17))))
    assert d == tpow("3/2") + tpow("4/3") + tpow("5/3")


@criterion(1, C1)
def test_defect_j16_rejected():
    with pytest.raises(NotSimplicialError, match="not simplicial"):
        defect_theorem1(build_polyhedron(load_input(f_family(16))))


# 2 -----------------------------------------------------------------------

C2 = "Hodge spectrum golden values"


@criterion(2, C2)
def test_hodge_x3_y2z():
    assert hodge_spectrum_theorem2(load_input(X3_Y2Z)) == tpow("4/3") + tpow("5/3")


@criterion(2, C2)
@pytest.mark.parametrize("a, b", MONOMIALS)
def test_hodge_monomial(a, b):
    p = build_polyhedron(load_input(f"x^{a}*y^{b}"))
    assert hodge_spectrum_plane(p) == monomial_hodge(a, b)


@criterion(2, C2)
def test_hodge_plane_binomial():
    expected = tsum(Fraction(j, 8) for j in (3, 6, 7, 9, 10, 12, 13)) + tpow(1, 2)
    assert hodge_spectrum_plane(build_polyhedron(load_input(PLANE_B))) == expected


# 3 -----------------------------------------------------------------------

C3 = "spectra of f + l^r at the stated r"


@criterion(3, C3)
@pytest.mark.parametrize("a, b", MONOMIALS)
def test_augmented_monomial(a, b):
    s = load_input(f"x^{a}*y^{b}")
    for r in (a + b + 1, a + b + 2):
        sp = augmented_spectrum(s, r)
        assert sp == monomial_augmented(a, b, r)
        assert mass(sp) == (a + b - 2) * r + 1


@criterion(3, C3)
def test_augmented_plane_binomial():
    s = load_input(PLANE_B)
    for r in (9, 10):
        sp = augmented_spectrum(s, r)
        assert sp == plane_b_augmented(r)
        assert mass(sp) == 2 * r + 9


@criterion(3, C3)
@pytest.mark.parametrize("r", range(4, 9))
def test_augmented_x3_y2z(r):
    sp = augmented_spectrum(load_input(X3_Y2Z), r)
    assert sp == x3_y2z_augmented(r)
    assert mass(sp) == 2 * r + 2


# 4 -----------------------------------------------------------------------

C4 = "slice data alpha and beta"


def slice_pairs(text: str) -> dict[int, list[tuple[Fraction, Fraction]]]:
    s = load_input(text)
    out = {}
    for d in slice_spectra(s):
        d = slice_beta(s, d)
        out[d.i] = sorted(zip(d.alphas, d.betas))
    return out


@criterion(4, C4)
def test_beta_plane_binomial():
    assert slice_pairs(PLANE_B) == {0: [(Fraction(1, 2), Fraction(0))], 1: [(Fraction(1, 2), Fraction(1, 2))]}


@criterion(4, C4)
def test_beta_x3_y2z():
    half = Fraction(1, 2)
    assert slice_pairs(X3_Y2Z) == {1: [], 2: [(Fraction(5, 6), half), (Fraction(7, 6), half)]}


@criterion(4, C4)
@pytest.mark.parametrize("a, b", MONOMIALS)
def test_beta_monomial(a, b):
    assert slice_pairs(f"x^{a}*y^{b}") == {
        0: [(Fraction(j, b), frac_part(Fraction(-j * a, b))) for j in range(1, b)],
        1: [(Fraction(j, a), frac_part(Fraction(-j * b, a))) for j in range(1, a)],
    }


# 5 -----------------------------------------------------------------------

C5 = "the two spectrum routes agree on the corpus"


@criterion(5, C5)
def test_routes_agree(corpus):
    start = time.perf_counter()
    bad = []
    for idx, s in enumerate(corpus):
        p = build_polyhedron(s)
        if spectrum_eq4(p).sp != spectrum_steenbrink(p):
            bad.append(idx)
    assert bad == []
    assert time.perf_counter() - start < 60


# 6 -----------------------------------------------------------------------

C6 = "zeta identity on the corpus and golden inputs"

GOLDEN = [f_family(15), f_family(17), T444, "x^3+y^2", "x^2+y^3+z^5", "x^3+y^3+z^4+x*y*z"]


@criterion(6, C6)
def test_zeta_corpus(corpus):
    assert [i for i, s in enumerate(corpus) if not verify_zeta_identity(s)[0]] == []


@criterion(6, C6)
@pytest.mark.parametrize("text", GOLDEN)
def test_zeta_golden(text):
    ok, diff = verify_zeta_identity(load_input(text))
    assert ok and diff == FracPoly.zero()


@criterion(6, C6)
def test_zeta_golden_augmented():
    # the stated spectra of f + l^r must reduce to the zeta data of the augmented support
    cases = [(X3_Y2Z, r, x3_y2z_augmented(r)) for r in range(4, 9)]
    cases.append((PLANE_B, 9, plane_b_augmented(9)))
    cases += [(f"x^{a}*y^{b}", a + b + 1, monomial_augmented(a, b, a + b + 1)) for a, b in MONOMIALS]
    for text, r, sp in cases:
        assert mzeta(augmented_support(load_input(text), r)) == phi(sp), (text, r)


@criterion(6, C6)
def test_zeta_brieskorn():
    for exps in [(2, 3), (3, 5, 7), (4, 4, 4)]:
        assert mzeta(brieskorn_support(exps)) == phi(FracPoly.from_exponents(brieskorn_exponents(exps)))


# 7 -----------------------------------------------------------------------

C7 = "structural properties on the corpus"


@criterion(7, C7)
def test_structure(corpus):
    for s in corpus:
        p = build_polyhedron(s)
        rep = spectrum_eq4(p)
        assert reflect(rep.gamma_sp, 3) == rep.gamma_sp
        assert slice_le(rep.sp, 1) == slice_le(rep.gamma_sp, 1)
        assert all(1 < e < 2 for e in rep.defect.exponents())
        assert reflect(rep.sp, 3) == rep.sp
        for f in p.compact_faces():
            subs = [t for t in p.compact_faces() if t <= f]
            assert face_qhat(f) == sum((face_q(t) for t in subs), FracPoly())
            if f.dim == 2:
                assert face_s(f, 3) == sum((phi(face_q(t)) for t in subs), FracPoly())


# 8 -----------------------------------------------------------------------

C8 = "spectral pairs by faces equal pairs by r_tau"


@criterion(8, C8)
def test_pairs_corpus(corpus):
    for s in corpus:
        p = build_polyhedron(s)
        a = pairs_conjectural(p)
        assert a == pairs_steenbrink(p)
        assert specialize_u(a) == spectrum_eq4(p).sp


@criterion(8, C8)
def test_pairs_t444():
    p = build_polyhedron(load_input(T444))
    expected = (
        BivarPoly.lift(tpow(1), 3)
        + BivarPoly.lift(tpow(2), 1)
        + BivarPoly.lift(tpow("5/4") + tpow("3/2") + tpow("7/4"), 2) * 3
    )
    assert pairs_conjectural(p) == expected
    assert pairs_steenbrink(p) == expected


# 9 -----------------------------------------------------------------------

C9 = "Jordan block counts are consistent"


@criterion(9, C9)
def test_jordan_corpus(corpus):
    # check_jordan raises ConjectureFinding on any disagreement
    for s in corpus:
        p = build_polyhedron(s)
        jc = check_jordan(p)
        for l in eigen_classes(p):
            assert jc.n2[l] == jordan_counts_via_q(p, l)


@criterion(9, C9)
def test_jordan_t444():
    jc = check_jordan(build_polyhedron(load_input(T444)))
    assert jc.n2_unipotent == 1
    assert not any(jc.n2.values()) and not any(jc.n3.values())


@criterion(9, C9)
def test_jordan_brieskorn():
    for exps in [(2, 3, 5), (3, 4, 5), (4, 4, 4), (2, 7, 9)]:
        jc = check_jordan(build_polyhedron(brieskorn_support(exps)))
        assert jc.n2_unipotent == 0
        assert not any(jc.n2.values()) and not any(jc.n3.values())


# 10 ----------------------------------------------------------------------

C10 = "augmented spectrum minus slice series equals the Hodge spectrum"


@criterion(10, C10)
def test_crosscheck_x3_y2z():
    for rs in [None, (4, 5), (7, 8)]:
        chk = crosscheck_yomdin(load_input(X3_Y2Z), rs)
        assert chk.ok
        assert chk.differences[0] == tpow("4/3") + tpow("5/3")


@criterion(10, C10)
def test_crosscheck_corpus_variants(corpus):
    failed = []
    count = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BCFReadingWarning)
        for idx, s in enumerate(corpus):
            for v in non_isolated_variants(s):
                count += 1
                chk = crosscheck_yomdin(v)
                if not (chk.ok and chk.differences[0] == chk.differences[1]):
                    failed.append((idx, v.points))
    assert count > 0
    assert failed == []


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
