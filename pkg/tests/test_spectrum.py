from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import T444, f_family
from oracles import (
    brieskorn_exponents,
    brieskorn_support,
    gamma_spectrum_brute,
    kouchnirenko_mu,
    spectrum_from_lattice_and_zeta,
    tpqr_exponents,
)
from nspec.errors import HypothesisError, NotSimplicialError
from nspec.fracpoly import FracPoly, geometric, mass, reflect, slice_le, tpow
from nspec.newton import build_polyhedron
from nspec.polyparse import Support, load_input
from nspec.spectrum import (
    defect_theorem1,
    gamma_spectrum,
    hodge_spectrum_plane,
    spectrum_eq4,
    spectrum_plane,
    spectrum_steenbrink,
)


def brieskorn(exps):
    return brieskorn_support(exps)


def brieskorn_spectrum(exps):
    return FracPoly.from_exponents(brieskorn_exponents(exps))


def tpqr_spectrum(p, q, r):
    return FracPoly.from_exponents(tpqr_exponents(p, q, r))


convenient3 = st.builds(
    lambda ax, ex: Support(3, tuple(sorted({(ax[0], 0, 0), (0, ax[1], 0), (0, 0, ax[2])} | set(ex)))),
    st.tuples(*(st.integers(2, 8) for _ in range(3))),
    st.lists(st.tuples(*(st.integers(0, 6) for _ in range(3))).filter(any), max_size=4),
).filter(lambda s: build_polyhedron(s).is_simplicial())

convenient2 = st.builds(
    lambda ax, ex: Support(2, tuple(sorted({(ax[0], 0), (0, ax[1])} | set(ex)))),
    st.tuples(st.integers(2, 12), st.integers(2, 12)),
    st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)).filter(any), max_size=4),
)


@given(st.tuples(*(st.integers(2, 8) for _ in range(3))))
def test_brieskorn_three_variables(exps):
    p = build_polyhedron(brieskorn(exps))
    rep = spectrum_eq4(p)
    assert rep.sp == brieskorn_spectrum(exps)
    assert spectrum_steenbrink(p) == rep.sp
    assert rep.mu == (exps[0] - 1) * (exps[1] - 1) * (exps[2] - 1)


@given(st.tuples(st.integers(2, 15), st.integers(2, 15)))
def test_brieskorn_two_variables(exps):
    p = build_polyhedron(brieskorn(exps))
    assert spectrum_plane(p) == brieskorn_spectrum(exps)
    assert spectrum_steenbrink(p) == brieskorn_spectrum(exps)


@given(st.integers(2, 20))
def test_one_variable(a):
    assert spectrum_steenbrink(build_polyhedron(brieskorn((a,)))) == geometric(1, a - 1, Fraction(1, a))


@given(st.integers(3, 9), st.integers(3, 9), st.integers(3, 9))
def test_tpqr(p, q, r):
    assume(Fraction(1, p) + Fraction(1, q) + Fraction(1, r) < 1)
    s = load_input(f"x^{p}+y^{q}+z^{r}+x*y*z")
    rep = spectrum_eq4(build_polyhedron(s))
    assert rep.sp == tpqr_spectrum(p, q, r)
    assert rep.gamma_sp == tpow(1) + tpow(2)


@settings(max_examples=40)
@given(convenient3)
def test_milnor_number_matches_kouchnirenko(s):
    p = build_polyhedron(s)
    assert spectrum_eq4(p).mu == kouchnirenko_mu(s)


@given(convenient2)
def test_plane_milnor_number_matches_kouchnirenko(s):
    p = build_polyhedron(s)
    assert mass(spectrum_plane(p)) == kouchnirenko_mu(s)


@settings(max_examples=40)
@given(convenient3)
def test_structure(s):
    p = build_polyhedron(s)
    rep = spectrum_eq4(p)
    assert rep.sp == rep.gamma_sp + rep.defect
    assert rep.sp == spectrum_steenbrink(p)
    assert reflect(rep.gamma_sp, 3) == rep.gamma_sp
    assert reflect(rep.sp, 3) == rep.sp
    assert slice_le(rep.sp, 1) == slice_le(rep.gamma_sp, 1)
    assert all(1 < e < 2 for e in rep.defect.exponents())
    assert all(0 < e < 3 and c > 0 for e, c in rep.sp.items())


@given(convenient2)
def test_plane_routes_agree_and_are_symmetric(s):
    p = build_polyhedron(s)
    sp = spectrum_plane(p)
    assert sp == spectrum_steenbrink(p)
    assert reflect(sp, 2) == sp
    with pytest.raises(HypothesisError, match="convenient"):
        hodge_spectrum_plane(p)


def test_t444_report():
    rep = spectrum_eq4(build_polyhedron(load_input(T444)))
    assert rep.gamma_sp == tpow(1) + tpow(2)
    assert rep.defect == (tpow("5/4") + tpow("3/2") + tpow("7/4")) * 3
    assert rep.mu == 11
    j = rep.to_json()
    assert j["mu"] == 11
    assert FracPoly.from_json(j["spectrum"]) == rep.sp


def test_cusp():
    assert spectrum_plane(build_polyhedron(load_input("x^3+y^2"))) == tpow("5/6") + tpow("7/6")


def test_gamma_spectrum_of_brieskorn_has_no_defect():
    p = build_polyhedron(brieskorn((3, 4, 5)))
    assert defect_theorem1(p) == FracPoly.zero()
    assert gamma_spectrum(p) == brieskorn_spectrum((3, 4, 5))


def test_hypotheses_enforced():
    with pytest.raises(NotSimplicialError, match="not simplicial"):
        defect_theorem1(build_polyhedron(load_input(f_family(16))))
    with pytest.raises(HypothesisError, match="not convenient"):
        spectrum_eq4(build_polyhedron(load_input("x^3+y^2*z")))
    with pytest.raises(HypothesisError):
        spectrum_eq4(build_polyhedron(load_input("x^3+y^2")))


@settings(max_examples=30)
@given(convenient3)
def test_against_lattice_oracles(s):
    rep = spectrum_eq4(build_polyhedron(s))
    assert rep.gamma_sp == FracPoly(gamma_spectrum_brute(s))
    assert rep.sp == FracPoly(spectrum_from_lattice_and_zeta(s))


@pytest.mark.parametrize("j", [15, 17])
def test_x_power_family_against_lattice_oracles(j):
    s = load_input(f_family(j))
    rep = spectrum_eq4(build_polyhedron(s))
    assert rep.gamma_sp == FracPoly(gamma_spectrum_brute(s))
    assert rep.sp == FracPoly(spectrum_from_lattice_and_zeta(s))
    assert rep.mu == kouchnirenko_mu(s)


def test_x17_defect_from_the_vertex_formula():
    # (4,2,0) lies on four compact facets and z = 0; (6,0,3) on three and y = 0
    rep = spectrum_eq4(build_polyhedron(load_input(f_family(17))))
    assert rep.defect == tpow("3/2", 2) + tpow("4/3") + tpow("5/3")
    assert rep.mu == 105
