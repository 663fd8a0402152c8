import warnings
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from oracles import brieskorn_exponents
from nspec.errors import HypothesisError
from nspec.fracpoly import FracPoly, mass, tpow
from nspec.hodge import (
    BCFReadingWarning,
    _sign_settles,
    augment,
    augmented_spectrum,
    bcf_direct,
    bcf_enumerate,
    crosscheck_yomdin,
    hodge_spectrum,
    hodge_spectrum_theorem2,
    pairwise_condition,
    slice_beta,
    slice_spectra,
    stable_threshold,
    yomdin_series,
)
from nspec.newton import axis_gaps, build_polyhedron
from nspec.polyparse import Support, load_input
from nspec.spectrum import hodge_spectrum_plane, spectrum_plane


def test_augment_example():
    a = augment(Support.of((3, 0, 0), (0, 2, 1)))
    r = a.r
    assert set(a.new_vertices) == {(0, r, 0), (0, 0, r)}
    assert a.gamma_tilde[(3, 0, 0)] == 4
    assert a.gamma_tilde[(0, 2, 1)] == 3


def test_augment_rejects_convenient_and_planar():
    with pytest.raises(HypothesisError, match="convenient"):
        augment(load_input("x^2+y^3+z^4"))
    with pytest.raises(HypothesisError, match="coordinate plane"):
        augment(Support.of((4, 2, 0), (2, 3, 0)))
    assert pairwise_condition(Support.of((4, 2, 0), (2, 3, 0))) == (0, 2)
    with pytest.raises(HypothesisError, match="wrong number of variables"):
        augment(Support.of((1, 1, 1, 1)))


def test_threshold_matches_the_burial_of_an_interior_vertex():
    # (1,2,4) is buried by conv{(0,3,0),(4,0,0),(0,0,r)} exactly when 2/3 + 1/4 + 4/r >= 1
    s = Support.of((0, 3, 0), (1, 2, 4), (4, 0, 0), (4, 2, 1))
    assert stable_threshold(s) == 49
    assert (1, 2, 4) not in augment(s, 48).polyhedron.vertices
    assert (1, 2, 4) in augment(s, 49).polyhedron.vertices
    assert augment(s).r >= 49
    assert crosscheck_yomdin(s).ok


@pytest.mark.parametrize(
    "text, bound",
    [("x^3+y^2*z", 4), ("x^4*y^2+x^2*y^3", 9), ("x^4*y^6", 11), ("x^6*y^9", 16), ("x^5*y^7", 13)],
)
def test_threshold_matches_stated_ranges(text, bound):
    assert stable_threshold(load_input(text)) == bound


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=4).filter(lambda a: a[-1] != 0))
def test_sign_settles(coeffs):
    t = _sign_settles(tuple(coeffs))
    lead = coeffs[-1]
    for r in range(t, t + 200):
        assert sum(c * r**k for k, c in enumerate(coeffs)) * lead > 0


def _non_isolated():
    pt = st.tuples(*(st.integers(0, 5) for _ in range(3))).filter(any)

    def ok(s):
        return (
            bool(axis_gaps(s))
            and pairwise_condition(s) is None
            and build_polyhedron(s).is_simplicial()
        )

    return st.lists(pt, min_size=2, max_size=5, unique=True).map(
        lambda ps: Support(3, tuple(ps))
    ).filter(ok)


@settings(max_examples=15, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(_non_isolated())
def test_crosscheck_on_random_non_isolated(s):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BCFReadingWarning)
        chk = crosscheck_yomdin(s)
    assert chk.ok, chk.to_json()
    assert chk.differences[0] == chk.differences[1]


@given(st.integers(2, 7), st.integers(2, 5), st.integers(2, 5))
@settings(max_examples=12)
def test_thom_sebastiani_for_isolated_inputs_with_gaps(a, b, c):
    # y*z*(y^(b-1) + z^(c-1)) has an isolated singularity, so its Hodge spectrum is its spectrum
    s = load_input(f"x^{a}+y^{b}*z+y*z^{c}")
    g = load_input(f"x^{b}*y+x*y^{c}+x^40+y^40")
    plane = spectrum_plane(build_polyhedron(g))
    expected = FracPoly.from_exponents(brieskorn_exponents((a,))) * plane
    assert hodge_spectrum(s) == expected
    assert hodge_spectrum_plane(build_polyhedron(load_input(f"x^{b}*y+x*y^{c}"))) == plane


def test_bcf_readings():
    for text in ("x^3+y^2*z", "x^2*y+y^2*z+z^2*x", "x^5+y^3*z+y*z^4"):
        a = augment(load_input(text))
        enum = Counter((f.vertices, i) for f, i in bcf_enumerate(a))
        direct = Counter((f.vertices, i) for f, i in bcf_direct(a.original))
        assert enum == direct


def test_x3_y2z_data():
    s = load_input("x^3+y^2*z")
    a = augment(s)
    assert sorted((f.vertices, i) for f, i in a.bcf) == [
        (((0, 2, 1), (3, 0, 0)), 1),
        (((0, 2, 1), (3, 0, 0)), 2),
    ]
    assert hodge_spectrum_theorem2(s) == tpow("4/3") + tpow("5/3")
    slices = [slice_beta(s, d) for d in slice_spectra(s)]
    assert [d.mu for d in slices] == [0, 2]
    assert slices[1].alphas == (Fraction(5, 6), Fraction(7, 6))


def test_milnor_number_grows_linearly():
    s = load_input("x^4*y^2+x^2*y^3")
    r0 = augment(s).r
    ms = [mass(augmented_spectrum(s, r)) for r in (r0, r0 + 1, r0 + 2)]
    assert ms[1] - ms[0] == ms[2] - ms[1] == 2


def test_yomdin_series_needs_betas():
    s = load_input("x^3+y^2*z")
    with pytest.raises(Exception):
        yomdin_series(slice_spectra(s), 5)


def test_report_json():
    j = crosscheck_yomdin(load_input("x^3+y^2*z")).to_json()
    assert j["ok"] is True
    assert j["hodge_spectrum"] == [{"alpha": "4/3", "mult": 1}, {"alpha": "5/3", "mult": 1}]
    assert j["slices"][1]["betas"] == ["1/2", "1/2"]
