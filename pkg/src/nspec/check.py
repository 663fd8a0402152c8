"""Run every applicable invariant on one support and collect pass/fail rows."""

from __future__ import annotations

import warnings
from collections.abc import Callable
from dataclasses import dataclass

from .errors import ConjectureFinding, HypothesisError, InvariantError, NspecError
from .facepoly import face_det, face_q, face_qhat, face_s
from .fracpoly import FracPoly, mass, phi, reflect, slice_le, specialize_u
from .newton import NewtonPolyhedron, build_polyhedron, vertex_gamma
from .polyparse import Support


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _polyhedron_checks(p: NewtonPolyhedron) -> dict[str, Callable[[], bool]]:
    def sound():
        return all(
            sum(a * x for a, x in zip(av, pt)) >= a0 for pt in p.support.points for av, a0 in p.facets
        )

    def vertex_facets():
        return all(
            sum(1 for av, a0 in p.facets if sum(a * x for a, x in zip(av, v)) == a0) >= p.n
            for v in p.vertices
        )

    def normals():
        from math import gcd

        ok = True
        for av, a0 in p.facets:
            g = 0
            for x in av:
                g = gcd(g, x)
            ok &= all(x >= 0 for x in av) and gcd(g, a0) == 1
            ok &= a0 != 0 or sum(1 for x in av if x) == 1
        return ok

    def graded():
        return all(
            any(g.dim == f.dim - 1 and g <= f for g in p.faces)
            for f in p.faces if f.dim >= 1
        )

    out = {
        "facet inequalities hold on the support": sound,
        "every vertex lies on at least n facets": vertex_facets,
        "facet normals nonnegative and primitive": normals,
        "face lattice is graded": graded,
    }
    if p.n == 3:
        out["every vertex lies on at least three 2-faces"] = lambda: all(
            vertex_gamma(p, v) >= 3 for v in p.vertices
        )
    return out


def _face_checks(p: NewtonPolyhedron) -> dict[str, Callable[[], bool]]:
    compact = p.compact_faces(include_empty=False)

    def qhat_is_sum():
        return all(
            face_qhat(s) == sum((face_q(t) for t in p.compact_faces() if t <= s), FracPoly())
            for s in compact
        )

    def s_is_phi_sum():
        return all(
            face_s(s, p.n) == sum((phi(face_q(t)) for t in p.compact_faces() if t <= s), FracPoly())
            for s in p.faces_of_dim(p.n - 1, "compact")
        )

    def q_symmetric():
        return all(reflect(face_q(s), s.dim + 1) == face_q(s) for s in compact)

    def qhat_mass():
        return all(mass(face_qhat(s)) == face_det(s) for s in p.faces_of_dim(p.n - 1, "compact"))

    return {
        "qhat equals the sum of q over subfaces": qhat_is_sum,
        "s equals the sum of phi(q) over subfaces": s_is_phi_sum,
        "q is palindromic of degree dim+1": q_symmetric,
        "qhat(1) equals the lattice index on top faces": qhat_mass,
    }


def _isolated_checks(s: Support, p: NewtonPolyhedron) -> dict[str, Callable[[], bool]]:
    from .spectrum import gamma_spectrum, spectrum_eq4, spectrum_plane, spectrum_steenbrink
    from .zeta import mzeta

    n = s.n
    cache: dict[str, object] = {}

    def sp() -> FracPoly:
        if "sp" not in cache:
            cache["sp"] = spectrum_eq4(p).sp if n == 3 else spectrum_plane(p) if n == 2 else spectrum_steenbrink(p)
        return cache["sp"]

    def gsp() -> FracPoly:
        if "gsp" not in cache:
            cache["gsp"] = gamma_spectrum(p)
        return cache["gsp"]

    out = {
        "gamma spectrum symmetric about n/2": lambda: reflect(gsp(), n) == gsp(),
        "spectrum and gamma spectrum agree up to 1": lambda: slice_le(sp(), 1) == slice_le(gsp(), 1),
        "spectrum symmetric about n/2": lambda: reflect(sp(), n) == sp(),
        "spectral numbers in (0, n) with positive multiplicity": lambda: all(
            0 < e < n and c > 0 for e, c in sp().items()
        ),
        "phi(spectrum) equals the zeta data": lambda: phi(sp()) == mzeta(s),
        "zeta data exponents in [0, 1)": lambda: all(0 <= e < 1 for e in mzeta(s).exponents()),
    }
    if n == 3:
        from .pairs import check_jordan, pairs_conjectural, pairs_steenbrink, weight_budget
        from .spectrum import defect_theorem1

        def pairs_equal():
            return pairs_conjectural(p) == pairs_steenbrink(p)

        def jordan():
            return weight_budget(check_jordan(p)) <= mass(sp())

        out.update({
            "interior-face route equals alternating route": lambda: spectrum_eq4(p).sp == spectrum_steenbrink(p),
            "defect exponents in (1, n-1)": lambda: all(1 < e < n - 1 for e in defect_theorem1(p).exponents()),
            "spectral pairs by faces equal pairs by r_tau": pairs_equal,
            "pairs specialize to the spectrum": lambda: specialize_u(pairs_conjectural(p)) == sp(),
            "pair weights in [0, 4]": lambda: all(0 <= w <= 4 for w in pairs_steenbrink(p).u_exponents()),
            "Jordan n2 by lengths equals n2 by q; weight budget within mu": jordan,
        })
    elif n == 2:
        out["defect vanishes for n=2"] = lambda: spectrum_steenbrink(p) == sp()
    return out


def _non_isolated_checks(s: Support) -> dict[str, Callable[[], bool]]:
    from .hodge import augment, crosscheck_yomdin, slice_spectra

    def stable():
        a = augment(s)
        b = augment(s, 2 * a.r)
        return a.signature() == b.signature()

    def slice_pairing():
        from .hodge import slice_beta

        ok = True
        for d in slice_spectra(s):
            d = slice_beta(s, d)
            ok &= len(d.alphas) == len(d.betas) == d.mu
            if s.n == 3:
                pairs = sorted(zip(d.alphas, d.betas))
                for a, b in pairs:
                    if a == 1:
                        continue
                    partner = [(a2, b2) for a2, b2 in pairs if a2 == 2 - a and (b + b2).denominator == 1]
                    ok &= bool(partner)
        return ok

    def mu_linear():
        from .hodge import augmented_spectrum

        a = augment(s)
        total = sum(d.mu for d in slice_spectra(s))
        m1 = mass(augmented_spectrum(s, a.r))
        m2 = mass(augmented_spectrum(s, a.r + 1))
        return m2 - m1 == total

    return {
        "augmented data stable under doubling r": stable,
        "slice spectral numbers pair to 2 with integral beta sums": slice_pairing,
        "Milnor number grows by the slice Milnor numbers per unit r": mu_linear,
        "augmented spectrum minus slice series equals the Hodge spectrum": lambda: crosscheck_yomdin(s).ok,
    }


def run_checks(s: Support) -> list[CheckResult]:
    """All checks that apply to ``s``.

    Hypothesis failures of the input itself propagate as ``HypothesisError``;
    failures inside a check are recorded as failed rows.
    """
    from .newton import axis_gaps

    p = build_polyhedron(s)
    gaps = axis_gaps(s)
    checks = dict(_polyhedron_checks(p))
    if not gaps:
        p.require(simplicial=True, convenient=True)
        checks.update(_face_checks(p))
        checks.update(_isolated_checks(s, p))
    else:
        p.require(simplicial=True)
        checks.update(_face_checks(p))
        checks.update(_non_isolated_checks(s))
    out = []
    for name, fn in checks.items():
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                ok = bool(fn())
            out.append(CheckResult(name, ok))
        except ConjectureFinding as exc:
            out.append(CheckResult(name, False, f"conjecture finding: {exc} {exc.details}"))
        except (InvariantError, HypothesisError) as exc:
            out.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
        except NspecError as exc:
            out.append(CheckResult(name, False, str(exc)))
    return out

