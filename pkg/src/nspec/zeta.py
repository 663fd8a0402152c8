"""Monodromy zeta data as a mod-Z spectrum, by inclusion-exclusion over
coordinate subspaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotConvenientError
from .facepoly import face_s
from .fracpoly import FracPoly, phi
from .newton import build_polyhedron
from .polyparse import Support


def mstar(s: Support, axes) -> FracPoly:
    """Sum of ``s_sigma`` over the top compact faces of the restriction to
    the coordinate subspace ``axes``; the empty subspace contributes 1."""
    axes = frozenset(axes)
    if not axes:
        return FracPoly.one()
    sub = s.restrict(axes)
    if sub is None:
        raise NotConvenientError(f"not convenient: no support point in coordinate subspace {sorted(axes)}")
    p = build_polyhedron(sub)
    p.require(simplicial=True)
    out = FracPoly()
    for f in p.faces_of_dim(p.n - 1, "compact"):
        out += face_s(f, p.n)
    return out


@dataclass(frozen=True)
class ZetaReport:
    mstar_by_subset: dict[tuple[int, ...], FracPoly]
    m: FracPoly

    def to_json(self) -> dict:
        return {
            "mstar": [
                {"axes": list(k), "value": v.to_json()}
                for k, v in sorted(self.mstar_by_subset.items(), key=lambda kv: (len(kv[0]), kv[0]))
            ],
            "m": self.m.to_json(),
        }


def zeta_report(s: Support) -> ZetaReport:
    by_subset = {}
    total = FracPoly()
    for size in range(s.n + 1):
        for axes in itertools.combinations(range(s.n), size):
            val = mstar(s, axes)
            by_subset[axes] = val
            total += val * (-1) ** (s.n - size)
    return ZetaReport(by_subset, total)


def mzeta(s: Support) -> FracPoly:
    return zeta_report(s).m


def default_spectrum(s: Support) -> FracPoly:
    """Spectrum of an isolated germ by the formula matching its dimension."""
    from .spectrum import spectrum_eq4, spectrum_plane, spectrum_steenbrink

    p = build_polyhedron(s)
    if s.n == 3:
        return spectrum_eq4(p).sp
    if s.n == 2:
        return spectrum_plane(p)
    return spectrum_steenbrink(p)


def verify_zeta_identity(s: Support, spectrum: FracPoly | None = None) -> tuple[bool, FracPoly]:
    """Compare the mod-Z reduction of the spectrum with the zeta data.

    Returns ``(ok, phi(spectrum) - mzeta)``.
    """
    sp = default_spectrum(s) if spectrum is None else spectrum
    diff = phi(sp) - mzeta(s)
    return not diff, diff
