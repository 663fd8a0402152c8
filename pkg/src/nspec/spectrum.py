"""Spectrum from the Newton polyhedron, by two independent routes.

Route A sums over interior compact faces (the Gamma-spectrum) and, for
three variables, adds the defect carried by the vertices.  Route B is the
alternating sum of half-open parallelepiped polynomials over all compact
faces, reorganized as ``sum_tau r_tau q_tau`` with combinatorial
polynomials ``r_tau``.  ``spectrum_eq4`` always computes both and refuses to
return if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisError, InvariantError, NotConvenientError
from .facepoly import face_q, face_qhat
from .fracpoly import FracPoly, geometric, mass, tpow
from .newton import Face, NewtonPolyhedron, axis_gaps, vertex_gamma

ONE_MINUS_T = FracPoly.one() - tpow(1)


def _interior_sum(p: NewtonPolyhedron) -> FracPoly:
    """Gamma-spectrum formula without checking hypotheses."""
    n = p.n
    out = FracPoly()
    n_int_vertices = 0
    for f in p.faces:
        if f.is_empty or not f.compact or not f.interior:
            continue
        if f.dim == 0:
            n_int_vertices += 1
        out += geometric(0, n - f.dim - 1) * face_q(f)
    return out + geometric(0, n - 2).shift(1) * n_int_vertices


def gamma_spectrum(p: NewtonPolyhedron) -> FracPoly:
    """Sum over interior compact faces of ``(1 + ... + t^(c-1)) q``, with
    ``c = n - dim``, plus ``(t + ... + t^(n-1))`` per interior vertex."""
    p.require(simplicial=True, convenient=True)
    return _interior_sum(p)


def defect_theorem1(p: NewtonPolyhedron) -> FracPoly:
    """``sum over compact vertices of (gamma - 3) q t`` for three variables."""
    p.require(n=(3,), simplicial=True, convenient=True)
    out = FracPoly()
    for v in p.faces_of_dim(0, "compact"):
        out += face_q(v).shift(1) * (vertex_gamma(p, v) - 3)
    return out


def combinatorial_polys(p: NewtonPolyhedron) -> dict[int, FracPoly]:
    """``r_tau = sum_{sigma >= tau} (-1)^(n-d) (1-t)^(k-d)`` over compact
    ``sigma``, keyed by the face id of each compact ``tau`` (empty face
    included)."""
    compact = p.compact_faces()
    weight = {}
    for s in compact:
        if s.k < s.d:
            raise InvariantError(f"face {s.vertices} has k={s.k} < d={s.d}")
        weight[s.id] = (ONE_MINUS_T ** (s.k - s.d)) * (-1) ** (p.n - s.d)
    return {
        t.id: sum((weight[s.id] for s in compact if t <= s), FracPoly())
        for t in compact
    }


def spectrum_steenbrink(p: NewtonPolyhedron) -> FracPoly:
    """Alternating sum of ``qhat`` over compact faces, checked against the
    ``sum r_tau q_tau`` form."""
    p.require(simplicial=True, convenient=True)
    direct = FracPoly()
    for s in p.compact_faces():
        direct += (ONE_MINUS_T ** (s.k - s.d)) * face_qhat(s) * (-1) ** (p.n - s.d)
    r = combinatorial_polys(p)
    regrouped = FracPoly()
    for t in p.compact_faces():
        regrouped += r[t.id] * face_q(t)
    if direct != regrouped:
        raise InvariantError(
            f"alternating qhat sum {direct} differs from r_tau q_tau sum {regrouped}"
        )
    return direct


@dataclass(frozen=True)
class SpectrumReport:
    gamma_sp: FracPoly
    defect: FracPoly
    sp: FracPoly
    sp_steenbrink: FracPoly
    mu: int
    route_notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "gamma_spectrum": self.gamma_sp.to_json(),
            "defect": self.defect.to_json(),
            "spectrum": self.sp.to_json(),
            "spectrum_steenbrink": self.sp_steenbrink.to_json(),
            "mu": self.mu,
            "routes": list(self.route_notes),
        }


def spectrum_eq4(p: NewtonPolyhedron) -> SpectrumReport:
    """Full spectrum for three variables: Gamma-spectrum plus vertex defect,
    verified against the alternating-sum route."""
    p.require(n=(3,), simplicial=True, convenient=True)
    gsp = gamma_spectrum(p)
    dfx = defect_theorem1(p)
    sp = gsp + dfx
    other = spectrum_steenbrink(p)
    if sp != other:
        raise InvariantError(f"route mismatch: interior-face route {sp} != alternating route {other}")
    notes = (
        "sp: interior-face sum plus vertex defect",
        "sp_steenbrink: alternating qhat sum over compact faces, regrouped as sum r_tau q_tau",
    )
    return SpectrumReport(gsp, dfx, sp, other, mass(sp), notes)


def spectrum_plane(p: NewtonPolyhedron) -> FracPoly:
    """Spectrum of a convenient two-variable germ."""
    p.require(n=(2,))
    if not p.is_convenient():
        raise NotConvenientError("not convenient: use hodge_spectrum_plane")
    return _interior_sum(p)


def unbounded_edge_vertex(p: NewtonPolyhedron, i: int) -> Face:
    """The vertex of the non-coordinate non-compact edge parallel to axis ``i``."""
    for f in p.faces_of_dim(1):
        if f.recession == frozenset({i}) and f.interior:
            return p.face_of(f.vertices)
    raise HypothesisError(f"no non-compact face parallel to axis {i}")


def hodge_spectrum_plane(p: NewtonPolyhedron) -> FracPoly:
    """Hodge spectrum of a non-convenient two-variable germ."""
    p.require(n=(2,))
    gaps = axis_gaps(p.support)
    if not gaps:
        raise HypothesisError("input is convenient: use spectrum_plane")
    out = _interior_sum(p)
    for i in sorted(gaps):
        out -= face_q(unbounded_edge_vertex(p, i))
    return out
