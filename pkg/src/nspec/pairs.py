"""Conjectural spectral pairs and Jordan block counts for three variables.

Everything here is a formula family whose members are provably equivalent
to each other but whose truth is conjectural.  The functions compute the
members independently so they can be compared; disagreements and negative
counts are raised as ``ConjectureFinding`` with the offending data attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConjectureFinding, InvariantError
from .facepoly import face_delta, face_q, lattice_length
from .fracpoly import BivarPoly, inflate
from .newton import Face, NewtonPolyhedron, vertex_gamma
from .spectrum import combinatorial_polys

LABEL = "conjectural (equivalent family: pairs by faces, pairs by r_tau, Jordan counts)"


def _require(p: NewtonPolyhedron) -> None:
    p.require(n=(3,), simplicial=True, convenient=True)


def pairs_conjectural(p: NewtonPolyhedron) -> BivarPoly:
    """Interior-face expansion with weights attached to each ``t^j`` shift."""
    _require(p)
    out = BivarPoly()
    n_int_vertices = 0
    for f in p.faces:
        if f.is_empty or not f.compact or not f.interior:
            continue
        if f.dim == 0:
            n_int_vertices += 1
        c = 3 - f.dim
        q = face_q(f)
        for j in range(c):
            out += BivarPoly.lift(q.shift(j), c + 1 - 2 * j)
    out += BivarPoly({(1, 3): n_int_vertices, (2, 1): n_int_vertices})
    for v in p.faces_of_dim(0, "compact"):
        out += BivarPoly.lift(face_q(v).shift(1), 2) * (vertex_gamma(p, v) - 3)
    return out


def pairs_steenbrink(p: NewtonPolyhedron) -> BivarPoly:
    """``sum_tau r_tau(t/u^2) u^(5-d) q_tau(t)`` over compact faces."""
    _require(p)
    r = combinatorial_polys(p)
    out = BivarPoly()
    for tau in p.compact_faces():
        out += inflate(r[tau.id], 5 - tau.d) * face_q(tau)
    bad = sorted(w for w in out.u_exponents() if not 0 <= w <= 4)
    if bad:
        raise InvariantError(f"weights outside [0, 4]: {bad}")
    return out


@dataclass(frozen=True)
class JordanCounts:
    """Counts keyed by ``l`` in ``(0, 1)`` standing for ``exp(2 pi i l)``."""

    n3: dict[Fraction, int]
    n2: dict[Fraction, int]
    n2_unipotent: int

    def to_json(self) -> dict:
        def enc(d):
            return [{"l": f"{k.numerator}/{k.denominator}", "count": v} for k, v in sorted(d.items())]

        return {"label": LABEL, "n3": enc(self.n3), "n2": enc(self.n2), "n2_unipotent": self.n2_unipotent}


def eigen_classes(p: NewtonPolyhedron) -> list[Fraction]:
    """The nonzero ``k / delta`` over compact faces, reduced mod 1."""
    out = set()
    for f in p.compact_faces(include_empty=False):
        d = face_delta(f)
        out.update(Fraction(k, d) for k in range(1, d))
    return sorted(out)


def _in_class(f: Face, l: Fraction) -> bool:
    return (face_delta(f) * l).denominator == 1


def _positive_edge_points(p: NewtonPolyhedron) -> set[tuple[int, ...]]:
    pts = set()
    for e in p.faces_of_dim(1, "interior-compact"):
        a, b = e.vertices
        g = lattice_length(e)
        step = tuple((y - x) // g for x, y in zip(a, b))
        for k in range(g + 1):
            pt = tuple(x + k * s for x, s in zip(a, step))
            if all(pt):
                pts.add(pt)
    return pts


def jordan_counts(p: NewtonPolyhedron) -> JordanCounts:
    _require(p)
    int_vertices = p.faces_of_dim(0, "interior-compact")
    int_edges = p.faces_of_dim(1, "interior-compact")
    vertices = p.faces_of_dim(0, "compact")
    n3, n2 = {}, {}
    for l in eigen_classes(p):
        n3[l] = sum(1 for v in int_vertices if _in_class(v, l))
        edge_part = sum(lattice_length(e) for e in int_edges if _in_class(e, l))
        vertex_part = sum(
            sum(1 for e in int_edges if v <= e) for v in vertices if _in_class(v, l)
        )
        n2[l] = edge_part - vertex_part
        if n2[l] < 0:
            raise ConjectureFinding(
                f"negative Jordan count n2={n2[l]} for l={l}",
                {"l": str(l), "edge_part": edge_part, "vertex_part": vertex_part, "label": LABEL},
            )
    return JordanCounts(n3, n2, len(_positive_edge_points(p)))


def jordan_counts_via_q(p: NewtonPolyhedron, l: Fraction) -> int:
    """``sum over interior edges in the class of m_(1-l) + m_(2-l)`` read off ``q``."""
    _require(p)
    l = Fraction(l)
    total = 0
    for e in p.faces_of_dim(1, "interior-compact"):
        if _in_class(e, l):
            q = face_q(e)
            total += q.coeff(1 - l) + q.coeff(2 - l)
    return total


def check_jordan(p: NewtonPolyhedron) -> JordanCounts:
    """Jordan counts, with the two readings of ``n2`` compared per class."""
    jc = jordan_counts(p)
    for l, v in jc.n2.items():
        w = jordan_counts_via_q(p, l)
        if v != w:
            raise ConjectureFinding(
                f"n2 by lattice lengths ({v}) != n2 by q coefficients ({w}) for l={l}",
                {"l": str(l), "by_lengths": v, "by_q": w, "label": LABEL},
            )
    return jc


def weight_budget(jc: JordanCounts) -> int:
    return sum(3 * v for v in jc.n3.values()) + sum(2 * v for v in jc.n2.values()) + 2 * jc.n2_unipotent

