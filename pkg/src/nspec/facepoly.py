"""Lattice polynomials and invariants of compact simplicial faces.

For a compact face with vertices ``xi_1..xi_m`` every lattice point of the
cone over the face is ``sum c_k xi_k`` with ``c_k >= 0``.  The points with
all ``c_k`` in ``[0, 1)`` form a finite group (the lattice of the linear span
modulo the sublattice spanned by the vertices).  Grading a point by
``sum c_k`` puts every vertex in degree 1.

``q`` collects the points with every ``c_k`` in ``(0, 1)``, ``qhat`` those in
``[0, 1)``.  The group is enumerated through the Smith form, so the cost is
the group order rather than the volume of a bounding box; the box scan is
kept as ``method="scan"`` for cross-checking.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from .errors import InvariantError, NotSimplicialError
from .fracpoly import FracPoly, geometric
from .lattice import combine, parallelepiped_coefficients, smith_normal_form, solve_combination
from .newton import Face, NewtonPolyhedron

Point = tuple[int, ...]


@dataclass(frozen=True)
class _Group:
    order: int
    q: FracPoly
    qhat: FracPoly
    delta: int


@lru_cache(maxsize=4096)
def _group(vertices: tuple[Point, ...]) -> _Group:
    m = len(vertices)
    if m == 0:
        return _Group(1, FracPoly.one(), FracPoly.one(), 1)
    n = len(vertices[0])
    cols = [[vertices[k][i] for k in range(m)] for i in range(n)]
    _, d, w = smith_normal_form(cols)
    diag = [d[j][j] for j in range(m)]
    if 0 in diag:
        raise NotSimplicialError("non-simplicial face: vertices are linearly dependent")
    big = diag[-1]
    scale = [big // dj for dj in diag]
    # c_k * big as integers mod big; everything stays in int arithmetic
    rows = [[w[k][j] * scale[j] % big for j in range(m)] for k in range(m)]
    if m * big * big < 2**62:
        open_counts, all_counts = _group_counts_array(rows, diag, big)
    else:
        open_counts, all_counts = _group_counts_loop(rows, diag, big)
    order = 1
    for dj in diag:
        order *= dj
    delta = 1
    for num in all_counts:
        delta = lcm(delta, big // gcd(num, big))
    q = FracPoly.from_ratios((k, big, c) for k, c in open_counts.items())
    qhat = FracPoly.from_ratios((k, big, c) for k, c in all_counts.items())
    return _Group(order, q, qhat, delta)


def _group_counts_loop(rows, diag, big) -> tuple[Counter, Counter]:
    open_counts: Counter[int] = Counter()
    all_counts: Counter[int] = Counter()
    for ms in itertools.product(*(range(dj) for dj in diag)):
        total = 0
        interior = True
        for row in rows:
            c = sum(a * b for a, b in zip(row, ms)) % big
            if c == 0:
                interior = False
            total += c
        all_counts[total] += 1
        if interior:
            open_counts[total] += 1
    return open_counts, all_counts


def _group_counts_array(rows, diag, big) -> tuple[Counter, Counter]:
    # same walk as the loop, vectorized; callers guarantee no int64 overflow
    ms = np.indices(diag, dtype=np.int64).reshape(len(diag), -1)
    cs = (np.array(rows, dtype=np.int64) @ ms) % big
    totals = cs.sum(axis=0)
    interior = (cs != 0).all(axis=0)
    all_counts = Counter(dict(zip(*(a.tolist() for a in np.unique(totals, return_counts=True)))))
    open_counts = Counter(dict(zip(*(a.tolist() for a in np.unique(totals[interior], return_counts=True)))))
    return open_counts, all_counts


def _check_simplicial(face: Face) -> None:
    if not face.compact:
        raise ValueError("face polynomials are defined for compact faces only")
    if len(face.vertices) != face.dim + 1:
        raise NotSimplicialError(
            f"non-simplicial face: {face.dim}-dimensional face with vertices {list(face.vertices)}"
        )


def _scan(vertices: tuple[Point, ...], open_: bool) -> FracPoly:
    """Box-scan oracle: test every lattice point in ``[0, sum xi]``."""
    if not vertices:
        return FracPoly.one()
    n = len(vertices[0])
    hi = [sum(v[i] for v in vertices) for i in range(n)]
    terms = []
    for nu in itertools.product(*(range(h + 1) for h in hi)):
        c = solve_combination(vertices, nu)
        if c is None:
            continue
        if all((0 < x < 1) if open_ else (0 <= x < 1) for x in c):
            terms.append((sum(c), 1))
    return FracPoly(terms)


def face_q(face: Face, method: str = "group") -> FracPoly:
    """Open-parallelepiped polynomial of a compact simplicial face (1 for the empty face)."""
    _check_simplicial(face)
    if method == "scan":
        return _scan(face.vertices, True)
    return _group(face.vertices).q


def face_qhat(face: Face, method: str = "group") -> FracPoly:
    """Half-open parallelepiped polynomial of a compact simplicial face."""
    _check_simplicial(face)
    if method == "scan":
        return _scan(face.vertices, False)
    return _group(face.vertices).qhat


def face_delta(face: Face) -> int:
    """Lattice distance: index of the lattice generated by the lattice points of
    the affine span inside the lattice points of the linear span."""
    _check_simplicial(face)
    return _group(face.vertices).delta


def face_det(face: Face) -> int:
    """Index of the vertex lattice in the saturated lattice of its span."""
    _check_simplicial(face)
    return _group(face.vertices).order


def face_s(face: Face, n: int) -> FracPoly:
    """``mu * sum_{k<delta} t^(k/delta)`` for a compact face of dimension ``n - 1``."""
    if face.dim != n - 1:
        raise ValueError(f"face_s needs a face of dimension {n - 1}, got {face.dim}")
    delta = face_delta(face)
    mu = face_det(face) // delta
    return geometric(0, delta - 1, Fraction(1, delta)) * mu


def open_points(face: Face) -> list[tuple[Point, Fraction]]:
    """Lattice points with all coefficients in ``(0, 1)``, with their degree.

    Sorted by degree, then lexicographically.
    """
    _check_simplicial(face)
    out = []
    for c in parallelepiped_coefficients(face.vertices):
        if all(c):
            out.append((combine(face.vertices, c), sum(c, Fraction(0))))
    out.sort(key=lambda pe: (pe[1], pe[0]))
    return out


def lattice_length(face: Face) -> int:
    """Number of lattice points on an edge, minus one."""
    if face.dim != 1 or not face.compact:
        raise ValueError("lattice length is defined for compact edges")
    a, b = face.vertices
    g = 0
    for x, y in zip(a, b):
        g = gcd(g, x - y)
    return g


@dataclass(frozen=True)
class FaceInvariants:
    delta: int
    det: int
    mu: int
    q: FracPoly
    qhat: FracPoly
    s: FracPoly | None = None
    l: int | None = None
    beta: int | None = None


def face_lattice_invariants(p: NewtonPolyhedron, face: Face) -> FaceInvariants:
    """All per-face invariants, with the shortcut formulas for the lattice
    distance asserted where they apply."""
    _check_simplicial(face)
    g = _group(face.vertices)
    if g.order % g.delta:
        raise InvariantError(f"lattice distance {g.delta} does not divide index {g.order}")
    if face.dim == 0:
        v = face.vertices[0]
        expect = 0
        for x in v:
            expect = gcd(expect, x)
        if expect != g.delta:
            raise InvariantError(f"vertex {v}: lattice distance {g.delta} != gcd {expect}")
    if face.dim == p.n - 1:
        a0s = {p.facets[i][1] for i in face.facet_ids if p.facets[i][1] > 0}
        if a0s != {g.delta}:
            raise InvariantError(f"facet {face.vertices}: lattice distance {g.delta} != offset {a0s}")
    s = face_s(face, p.n) if face.dim == p.n - 1 else None
    l = lattice_length(face) if face.dim == 1 else None
    beta = None
    if face.dim == 0:
        beta = sum(1 for e in p.faces_of_dim(1, "interior-compact") if face <= e)
    return FaceInvariants(g.delta, g.order, g.order // g.delta, g.q, g.qhat, s, l, beta)
