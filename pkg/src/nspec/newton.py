"""Newton polyhedra and their face lattices.

The polyhedron ``conv(support) + R_{>=0}^n`` is homogenized into the cone in
``R^{n+1}`` generated by ``(v, 1)`` for support points ``v`` and ``(e_i, 0)``
for the coordinate axes.  Faces of the polyhedron are the cone faces that
contain at least one ``(v, 1)`` generator; the cone apex plays the role of
the empty face.  A face is compact iff it contains no axis generator.

Facets are found by trying every ``n``-subset of generators as a candidate
hyperplane, in exact integer arithmetic.  That is quadratic-ish in the
support size but the supports here are small.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import HypothesisError, NotConvenientError, NotSimplicialError
from .lattice import normal_vector, rank
from .polyparse import Support

Point = tuple[int, ...]


@dataclass(frozen=True)
class Face:
    """A face of a Newton polyhedron.

    ``vertices`` are sorted; ``recession`` holds the axis indices ``i`` with
    ``e_i`` in the recession cone of the face.  ``k`` is the number of
    coordinates not identically zero on the face.  The empty face has
    ``dim == -1``.
    """

    id: int
    vertices: tuple[Point, ...]
    recession: frozenset[int]
    dim: int
    k: int
    interior: bool
    facet_ids: tuple[int, ...]
    gens: frozenset[int] = field(repr=False)

    @property
    def compact(self) -> bool:
        return not self.recession

    @property
    def d(self) -> int:
        """Dimension of the cone over the face (``dim + 1``, zero for the empty face)."""
        return self.dim + 1

    @property
    def is_empty(self) -> bool:
        return self.dim < 0

    def __le__(self, other: Face) -> bool:
        return self.gens <= other.gens

    def __lt__(self, other: Face) -> bool:
        return self.gens < other.gens


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Vertices, facet inequalities ``a . v >= a0`` and all faces.

    ``faces`` lists every proper face including the empty one, sorted by
    dimension; the polyhedron itself is not listed.
    """

    n: int
    support: Support
    vertices: tuple[Point, ...]
    facets: tuple[tuple[Point, int], ...]
    faces: tuple[Face, ...]

    @property
    def empty_face(self) -> Face:
        return self.faces[0]

    def face_of(self, vertices) -> Face | None:
        """The compact face with exactly this vertex set, if any."""
        key = tuple(sorted(tuple(v) for v in vertices))
        return self._compact_index.get(key)

    @property
    def _compact_index(self) -> dict[tuple[Point, ...], Face]:
        cache = self.__dict__.get("_cidx")
        if cache is None:
            cache = {f.vertices: f for f in self.faces if f.compact}
            object.__setattr__(self, "_cidx", cache)
        return cache

    def faces_of_dim(self, k: int, filter: str = "all") -> list[Face]:
        """Faces of dimension ``k``; ``filter`` is ``all``, ``compact`` or
        ``interior-compact``."""
        if filter not in ("all", "compact", "interior-compact"):
            raise ValueError(f"unknown filter {filter!r}")
        out = [f for f in self.faces if f.dim == k]
        if filter != "all":
            out = [f for f in out if f.compact]
        if filter == "interior-compact":
            out = [f for f in out if f.interior]
        return out

    def compact_faces(self, include_empty: bool = True) -> list[Face]:
        return [f for f in self.faces if f.compact and (include_empty or not f.is_empty)]

    def subfaces(self, face: Face) -> list[Face]:
        """All faces ``tau <= face`` (including ``face`` and the empty face)."""
        return [f for f in self.faces if f <= face]

    def superfaces(self, face: Face) -> list[Face]:
        """All listed faces containing ``face`` (including ``face``)."""
        return [f for f in self.faces if face <= f]

    def is_simplicial(self) -> bool:
        return all(len(f.vertices) == f.dim + 1 for f in self.compact_faces())

    def is_convenient(self) -> bool:
        return not axis_gaps(self.support) and all(
            any(v[i] and sum(v) == v[i] for v in self.vertices) for i in range(self.n)
        )

    def require(self, *, simplicial: bool = False, convenient: bool = False,
                n: tuple[int, ...] | None = None) -> None:
        """Raise a ``HypothesisError`` naming the first unmet hypothesis."""
        if n is not None and self.n not in n:
            raise HypothesisError(f"wrong number of variables: n={self.n}, need n in {n}")
        if convenient and not self.is_convenient():
            raise NotConvenientError("not convenient")
        if simplicial and not self.is_simplicial():
            bad = next(f for f in self.compact_faces() if len(f.vertices) != f.dim + 1)
            raise NotSimplicialError(
                f"not simplicial: non-simplicial {bad.dim}-dimensional face with vertices {list(bad.vertices)}"
            )

    def to_json(self) -> dict:
        """Debug dump of the face lattice."""
        return {
            "n": self.n,
            "vertices": [list(v) for v in self.vertices],
            "facets": [{"normal": list(a), "offset": a0} for a, a0 in self.facets],
            "faces": [
                {
                    "id": f.id,
                    "dim": f.dim,
                    "vertices": [list(v) for v in f.vertices],
                    "recession": sorted(f.recession),
                    "compact": f.compact,
                    "interior": f.interior,
                    "k": f.k,
                    "facets": list(f.facet_ids),
                    "subfaces": [g.id for g in self.subfaces(f) if g.id != f.id],
                }
                for f in self.faces
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def axis_gaps(s: Support) -> set[int]:
    """Axes (0-based) that contain no support point."""
    return {
        i for i in range(s.n)
        if not any(p[i] and sum(p) == p[i] for p in s.points)
    }


@lru_cache(maxsize=1024)
def build_polyhedron(s: Support) -> NewtonPolyhedron:
    n = s.n
    pts = list(s.points)
    gens: list[Point] = [p + (1,) for p in pts]
    gens += [tuple(int(i == j) for j in range(n)) + (0,) for i in range(n)]
    axis_gen = {len(pts) + i: i for i in range(n)}

    # facets of the homogenized cone, excluding the one at infinity
    facet_normals: dict[Point, frozenset[int]] = {}
    for combo in itertools.combinations(range(len(gens)), n):
        h = normal_vector([gens[j] for j in combo])
        if h is None:
            continue
        vals = [sum(a * b for a, b in zip(h, g)) for g in gens]
        if all(v <= 0 for v in vals):
            h = tuple(-x for x in h)
            vals = [-v for v in vals]
        elif not all(v >= 0 for v in vals):
            continue
        if not any(h[:n]):
            continue
        if h not in facet_normals:
            facet_normals[h] = frozenset(j for j, v in enumerate(vals) if v == 0)

    ordered = sorted(facet_normals.items(), key=lambda kv: (kv[0][n], kv[0]), reverse=False)
    facets = tuple((h[:n], -h[n]) for h, _ in ordered)
    facet_sets = [gs for _, gs in ordered]

    # every face is an intersection of facets
    seen: set[frozenset[int]] = set(facet_sets)
    frontier = list(facet_sets)
    while frontier:
        nxt = []
        for a in frontier:
            for b in facet_sets:
                c = a & b
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt

    point_faces = [g for g in seen if any(j < len(pts) for j in g)]
    vertex_idx = set()
    raw = []
    for g in point_faces:
        dim = rank([gens[j] for j in g]) - 1
        raw.append((g, dim))
        if dim == 0:
            vertex_idx |= {j for j in g if j < len(pts)}
    vertices = tuple(sorted(pts[j] for j in vertex_idx))
    vset = set(vertices)

    faces = [_make_face(frozenset(), -1, (), frozenset(), n, ())]
    for g, dim in raw:
        vs = tuple(sorted(pts[j] for j in g if j < len(pts) and pts[j] in vset))
        rec = frozenset(axis_gen[j] for j in g if j in axis_gen)
        fids = tuple(i for i, fs in enumerate(facet_sets) if g <= fs)
        faces.append(_make_face(g, dim, vs, rec, n, fids))
    faces.sort(key=lambda f: (f.dim, f.vertices, sorted(f.recession)))
    faces = [
        Face(i, f.vertices, f.recession, f.dim, f.k, f.interior, f.facet_ids, f.gens)
        for i, f in enumerate(faces)
    ]
    return NewtonPolyhedron(n, s, vertices, facets, tuple(faces))


def _make_face(gens, dim, vertices, recession, n, facet_ids) -> Face:
    nonzero = set(recession)
    for v in vertices:
        nonzero |= {i for i in range(n) if v[i]}
    return Face(-1, vertices, recession, dim, len(nonzero), len(nonzero) == n, facet_ids, gens)


def vertex_gamma(p: NewtonPolyhedron, v: Face | Point) -> int:
    """Number of 2-dimensional faces (compact or not) containing the vertex."""
    if isinstance(v, Face):
        if v.dim != 0:
            raise ValueError("vertex_gamma needs a 0-dimensional face")
        v = v.vertices[0]
    if p.n != 3:
        raise HypothesisError(f"vertex_gamma needs n=3, got n={p.n}")
    return sum(1 for f in p.faces if f.dim == 2 and v in f.vertices)


def newton_order(p: NewtonPolyhedron, nu) -> Fraction:
    """``min a.(1+nu)/a0`` over facets with ``a0 > 0``.

    For convenient polyhedra this is the Newton order of ``x**nu`` with the
    usual shift by ``(1, ..., 1)``.
    """
    if not p.is_convenient():
        raise NotConvenientError("not convenient: Newton order undefined")
    shifted = [1 + x for x in nu]
    return min(
        Fraction(sum(a * x for a, x in zip(av, shifted)), a0)
        for av, a0 in p.facets if a0 > 0
    )
