"""Non-isolated germs whose singular locus lies on coordinate axes.

For each axis ``i`` missed by the support, adding ``r * e_i`` to the support
models adding ``l**r`` for a generic linear form ``l``: every monomial of
degree ``r`` lies in the convex hull of the axial ones, so only the axial
points matter for the Newton polyhedron.  For large ``r`` the augmented
polyhedron is convenient and its spectrum differs from the Hodge spectrum of
the original germ by a series built from transversal slice data.

Axis indices are 0-based throughout.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import HypothesisError, InvariantError, NspecError
from .facepoly import face_q, open_points
from .fracpoly import FracPoly, geometric, tpow
from .lattice import solve_combination
from .newton import Face, NewtonPolyhedron, axis_gaps, build_polyhedron, vertex_gamma
from .polyparse import Support
from .spectrum import (
    _interior_sum,
    hodge_spectrum_plane,
    spectrum_eq4,
    spectrum_plane,
    spectrum_steenbrink,
)

MAX_DOUBLINGS = 8


class NoLiftingFaceError(HypothesisError):
    """A slice spectral number has no (or no unique) lift to a compact face
    of the original polyhedron; this happens when a projected face sits in
    the slice boundary without matching a slice face."""


class BCFReadingWarning(UserWarning):
    """The set and multiset readings of the boundary faces give different
    spectra."""


def _frac_part(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def pairwise_condition(s: Support) -> tuple[int, int] | None:
    """First pair ``(i, j)`` for which no support point lies in the
    coordinate plane of axes ``i, j``; ``None`` if every pair is met."""
    for i in range(s.n):
        for j in range(i + 1, s.n):
            if not any(all(p[k] == 0 for k in range(s.n) if k not in (i, j)) for p in s.points):
                return i, j
    return None


def _check_non_isolated(s: Support) -> set[int]:
    if s.n not in (2, 3):
        raise HypothesisError(f"wrong number of variables: n={s.n}, need n in (2, 3)")
    gaps = axis_gaps(s)
    if not gaps:
        raise HypothesisError("input is convenient (no axis missed): use the isolated pipeline")
    bad = pairwise_condition(s)
    if bad is not None:
        raise HypothesisError(
            f"does not intersect every coordinate plane: no support point in the plane of axes {bad}"
        )
    return gaps


@dataclass(frozen=True)
class AugmentedData:
    r: int
    polyhedron: NewtonPolyhedron
    original: NewtonPolyhedron
    new_vertices: tuple[tuple[int, ...], ...]
    gamma_tilde: dict[tuple[int, ...], int]
    bcf: tuple[tuple[Face, int], ...]

    def signature(self) -> tuple:
        """The stabilization data: gamma-tilde values and the BCF multiset."""
        return (
            tuple(sorted(self.gamma_tilde.items())),
            tuple(sorted((f.vertices, i) for f, i in self.bcf)),
        )


def _augment_at(s: Support, gaps: set[int], r: int) -> AugmentedData:
    new = tuple(tuple(r * int(k == i) for k in range(s.n)) for i in sorted(gaps))
    aug = build_polyhedron(Support(s.n, s.points + new))
    orig = build_polyhedron(s)
    for v in new:
        if v not in aug.vertices:
            raise InvariantError(f"augmentation point {v} is not a vertex at r={r}")
    gamma_tilde = {}
    if s.n == 3:
        for v in orig.faces_of_dim(0, "compact"):
            gamma_tilde[v.vertices[0]] = vertex_gamma(aug, v.vertices[0])
    data = AugmentedData(r, aug, orig, new, gamma_tilde, ())
    return replace(data, bcf=tuple(bcf_enumerate(data)))


# Polynomials in r as coefficient tuples, constant term first.

def _padd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    m = max(len(a), len(b))
    return tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(m))


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _ptrim(a: tuple[int, ...]) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _pdet(rows: list[list[tuple[int, ...]]]) -> tuple[int, ...]:
    if len(rows) == 1:
        return rows[0][0]
    out: tuple[int, ...] = (0,)
    for j, entry in enumerate(rows[0]):
        if not any(entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = _pmul(entry, _pdet(minor))
        out = _padd(out, term if j % 2 == 0 else tuple(-x for x in term))
    return out


def _peval(a: tuple[int, ...], r: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * r + c
    return acc


def _sign_settles(a: tuple[int, ...]) -> int:
    """An integer ``T >= 0`` such that ``a`` has the sign of its leading
    coefficient at every real ``r >= T``."""
    a = _ptrim(a)
    d = len(a) - 1
    if d <= 0:
        return 0
    lead = a[-1]
    if d == 1:
        return max(0, -a[0] // a[1] + 1)
    # beyond the settling point of the derivative the polynomial is monotone
    start = _sign_settles(tuple(k * a[k] for k in range(1, d + 1)))

    def good(r: int) -> bool:
        return _peval(a, r) * lead > 0

    if good(start):
        return start
    hi = 2 + max(abs(c) for c in a[:-1]) // abs(lead) + 1
    hi = max(hi, start + 1)
    while not good(hi):
        hi *= 2
    lo = start
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if good(mid):
            hi = mid
        else:
            lo = mid
    return hi


@lru_cache(maxsize=512)
def stable_threshold(s: Support) -> int:
    """An ``r`` beyond which the face lattice of the augmented polyhedron no
    longer changes.

    Each orientation determinant of ``n + 1`` homogenized generators (support
    points, coordinate rays and the points ``r * e_i``) is a polynomial in
    ``r``; past the returned value all of them keep their eventual sign, so
    the oriented matroid, and with it the face lattice, is fixed.
    """
    gaps = sorted(axis_gaps(s))
    n = s.n
    gens = [[(x,) for x in p] + [(1,)] for p in s.points]
    gens += [[(int(k == i),) for k in range(n)] + [(0,)] for i in range(n)]
    first_new = len(gens)
    gens += [[(0, 1) if k == i else (0,) for k in range(n)] + [(1,)] for i in gaps]
    t = 0
    for combo in combinations(range(len(gens)), n + 1):
        if combo[-1] < first_new:
            continue
        t = max(t, _sign_settles(_pdet([gens[j] for j in combo])))
    return t


def augment(s: Support, r: int | None = None) -> AugmentedData:
    """Augmented polyhedron at the given ``r``, or at the first ``r`` (doubling)
    where the stabilization data agree with those at ``2r``.

    Doubling starts from the larger of ``1 + 3 * max coordinate sum`` and
    ``stable_threshold``; the threshold alone guarantees the face lattice no
    longer changes, and the doubling comparison stays as a consistency check.
    """
    gaps = _check_non_isolated(s)
    if r is not None:
        return _augment_at(s, gaps, r)
    r = max(1 + 3 * max(sum(p) for p in s.points), stable_threshold(s))
    cur = _augment_at(s, gaps, r)
    for _ in range(MAX_DOUBLINGS):
        nxt = _augment_at(s, gaps, 2 * r)
        if nxt.signature() == cur.signature():
            if not cur.polyhedron.is_simplicial():
                raise HypothesisError(f"not simplicial: augmented polyhedron at r={r}")
            return cur
        r, cur = 2 * r, nxt
    raise InvariantError(f"augmented polyhedron did not stabilize up to r={r}")


def bcf_enumerate(a: AugmentedData) -> list[tuple[Face, int]]:
    """Pairs ``(tau, i)``: interior compact faces of dimension 1 or 2 of the
    augmented polyhedron through ``r * e_i`` that are not faces of the
    original polyhedron, mapped to the face ``tau`` spanned by their old
    vertices."""
    new = {v: next(i for i, x in enumerate(v) if x) for v in a.new_vertices}
    out = []
    for f in a.polyhedron.faces:
        if f.dim not in (1, 2) or not f.compact or not f.interior:
            continue
        hits = [v for v in f.vertices if v in new]
        if not hits:
            continue
        if len(hits) > 1:
            raise InvariantError(f"face {f.vertices} contains several augmentation points")
        old = [v for v in f.vertices if v not in new]
        tau = a.original.face_of(old)
        if tau is None:
            raise InvariantError(f"{old} is not a compact face of the original polyhedron")
        out.append((tau, new[hits[0]]))
    out.sort(key=lambda fi: (fi[0].dim, fi[0].vertices, fi[1]))
    return out


def bcf_direct(p: NewtonPolyhedron) -> list[tuple[Face, int]]:
    """Boundary faces read off the original polyhedron: compact faces of
    dimension 0 or 1 lying in a non-compact interior face one dimension up,
    one entry per recession direction."""
    out = []
    for tau in p.compact_faces(include_empty=False):
        if tau.dim > 1:
            continue
        dirs = set()
        for f in p.faces:
            if f.dim == tau.dim + 1 and not f.compact and f.interior and tau <= f:
                dirs |= f.recession
        out.extend((tau, i) for i in sorted(dirs))
    return out


def _augmented_face_sum(p: NewtonPolyhedron, gamma_tilde, bcf) -> FracPoly:
    out = _interior_sum(p)
    for v in p.faces_of_dim(0, "compact"):
        out += face_q(v).shift(1) * (gamma_tilde[v.vertices[0]] - 3)
    for tau, _ in bcf:
        out -= geometric(0, p.n - tau.dim - 2) * face_q(tau)
        if tau.dim == 0:
            out -= tpow(1)
    return out


def hodge_spectrum_theorem2(s: Support, augmented: AugmentedData | None = None) -> FracPoly:
    """Hodge spectrum of a non-isolated three-variable germ from the
    original polyhedron, augmented vertex counts and boundary faces."""
    if s.n != 3:
        raise HypothesisError(f"wrong number of variables: n={s.n}, need n=3")
    a = augmented or augment(s)
    p = a.original
    p.require(simplicial=True)
    out = _augmented_face_sum(p, a.gamma_tilde, a.bcf)
    as_set = list({tau.id: (tau, i) for tau, i in a.bcf}.values())
    if _augmented_face_sum(p, a.gamma_tilde, as_set) != out:
        warnings.warn(
            "boundary faces counted once per recession direction change the result "
            "compared with counting each face once",
            BCFReadingWarning,
            stacklevel=2,
        )
    return out


@dataclass(frozen=True)
class SliceData:
    i: int
    slice_support: Support
    mu: int
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...] | None = None

    def to_json(self) -> dict:
        out = {
            "axis": self.i,
            "slice_support": [list(p) for p in self.slice_support.points],
            "mu": self.mu,
            "alphas": [f"{a.numerator}/{a.denominator}" for a in self.alphas],
        }
        if self.betas is not None:
            out["betas"] = [f"{b.numerator}/{b.denominator}" for b in self.betas]
        return out


def _slice_spectrum(sub: Support) -> FracPoly:
    p = build_polyhedron(sub)
    if sub.n == 2:
        return spectrum_plane(p)
    return spectrum_steenbrink(p)


def slice_spectra(s: Support) -> list[SliceData]:
    gaps = _check_non_isolated(s)
    out = []
    for i in sorted(gaps):
        sub = s.project(i)
        sp = _slice_spectrum(sub)
        alphas = tuple(sp.expand())
        out.append(SliceData(i, sub, len(alphas), alphas))
    return out


def _witnesses(p: NewtonPolyhedron) -> list[tuple[tuple[int, ...], Fraction]]:
    """Lattice points standing for the slice spectral numbers up to 1."""
    out = []
    for f in p.faces:
        if f.is_empty or not f.compact or not f.interior:
            continue
        out.extend((pt, e) for pt, e in open_points(f) if e <= 1)
        if f.dim == 0 and p.n >= 2:
            out.append((f.vertices[0], Fraction(1)))
    out.sort(key=lambda pe: (pe[1], pe[0]))
    return out


def _lift_beta(orig: NewtonPolyhedron, slice_p: NewtonPolyhedron, i: int, w) -> Fraction:
    top = [
        (f, slice_p.facets[next(k for k in f.facet_ids if slice_p.facets[k][1] > 0)])
        for f in slice_p.faces_of_dim(slice_p.n - 1, "compact")
    ]
    found = set()
    for sigma in orig.faces_of_dim(orig.n - 2, "compact"):
        proj = [v[:i] + v[i + 1:] for v in sigma.vertices]
        inside = any(
            all(sum(a * x for a, x in zip(av, q)) == a0 for q in proj) for _, (av, a0) in top
        )
        if not inside:
            continue
        try:
            c = solve_combination(proj, w)
        except ValueError:
            continue
        if c is None or any(x < 0 for x in c):
            continue
        nu_i = sum((ck * v[i] for ck, v in zip(c, sigma.vertices)), Fraction(0))
        found.add(_frac_part(-nu_i))
    if not found:
        raise NoLiftingFaceError(
            f"no compact face lifts the slice point {w} for axis {i} "
            "(projected face lies in the slice boundary)"
        )
    if len(found) > 1:
        raise NoLiftingFaceError(
            f"slice point {w} for axis {i} lifts to conflicting values {sorted(found)}"
        )
    return found.pop()


def slice_beta(s: Support, d: SliceData) -> SliceData:
    """Fill the local-system exponents of a slice by lifting witness points
    through the cones of compact faces; numbers above 1 are paired with
    their conjugates ``2 - alpha``."""
    orig = build_polyhedron(s)
    slice_p = build_polyhedron(d.slice_support)
    pairs = []
    for w, e in _witnesses(slice_p):
        beta = _lift_beta(orig, slice_p, d.i, w)
        pairs.append((e, beta))
        if e < 1 and slice_p.n >= 2:
            pairs.append((2 - e, _frac_part(-beta)))
    pairs.sort()
    alphas = tuple(a for a, _ in pairs)
    if Counter(alphas) != Counter(d.alphas):
        raise InvariantError(
            f"witness exponents {list(map(str, alphas))} do not reproduce the slice spectrum "
            f"{list(map(str, d.alphas))} for axis {d.i}"
        )
    return replace(d, alphas=alphas, betas=tuple(b for _, b in pairs))


def yomdin_series(slices: list[SliceData], r: int) -> FracPoly:
    """``sum over slices and spectral pairs of sum_{k<r} t^(alpha + (beta + k)/r)``."""
    terms = []
    for d in slices:
        if d.betas is None:
            raise NspecError(f"slice for axis {d.i} has no betas")
        for a, b in zip(d.alphas, d.betas):
            # a + (b + k)/r over the common denominator a.den * b.den * r
            d = a.denominator * b.denominator * r
            base = a.numerator * b.denominator * r + b.numerator * a.denominator
            step = a.denominator * b.denominator
            terms.extend((base + k * step, d, 1) for k in range(r))
    return FracPoly.from_ratios(terms)


def augmented_spectrum(s: Support, r: int) -> FracPoly:
    """Spectrum of the germ plus a generic ``l**r``."""
    a = augment(s, r)
    if s.n == 3:
        return spectrum_eq4(a.polyhedron).sp
    return spectrum_plane(a.polyhedron)


def hodge_spectrum(s: Support) -> FracPoly:
    """Hodge spectrum of a non-isolated germ in two or three variables."""
    if s.n == 2:
        return hodge_spectrum_plane(build_polyhedron(s))
    return hodge_spectrum_theorem2(s)


@dataclass(frozen=True)
class YomdinCheck:
    ok: bool
    expected: FracPoly
    rs: tuple[int, ...]
    differences: tuple[FracPoly, ...]
    slices: tuple[SliceData, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "r_values": list(self.rs),
            "hodge_spectrum": self.expected.to_json(),
            "differences": [d.to_json() for d in self.differences],
            "slices": [d.to_json() for d in self.slices],
        }


def crosscheck_yomdin(s: Support, rs: tuple[int, ...] | None = None) -> YomdinCheck:
    """Augmented spectrum minus the slice series, at two values of ``r``,
    compared with the Hodge spectrum from the original polyhedron."""
    if s.n == 3:
        stable = augment(s)
        expected = hodge_spectrum_theorem2(s, stable)
    else:
        stable = augment(s) if rs is None else None
        expected = hodge_spectrum_plane(build_polyhedron(s))
    slices = tuple(slice_beta(s, d) for d in slice_spectra(s))
    if rs is None:
        rs = (stable.r, stable.r + 1)
    diffs = tuple(augmented_spectrum(s, r) - yomdin_series(list(slices), r) for r in rs)
    ok = all(d == expected for d in diffs)
    return YomdinCheck(ok, expected, tuple(rs), diffs, slices)
