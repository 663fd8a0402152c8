"""Deterministic random supports for property tests and the ``random`` command."""

from __future__ import annotations

import itertools
import random

from .newton import axis_gaps, build_polyhedron
from .polyparse import Support

RETRY_CAP = 200


def _draw(rng: random.Random) -> Support:
    a, b, c = (rng.randint(2, 9) for _ in range(3))
    pts = {(a, 0, 0), (0, b, 0), (0, 0, c)}
    for _ in range(rng.randint(0, 4)):
        p = tuple(rng.randint(0, 9) for _ in range(3))
        if any(p):
            pts.add(p)
    return Support(3, tuple(sorted(pts)))


def _acceptable(s: Support) -> bool:
    p = build_polyhedron(s)
    return p.is_convenient() and p.is_simplicial()


def generate_corpus(seed: int, count: int) -> list[Support]:
    """``count`` simplicial convenient supports in three variables.

    Each item has axial points ``x^a, y^b, z^c`` with exponents in ``[2, 9]``
    and up to four extra points with coordinates at most 9.  Items are
    rejection-sampled; after ``RETRY_CAP`` rejections the generator for that
    item is re-seeded from ``(seed, index, round)``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        rounds = 0
        while True:
            for _ in range(RETRY_CAP):
                s = _draw(rng)
                if _acceptable(s):
                    break
            else:
                rounds += 1
                rng = random.Random(f"{seed}:{idx}:{rounds}")
                continue
            break
        out.append(s)
    return out


def non_isolated_variants(s: Support) -> list[Support]:
    """Supports obtained by dropping some of the axial points, keeping those
    that still meet every coordinate plane and have a simplicial Newton
    polyhedron."""
    from .hodge import pairwise_condition

    axial = [p for p in s.points if sum(1 for x in p if x) == 1]
    out = []
    for size in range(1, len(axial) + 1):
        for gone in itertools.combinations(axial, size):
            rest = tuple(p for p in s.points if p not in gone)
            if not rest:
                continue
            cand = Support(s.n, rest)
            if not axis_gaps(cand) or pairwise_condition(cand) is not None:
                continue
            if build_polyhedron(cand).is_simplicial() and cand not in out:
                out.append(cand)
    return out
