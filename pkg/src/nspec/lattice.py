"""Exact integer linear algebra on small matrices.

Matrices are lists of rows of Python ints (or Fractions where noted).  Sizes
here are tiny (at most 5x5), so plain Python beats converting to numpy and
keeps everything exact.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def primitive(v: Sequence[int]) -> Vector:
    """Divide by the gcd of the entries (the zero vector is returned as is)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    m = len(a[0])
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col] / a[r][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def solve_combination(
    basis: Sequence[Sequence[int]], target: Sequence[int | Fraction]
) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_k basis[k] == target``.

    The basis vectors must be linearly independent.  Returns ``None`` when the
    target is not in their span.
    """
    m = len(basis)
    n = len(target)
    # augmented system: rows are coordinates, columns are basis vectors
    a = [[Fraction(basis[k][i]) for k in range(m)] + [Fraction(target[i])] for i in range(n)]
    r = 0
    pivots = []
    for col in range(m):
        piv = next((i for i in range(r, n) if a[i][col]), None)
        if piv is None:
            raise ValueError("basis vectors are linearly dependent")
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    if any(a[i][m] for i in range(r, n)):
        return None
    return [a[i][m] for i in range(m)]


def normal_vector(vectors: Sequence[Sequence[int]]) -> Vector | None:
    """Primitive integer normal to ``d - 1`` vectors in ``Z^d``.

    Computed by signed maximal minors; ``None`` if the vectors are dependent.
    """
    d = len(vectors[0])
    if len(vectors) != d - 1:
        raise ValueError("need exactly d-1 vectors in dimension d")
    comps = []
    for j in range(d):
        minor = [[v[k] for k in range(d) if k != j] for v in vectors]
        comps.append((-1) ** j * det(minor))
    if not any(comps):
        return None
    return primitive(comps)


def smith_normal_form(
    matrix: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms.

    Returns ``(U, D, W)`` with ``U @ matrix @ W == D``, ``U`` and ``W``
    unimodular and ``D`` diagonal with ``D[i][i] | D[i+1][i+1]`` and
    nonnegative diagonal entries.
    """
    a = [list(r) for r in matrix]
    n = len(a)
    m = len(a[0]) if n else 0
    u = identity(n)
    w = identity(m)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in w:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, f: int) -> None:
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, f: int) -> None:
        for row in a:
            row[dst] += f * row[src]
        for row in w:
            row[dst] += f * row[src]

    for t in range(min(n, m)):
        entries = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, m) if a[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            changed = False
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, m):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, m) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, w


def matmul(x: Sequence[Sequence[int]], y: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[sum(r[k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for r in x]


def _frac_part(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def parallelepiped_coefficients(vectors: Sequence[Sequence[int]]) -> Iterator[tuple[Fraction, ...]]:
    """Coefficient vectors ``c in [0,1)^m`` with ``sum c_k vectors[k]`` integral.

    ``vectors`` must be linearly independent.  These are the lattice points of
    the half-open fundamental parallelepiped; they form a finite group whose
    order is the index of the sublattice spanned by ``vectors`` in the
    saturated lattice of their span.  Enumeration goes through the Smith form
    of the matrix with columns ``vectors``, so it costs O(index), not
    O(volume of a bounding box).
    """
    m = len(vectors)
    if m == 0:
        yield ()
        return
    n = len(vectors[0])
    cols = [[vectors[k][i] for k in range(m)] for i in range(n)]
    _, d, w = smith_normal_form(cols)
    diag = [d[j][j] for j in range(m)]
    if 0 in diag:
        raise ValueError("vectors are linearly dependent")
    for ms in itertools.product(*(range(dj) for dj in diag)):
        y = [Fraction(mj, dj) for mj, dj in zip(ms, diag)]
        yield tuple(_frac_part(sum(w[k][j] * y[j] for j in range(m))) for k in range(m))


def combine(vectors: Sequence[Sequence[int]], coeffs: Sequence[Fraction]) -> Vector:
    """``sum coeffs[k] * vectors[k]``, asserted integral."""
    n = len(vectors[0])
    out = []
    for i in range(n):
        x = sum(c * v[i] for c, v in zip(coeffs, vectors))
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError("combination is not a lattice point")
        out.append(int(x))
    return tuple(out)
