"""Fractional-exponent Laurent polynomials with integer coefficients.

``FracPoly`` carries every spectrum-like quantity in the package: a finite sum
``sum_i n_i t**alpha_i`` with exact rational exponents ``alpha_i`` (any sign)
and nonzero integer coefficients ``n_i``.  ``BivarPoly`` adds an integer
exponent of a second variable ``u`` and is used for spectral pairs.

Both types are immutable and hashable; all arithmetic is exact.

>>> p = tpow("1/2") + tpow(1)
>>> p * (FracPoly.one() + tpow(1))
FracPoly('t^(1/2) + t + t^(3/2) + t^2')
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import NspecError

Exponent = Union[Fraction, int, str]


def _frac(x: Exponent) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _fmt_exp(e: Fraction) -> str:
    if e == 1:
        return "t"
    if e.denominator == 1:
        return f"t^{e.numerator}"
    return f"t^({e})"


class FracPoly:
    """Finitely supported map ``exponent -> coefficient``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.  Internally exponents are kept as reduced
    ``(numerator, denominator)`` pairs, which hash much faster than
    ``Fraction``; the public interface speaks ``Fraction``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        acc: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            k = _key(e)
            acc[k] = acc.get(k, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[tuple[int, int], int]) -> FracPoly:
        """Adopt a dict already holding reduced keys and nonzero values."""
        out = cls.__new__(cls)
        out._terms = terms
        out._hash = None
        return out

    @classmethod
    def from_ratios(cls, terms: Iterable[tuple[int, int, int]]) -> FracPoly:
        """Build from ``(numerator, denominator, coefficient)`` integer triples."""
        acc: dict[tuple[int, int], int] = {}
        for n, d, c in terms:
            g = gcd(n, d)
            k = (n // g, d // g) if d > 0 else (-n // g, -d // g)
            acc[k] = acc.get(k, 0) + c
        return cls._wrap({k: c for k, c in acc.items() if c})

    @classmethod
    def zero(cls) -> FracPoly:
        return cls()

    @classmethod
    def one(cls) -> FracPoly:
        return cls._wrap({(0, 1): 1})

    @classmethod
    def from_exponents(cls, exponents: Iterable[Exponent]) -> FracPoly:
        """Sum of ``t**e`` over ``exponents``, repeated exponents accumulating."""
        return cls((e, 1) for e in exponents)

    # -- container protocol -------------------------------------------------

    def items(self) -> Iterator[tuple[Fraction, int]]:
        """Terms in ascending exponent order."""
        return iter(sorted((Fraction(*k), c) for k, c in self._terms.items()))

    def exponents(self) -> list[Fraction]:
        return sorted(Fraction(*k) for k in self._terms)

    def expand(self) -> list[Fraction]:
        """Exponents repeated by multiplicity; requires nonnegative coefficients."""
        out: list[Fraction] = []
        for e, c in self.items():
            if c < 0:
                raise NspecError(f"negative coefficient {c} at t^{e}")
            out.extend([e] * c)
        return out

    def coeff(self, e: Exponent) -> int:
        return self._terms.get(_key(e), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = FracPoly({0: other})
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: FracPoly | int) -> FracPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                del acc[k]
        return FracPoly._wrap(acc)

    __radd__ = __add__

    def __neg__(self) -> FracPoly:
        return FracPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: FracPoly | int) -> FracPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: FracPoly | int) -> FracPoly:
        return (-self) + other

    def __mul__(self, other: FracPoly | int) -> FracPoly:
        if isinstance(other, int):
            if other == 0:
                return FracPoly()
            return FracPoly._wrap({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, FracPoly):
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = _add_keys(k1, k2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return FracPoly._wrap({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> FracPoly:
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = FracPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, e: Exponent) -> FracPoly:
        """Multiply by ``t**e``."""
        s = _key(e)
        return FracPoly._wrap({_add_keys(k, s): c for k, c in self._terms.items()})

    # -- display / serialization ---------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            mono = "1" if e == 0 else _fmt_exp(e)
            if abs(c) == 1 and e != 0:
                body = mono
            elif e == 0:
                body = str(abs(c))
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"FracPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"alpha": f"{e.numerator}/{e.denominator}", "mult": c}
            for e, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> FracPoly:
        return cls((Fraction(d["alpha"]), int(d["mult"])) for d in data)


def _key(e: Exponent) -> tuple[int, int]:
    if isinstance(e, int):
        return (e, 1)
    f = _frac(e)
    return (f.numerator, f.denominator)


def _add_keys(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    if a[1] == b[1]:
        n, d = a[0] + b[0], a[1]
    else:
        n, d = a[0] * b[1] + b[0] * a[1], a[1] * b[1]
    g = gcd(n, d)
    return (n // g, d // g)


def _coerce(x):
    if isinstance(x, FracPoly):
        return x
    if isinstance(x, int):
        return FracPoly({0: x})
    return NotImplemented


def tpow(e: Exponent, c: int = 1) -> FracPoly:
    """The monomial ``c * t**e``."""
    return FracPoly({_frac(e): c})


def geometric(start: int, stop: int, step: Exponent = 1) -> FracPoly:
    """``sum_{j=start}^{stop} t**(j*step)``; empty (zero) when ``stop < start``."""
    step = _frac(step)
    return FracPoly.from_exponents(j * step for j in range(start, stop + 1))


def arith(p: FracPoly, q: FracPoly, op: str) -> FracPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def reflect(p: FracPoly, n: int) -> FracPoly:
    """``p(t**-1) * t**n``: every exponent ``a`` becomes ``n - a``."""
    return FracPoly({n - e: c for e, c in p.items()})


def phi(p: FracPoly) -> FracPoly:
    """Reduce exponents modulo 1 into ``[0, 1)``, summing collisions."""
    return FracPoly((e - (e.numerator // e.denominator), c) for e, c in p.items())


def slice_le(p: FracPoly, c: Exponent) -> FracPoly:
    c = _frac(c)
    return FracPoly({e: k for e, k in p.items() if e <= c})


def mass(p: FracPoly) -> int:
    """``p(1)``, the sum of coefficients."""
    return sum(p._terms.values())


class BivarPoly:
    """Finite map ``(t-exponent, u-exponent) -> coefficient``.

    The ``t``-exponent is rational, the ``u``-exponent an integer.  Used for
    spectral pairs ``sum t**alpha_i * u**w_i``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[tuple[Fraction, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (e, w), c in items:
            if not isinstance(w, int) or not isinstance(c, int):
                raise TypeError("u-exponents and coefficients must be int")
            key = (_frac(e), w)
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: c for k, c in sorted(acc.items()) if c}
        self._hash: int | None = None

    @classmethod
    def lift(cls, p: FracPoly, w: int = 0) -> BivarPoly:
        """``p(t) * u**w``."""
        return cls(((e, w), c) for e, c in p.items())

    def items(self) -> Iterator[tuple[tuple[Fraction, int], int]]:
        return iter(self._terms.items())

    def u_exponents(self) -> set[int]:
        return {w for (_, w) in self._terms}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: BivarPoly) -> BivarPoly:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return BivarPoly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> BivarPoly:
        return BivarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        return self + (-other)

    def __mul__(self, other: BivarPoly | FracPoly | int) -> BivarPoly:
        if isinstance(other, int):
            return BivarPoly({k: c * other for k, c in self._terms.items()})
        if isinstance(other, FracPoly):
            other = BivarPoly.lift(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return BivarPoly(
            ((e1 + e2, w1 + w2), c1 * c2)
            for (e1, w1), c1 in self._terms.items()
            for (e2, w2), c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (e, w), c in self._terms.items():
            factors = []
            if e != 0:
                factors.append(_fmt_exp(e))
            if w == 1:
                factors.append("u")
            elif w != 0:
                factors.append(f"u^{w}")
            mono = "*".join(factors) or "1"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"alpha": f"{e.numerator}/{e.denominator}", "weight": w, "mult": c}
            for (e, w), c in self._terms.items()
        ]


def inflate(r: FracPoly, k: int) -> BivarPoly:
    """``r(t/u**2) * u**k`` for a polynomial ``r`` with integer exponents."""
    terms = []
    for e, c in r.items():
        if e.denominator != 1:
            raise NspecError(f"inflate needs integer exponents, got t^({e})")
        terms.append(((e, k - 2 * e.numerator), c))
    return BivarPoly(terms)


def specialize_u(b: BivarPoly) -> FracPoly:
    """Set ``u = 1``."""
    return FracPoly((e, c) for (e, _), c in b.items())
