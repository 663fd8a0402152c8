"""Polynomial text and JSON input, reduced to an exponent support.

Grammar (whitespace is ignored)::

    poly   := ['-'] term (('+' | '-') term)*
    term   := [coeff '*'] factor ('*' factor)*
    factor := var ['^' posint]
    var    := x | y | z | w | x1 .. x9
    coeff  := int | int '/' int

``x, y, z, w`` are variables 1..4; ``x1 .. x9`` index variables directly.
The two naming styles cannot be mixed in one expression.  The dimension is
the highest variable index used.

Coefficients are kept for display only.  Everything downstream uses the set
of exponent vectors, which is correct for generic (non-degenerate)
coefficients.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NspecError, ParseError

DEFAULT_MAX_EXP = 10**6
LETTERS = "xyzw"


def max_exponent() -> int:
    raw = os.environ.get("NSPEC_MAX_EXP")
    if raw is None:
        return DEFAULT_MAX_EXP
    try:
        return int(raw)
    except ValueError:
        raise NspecError(f"NSPEC_MAX_EXP must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Support:
    """Exponent vectors of a polynomial germ in ``n`` variables.

    ``points`` is stored sorted; ``coeffs`` (parallel to ``points``) is
    optional and does not take part in equality or hashing.
    """

    n: int
    points: tuple[tuple[int, ...], ...]
    coeffs: tuple[Fraction, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= 4:
            raise NspecError(f"dimension must be between 1 and 4, got {self.n}")
        pts = [tuple(int(x) for x in p) for p in self.points]
        if not pts:
            raise NspecError("support is empty")
        for p in pts:
            if len(p) != self.n:
                raise NspecError(f"point {p} does not have {self.n} entries")
            if any(x < 0 for x in p):
                raise NspecError(f"point {p} has a negative entry")
            if not any(p):
                raise NspecError("support contains the zero exponent (f(0) != 0)")
        if len(set(pts)) != len(pts):
            raise NspecError("support has duplicate points")
        order = sorted(range(len(pts)), key=lambda i: pts[i])
        object.__setattr__(self, "points", tuple(pts[i] for i in order))
        if self.coeffs is not None:
            if len(self.coeffs) != len(pts):
                raise NspecError("coeffs and points differ in length")
            object.__setattr__(self, "coeffs", tuple(Fraction(self.coeffs[i]) for i in order))

    @classmethod
    def of(cls, *points: tuple[int, ...]) -> Support:
        return cls(len(points[0]), tuple(points))

    def restrict(self, axes: frozenset[int] | set[int]) -> Support | None:
        """Points supported on the coordinate subspace ``axes``, re-embedded.

        Coordinates are kept in increasing axis order.  Returns ``None`` when
        no point lies in that subspace.
        """
        keep = sorted(axes)
        pts = [
            tuple(p[i] for i in keep)
            for p in self.points
            if all(p[j] == 0 for j in range(self.n) if j not in axes)
        ]
        if not pts or not keep:
            return None
        return Support(len(keep), tuple(pts))

    def project(self, axis: int) -> Support:
        """Images of the points after forgetting coordinate ``axis``."""
        pts = {p[:axis] + p[axis + 1:] for p in self.points}
        pts.discard((0,) * (self.n - 1))
        return Support(self.n - 1, tuple(pts))

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "support": [list(p) for p in self.points]}
        if self.coeffs is not None:
            out["coeffs"] = [str(c) for c in self.coeffs]
        return out


def variable_names(n: int) -> list[str]:
    return list(LETTERS[:n]) if n <= 3 else [f"x{i}" for i in range(1, n + 1)]


def render(s: Support) -> str:
    """Canonical text form; ``parse_polynomial(render(s)) == s`` when the last
    variable occurs in some point."""
    names = variable_names(s.n)
    coeffs = s.coeffs if s.coeffs is not None else (Fraction(1),) * len(s.points)
    out = ""
    for p, c in zip(s.points, coeffs):
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, p) if e
        ]
        body = "*".join(factors)
        if abs(c) != 1:
            body = f"{abs(c)}*{body}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


class _Parser:
    def __init__(self, text: str, max_exp: int):
        self.toks: list[tuple[str, str, int]] = []
        self.max_exp = max_exp
        self._lex(text)
        self.i = 0
        self.style: str | None = None

    def _lex(self, text: str) -> None:
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("int", text[i:j], i))
                i = j
            elif ch in "+-*^/":
                self.toks.append((ch, ch, i))
                i += 1
            elif ch in LETTERS:
                if ch == "x" and i + 1 < len(text) and text[i + 1] in "123456789":
                    if i + 2 < len(text) and text[i + 2].isdigit():
                        raise ParseError("variable index out of range 1..9", i)
                    self.toks.append(("var", text[i:i + 2], i))
                    i += 2
                else:
                    self.toks.append(("var", ch, i))
                    i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", i)
        self.toks.append(("end", "", len(text)))

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def poly(self) -> list[tuple[Fraction, dict[int, int]]]:
        terms = []
        sign = 1
        if self.peek()[0] == "-":
            self.i += 1
            sign = -1
        terms.append(self.term(sign))
        while self.peek()[0] in "+-":
            sign = 1 if self.take(self.peek()[0])[0] == "+" else -1
            terms.append(self.term(sign))
        self.take("end")
        return terms

    def term(self, sign: int) -> tuple[Fraction, dict[int, int]]:
        coeff = Fraction(sign)
        if self.peek()[0] == "int":
            num = int(self.take("int")[1])
            den = 1
            if self.peek()[0] == "/":
                self.i += 1
                pos = self.peek()[2]
                den = int(self.take("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", pos)
            coeff *= Fraction(num, den)
            self.take("*")
        exps: dict[int, int] = {}
        idx, e = self.factor()
        exps[idx] = exps.get(idx, 0) + e
        while self.peek()[0] == "*":
            self.i += 1
            idx, e = self.factor()
            exps[idx] = exps.get(idx, 0) + e
        return coeff, exps

    def factor(self) -> tuple[int, int]:
        _, name, pos = self.take("var")
        style = "indexed" if len(name) == 2 else "letter"
        if self.style is None:
            self.style = style
        elif self.style != style:
            raise ParseError("cannot mix x,y,z,w with x1..x9 naming", pos)
        idx = LETTERS.index(name) if style == "letter" else int(name[1]) - 1
        e = 1
        if self.peek()[0] == "^":
            self.i += 1
            _, digits, epos = self.take("int")
            e = int(digits)
            if e == 0:
                raise ParseError("exponent must be positive", epos)
            if e > self.max_exp:
                raise ParseError(f"exponent {e} exceeds bound {self.max_exp}", epos)
        return idx, e


def parse_polynomial(text: str, max_exp: int | None = None) -> Support:
    """Parse ``text`` into its support; raises ``ParseError`` with a position."""
    parser = _Parser(text, max_exponent() if max_exp is None else max_exp)
    terms = parser.poly()
    n = 1 + max(idx for _, exps in terms for idx in exps)
    acc: dict[tuple[int, ...], Fraction] = {}
    for c, exps in terms:
        p = tuple(exps.get(i, 0) for i in range(n))
        if any(e > parser.max_exp for e in p):
            raise ParseError(f"exponent exceeds bound {parser.max_exp}")
        acc[p] = acc.get(p, Fraction(0)) + c
    acc = {p: c for p, c in acc.items() if c}
    if not acc:
        raise ParseError("zero polynomial")
    pts = tuple(acc)
    return Support(n, pts, tuple(acc[p] for p in pts))


def support_from_json(data: dict | str) -> Support:
    """Read ``{"n": 3, "support": [[4,0,0], ...], "coeffs": [...]}``."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(data, dict) or "n" not in data or "support" not in data:
        raise ParseError('JSON support needs keys "n" and "support"')
    try:
        n = int(data["n"])
        pts = tuple(tuple(int(x) for x in p) for p in data["support"])
        coeffs = data.get("coeffs")
        if coeffs is not None:
            coeffs = tuple(Fraction(c) for c in coeffs)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed JSON support: {exc}") from None
    try:
        return Support(n, pts, coeffs)
    except NspecError as exc:
        raise ParseError(str(exc)) from None


def load_input(text: str) -> Support:
    """A JSON support document or a polynomial expression."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return support_from_json(stripped)
    return parse_polynomial(stripped)
