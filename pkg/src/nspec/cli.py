"""Command-line front end.

Exit codes: 0 success, 1 the input violates a hypothesis of the requested
formula, 2 the input does not parse, 3 an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

from .errors import ConjectureFinding, HypothesisError, InvariantError, NspecError, ParseError
from .fracpoly import FracPoly
from .newton import axis_gaps, build_polyhedron
from .polyparse import Support, load_input, render

COMMANDS = ("spectrum", "hodge", "zeta", "pairs", "check", "random")

EXIT_OK, EXIT_HYPOTHESIS, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    expr: str | None = None
    json: bool = False
    seed: int | None = None
    count: int | None = None


def _support(cfg: RunConfig) -> Support:
    if cfg.expr is not None and cfg.input is not None:
        raise ParseError("give either a file path or --expr, not both")
    if cfg.expr is not None:
        return load_input(cfg.expr)
    if cfg.input is None:
        raise ParseError("no input: give a file path, an expression or --expr")
    path = Path(cfg.input)
    if path.is_file():
        return load_input(path.read_text())
    return load_input(cfg.input)


def _spectrum(s: Support) -> tuple[dict, list[str]]:
    from .spectrum import spectrum_eq4, spectrum_plane, spectrum_steenbrink
    from .zeta import verify_zeta_identity

    p = build_polyhedron(s)
    if axis_gaps(s):
        raise HypothesisError("not convenient: the support misses an axis (use the hodge command)")
    if s.n == 3:
        rep = spectrum_eq4(p)
        out = rep.to_json()
        sp = rep.sp
        lines = [
            f"gamma spectrum: {rep.gamma_sp}",
            f"defect:         {rep.defect}",
            f"spectrum:       {rep.sp}",
            f"mu:             {rep.mu}",
        ]
    else:
        p.require(simplicial=True, convenient=True)
        sp = spectrum_plane(p) if s.n == 2 else spectrum_steenbrink(p)
        other = spectrum_steenbrink(p)
        if sp != other:
            raise InvariantError(f"route mismatch: {sp} != {other}")
        out = {"spectrum": sp.to_json(), "spectrum_steenbrink": other.to_json(), "mu": _mass(sp)}
        lines = [f"spectrum: {sp}", f"mu:       {_mass(sp)}"]
    ok, diff = verify_zeta_identity(s, sp)
    if not ok:
        raise InvariantError(f"phi(spectrum) differs from the zeta data by {diff}")
    out["zeta_identity"] = True
    lines.append("zeta identity: holds")
    return out, lines


def _mass(p: FracPoly) -> int:
    from .fracpoly import mass

    return mass(p)


def _hodge(s: Support) -> tuple[dict, list[str]]:
    from .hodge import crosscheck_yomdin

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        chk = crosscheck_yomdin(s)
    if not chk.ok:
        raise InvariantError(
            f"augmented spectrum minus slice series {[str(d) for d in chk.differences]} "
            f"differs from the Hodge spectrum {chk.expected}"
        )
    out = {"spectrum": chk.expected.to_json(), "crosscheck": chk.to_json()}
    lines = [f"hodge spectrum: {chk.expected}", f"crosscheck at r={list(chk.rs)}: holds"]
    for w in caught:
        lines.append(f"warning: {w.message}")
        out.setdefault("warnings", []).append(str(w.message))
    return out, lines


def _zeta(s: Support) -> tuple[dict, list[str]]:
    from .zeta import verify_zeta_identity, zeta_report

    rep = zeta_report(s)
    out = rep.to_json()
    lines = [f"M*({list(k)}): {v}" for k, v in rep.mstar_by_subset.items()]
    lines.append(f"M: {rep.m}")
    if s.n in (2, 3) and not axis_gaps(s):
        ok, diff = verify_zeta_identity(s)
        out["identity"] = {"holds": ok, "discrepancy": diff.to_json()}
        lines.append(f"phi(spectrum) = M: {'holds' if ok else f'fails by {diff}'}")
        if not ok:
            raise InvariantError(f"phi(spectrum) differs from the zeta data by {diff}")
    return out, lines


def _pairs(s: Support) -> tuple[dict, list[str]]:
    from .pairs import LABEL, check_jordan, pairs_conjectural, pairs_steenbrink

    p = build_polyhedron(s)
    a = pairs_conjectural(p)
    b = pairs_steenbrink(p)
    jc = check_jordan(p)
    if a != b:
        raise ConjectureFinding(f"pairs by faces {a} != pairs by r_tau {b}", {"by_faces": str(a), "by_r": str(b)})
    out = {
        "label": LABEL,
        "pairs_by_faces": a.to_json(),
        "pairs_by_r": b.to_json(),
        "equal": True,
        "jordan": jc.to_json(),
    }
    nz = {str(k): v for k, v in jc.n2.items() if v}
    lines = [
        f"[{LABEL}]",
        f"pairs: {a}",
        "pairs by faces = pairs by r_tau: holds",
        f"n3 (nonzero): {({str(k): v for k, v in jc.n3.items() if v})}",
        f"n2 (nonzero): {nz}",
        f"n2 unipotent: {jc.n2_unipotent}",
    ]
    return out, lines


def _check(s: Support) -> tuple[dict, list[str], bool]:
    from .check import run_checks

    rows = run_checks(s)
    ok = all(r.ok for r in rows)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}{'  ' + r.detail if r.detail else ''}" for r in rows]
    return {"ok": ok, "checks": [r.to_json() for r in rows]}, lines, ok


def _random(cfg: RunConfig) -> tuple[dict, list[str]]:
    from .corpus import generate_corpus

    if cfg.seed is None or cfg.count is None:
        raise ParseError("random needs --seed and --count")
    corpus = generate_corpus(cfg.seed, cfg.count)
    return (
        {"seed": cfg.seed, "count": cfg.count, "supports": [s.to_json() for s in corpus]},
        [render(s) for s in corpus],
    )


def run(cfg: RunConfig) -> tuple[int, dict | None, list[str]]:
    """Execute one command; returns ``(exit code, JSON report, text lines)``."""
    try:
        if cfg.command == "random":
            out, lines = _random(cfg)
            return EXIT_OK, out, lines
        s = _support(cfg)
        if cfg.command == "spectrum":
            out, lines = _spectrum(s)
        elif cfg.command == "hodge":
            out, lines = _hodge(s)
        elif cfg.command == "zeta":
            out, lines = _zeta(s)
        elif cfg.command == "pairs":
            out, lines = _pairs(s)
        elif cfg.command == "check":
            out, lines, ok = _check(s)
            return (EXIT_OK if ok else EXIT_INVARIANT), out, lines
        else:
            raise ParseError(f"unknown command {cfg.command!r}")
        return EXIT_OK, out, lines
    except ParseError as exc:
        return EXIT_PARSE, {"error": "parse", "message": str(exc)}, [f"parse error: {exc}"]
    except ConjectureFinding as exc:
        return EXIT_INVARIANT, {"error": "conjecture finding", "message": str(exc), "details": exc.details}, [
            f"conjecture finding: {exc}"
        ]
    except InvariantError as exc:
        return EXIT_INVARIANT, {"error": "invariant", "message": str(exc)}, [f"invariant failure: {exc}"]
    except HypothesisError as exc:
        return EXIT_HYPOTHESIS, {"error": "hypothesis", "message": str(exc)}, [f"hypothesis violated: {exc}"]
    except NspecError as exc:
        return EXIT_PARSE, {"error": "input", "message": str(exc)}, [f"input error: {exc}"]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nspec",
        description="Spectrum invariants of polynomial germs from their Newton polyhedra.",
    )
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", help="polynomial, JSON support, or a file holding either")
    ap.add_argument("--expr", help="polynomial given inline, e.g. 'x^3+y^2*z'")
    ap.add_argument("--json", action="store_true", help="print a JSON report")
    ap.add_argument("--seed", type=int, help="seed for the random command")
    ap.add_argument("--count", type=int, help="number of supports for the random command")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.input, args.expr, args.json, args.seed, args.count)
    code, report, lines = run(cfg)
    stream = sys.stdout if code == EXIT_OK or cfg.command == "check" else sys.stderr
    if cfg.json:
        print(json.dumps(report), file=stream)
    else:
        print("\n".join(lines), file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
