"""Command-line front end: deterministic text/JSON access to every operation.

All input arrives through flags (no prompts, no environment variables), and
identical invocations produce byte-identical output.  Exit status 0 means
success, 1 means a verification ran and failed, 2 means a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .braid import BraidWord
from .defects import defect
from .garside import to_normal_form
from .invariants import MarkovBounds, charpoly_invariant, enumerate_markov_class
from .matrix import RingMatrix
from .reps import (
    MatrixRep,
    birman_image,
    burau,
    burau_ext,
    det_tau_b4_diff,
    det_tau_symbolic,
    exterior_square_burau,
    lkb,
    lkb_ext,
    rep_apply,
    solve_extension_space,
    verify_group_algebra_relations,
    verify_relations,
)
from .ring import canonical_string
from .tl import tl_rho, verify_tl_relations

MATRIX_REPS = ("burau", "burau-ext", "lkb", "lkb-ext", "wedge-burau")
REP_NAMES = MATRIX_REPS + ("birman",)


class UsageError(ValueError):
    pass


def _parse_params(items: list[str] | None) -> dict[str, object]:
    params: dict[str, object] = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"bad --param {item!r}; expected name=value")
        name, value = item.split("=", 1)
        name = name.strip()
        value = value.strip()
        if value == "sym":
            params[name] = name
        else:
            try:
                params[name] = Fraction(value)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad parameter value {value!r}") from None
    return params


def _build_rep(name: str, n: int, params: dict[str, object]) -> MatrixRep:
    if name == "burau":
        return burau(n)
    if name == "burau-ext":
        return burau_ext(n, params.get("a"))
    if name == "lkb":
        return lkb(n)
    if name == "lkb-ext":
        return lkb_ext(n, params.get("u"), params.get("v"))
    if name == "wedge-burau":
        return exterior_square_burau(n)
    raise UsageError(f"unknown matrix representation {name!r}")


def _emit(data: dict, out: str, text_fn) -> None:
    if out == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text_fn())


def _matrix_text(m: RingMatrix) -> str:
    return str(m)


def cmd_rep(args) -> int:
    params = _parse_params(args.param)
    if args.rep == "birman":
        raise UsageError("use the 'birman' subcommand for group-algebra images")
    rep = _build_rep(args.rep, args.n, params)
    word = BraidWord.parse(args.n, args.word)
    image = rep_apply(rep, word)
    _emit(image.to_json_dict(), args.out, lambda: _matrix_text(image))
    return 0


def cmd_verify(args) -> int:
    params = _parse_params(args.param)
    if args.rep == "birman":
        report = verify_group_algebra_relations(
            args.n, params.get("a"), params.get("b"), params.get("c")
        )
    else:
        report = verify_relations(_build_rep(args.rep, args.n, params))
    data = {
        "subject": report.subject,
        "monoid": report.monoid,
        "total": len(report.checks),
        "failures": [
            {"label": c.label, "lhs": c.lhs, "rhs": c.rhs} for c in report.failures
        ],
    }

    def text() -> str:
        lines = [report.summary()]
        for c in report.failures:
            lines.append(f"FAIL {c.label}: {c.lhs} vs {c.rhs}")
            lines.append(f"  difference: {c.difference}")
        return "\n".join(lines)

    _emit(data, args.out, text)
    return 0 if report.all_ok else 1


def cmd_charpoly(args) -> int:
    word = BraidWord.parse(args.n, args.word)
    value = charpoly_invariant(args.n, word)
    data = {"n": args.n, "word": args.word, "poly": str(value)}
    _emit(data, args.out, lambda: str(value))
    return 0


def cmd_markov(args) -> int:
    word = BraidWord.parse(args.n, args.word)
    bounds = MarkovBounds(
        depth=args.depth, max_strands=args.max_strands, max_word_length=args.max_len
    )
    sample = enumerate_markov_class(word, bounds)
    data = {
        "seed": {"n": args.n, "word": args.word},
        "bounds": {
            "depth": bounds.depth,
            "max_strands": bounds.max_strands,
            "max_word_length": bounds.max_word_length,
        },
        "polys": list(sample.polys),
        "witnesses": {p: {"n": w.n, "word": w.text()} for p, w in sample.witnesses},
    }

    def text() -> str:
        lines = [f"{len(sample.polys)} polynomials"]
        for p, w in sample.witnesses:
            lines.append(f"{p}  <-  n={w.n} word={w.text() or 'e'}")
        return "\n".join(lines)

    _emit(data, args.out, text)
    return 0


def cmd_defect(args) -> int:
    word = BraidWord.parse(args.n, args.word)
    result = defect(args.n, word)
    data = {
        "n": args.n,
        "word": args.word,
        "additive": result.additive.to_json_dict(),
        "multiplicative": result.multiplicative.to_json_dict(),
    }

    def text() -> str:
        return (
            "additive:\n"
            + _matrix_text(result.additive)
            + "\nmultiplicative:\n"
            + _matrix_text(result.multiplicative)
        )

    _emit(data, args.out, text)
    return 0


def cmd_solve_ext(args) -> int:
    point = {}
    for piece in args.point.split(","):
        if "=" not in piece:
            raise UsageError(f"bad --point component {piece!r}")
        name, value = piece.split("=", 1)
        point[name.strip()] = Fraction(value.strip())
    solution = solve_extension_space(args.n, point)
    data = {
        "n": solution.n,
        "dimension": solution.dimension,
        "point": {k: str(v) for k, v in solution.point},
        "contains_generator_image": solution.contains_generator_image,
        "contains_identity": solution.contains_identity,
        "quadratic_ok": solution.quadratic_ok,
        "basis": [
            [[str(x) for x in row] for row in mat] for mat in solution.basis_matrices
        ],
    }

    def text() -> str:
        lines = [
            f"dimension {solution.dimension}",
            f"contains generator image: {solution.contains_generator_image}",
            f"contains identity: {solution.contains_identity}",
        ]
        if solution.quadratic_ok is not None:
            lines.append(f"quadratic relations on span: {solution.quadratic_ok}")
        return "\n".join(lines)

    _emit(data, args.out, text)
    return 0


def cmd_det_tau(args) -> int:
    det = det_tau_symbolic(args.n)
    data: dict = {"n": args.n, "det": canonical_string(det)}
    lines = [canonical_string(det)]
    if args.n == 4:
        cmp = det_tau_b4_diff()
        data["reference"] = canonical_string(cmp["reference"])
        data["diff"] = canonical_string(cmp["diff"])
        data["only_u6_terms"] = cmp["only_u6_terms"]
        lines.append(f"reference diff: {canonical_string(cmp['diff'])}")
        lines.append(f"diff confined to u^6 terms: {cmp['only_u6_terms']}")
    _emit(data, args.out, lambda: "\n".join(lines))
    return 0


def cmd_nf(args) -> int:
    word = BraidWord.parse(args.n, args.word)
    nf = to_normal_form(word)
    data = {
        "n": args.n,
        "word": args.word,
        "inf": nf.inf,
        "factors": [[v + 1 for v in f] for f in nf.factors],
        "text": str(nf),
    }
    _emit(data, args.out, lambda: str(nf))
    return 0


def cmd_tl(args) -> int:
    params = _parse_params(args.param)
    if args.verify:
        report = verify_tl_relations(args.n, params.get("a"), params.get("b"))
        data = {
            "subject": report.subject,
            "total": len(report.checks),
            "failures": [{"label": c.label} for c in report.failures],
        }
        _emit(data, args.out, report.summary)
        return 0 if report.all_ok else 1
    word = BraidWord.parse(args.n, args.word)
    elem = tl_rho(args.n, word, params.get("a"), params.get("b"))
    data = {
        "n": args.n,
        "word": args.word,
        "terms": {str(d): str(c) for d, c in sorted(elem.terms.items())},
    }
    _emit(data, args.out, lambda: str(elem))
    return 0


def cmd_birman(args) -> int:
    params = _parse_params(args.param)
    word = BraidWord.parse(args.n, args.word)
    elem = birman_image(word, params.get("a"), params.get("b"), params.get("c"))
    data = {
        "n": args.n,
        "word": args.word,
        "terms": {str(k): str(c) for k, c in sorted(elem.terms.items())},
    }
    _emit(data, args.out, lambda: str(elem))
    return 0


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidrep",
        description="Exact braid and singular-braid representations over Laurent rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word=True, out_default="text"):
        p.add_argument("--n", type=int, required=True, help="strand count")
        if word:
            p.add_argument("--word", default="", help='braid word, e.g. "1 2 -1 t1"')
        p.add_argument("--out", choices=("text", "json"), default=out_default)

    p = sub.add_parser("rep", help="image matrix of a word under a representation")
    p.add_argument("--rep", choices=MATRIX_REPS, required=True)
    p.add_argument("--param", action="append", metavar="k=v")
    common(p, out_default="json")
    p.set_defaults(fn=cmd_rep)

    p = sub.add_parser("verify", help="check every defining relation symbolically")
    p.add_argument("--rep", choices=REP_NAMES, required=True)
    p.add_argument("--param", action="append", metavar="k=v")
    common(p, word=False)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("charpoly", help="characteristic-polynomial invariant of a word")
    common(p)
    p.set_defaults(fn=cmd_charpoly)

    p = sub.add_parser("markov", help="bounded Markov-class polynomial sample")
    common(p, out_default="json")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--max-strands", type=int, default=4)
    p.add_argument("--max-len", type=int, default=12)
    p.set_defaults(fn=cmd_markov)

    p = sub.add_parser("defect", help="additive and multiplicative defects of a word")
    common(p, out_default="json")
    p.set_defaults(fn=cmd_defect)

    p = sub.add_parser("solve-ext", help="extension solution space at a rational point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--point", required=True, metavar="q=r,t=s")
    p.add_argument("--out", choices=("text", "json"), default="json")
    p.set_defaults(fn=cmd_solve_ext)

    p = sub.add_parser("det-tau", help="symbolic determinant of the singular image")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_det_tau)

    p = sub.add_parser("nf", help="Garside left-greedy normal form")
    common(p)
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("tl", help="Temperley-Lieb image of a word (or --verify)")
    p.add_argument("--param", action="append", metavar="k=v")
    p.add_argument("--verify", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_tl)

    p = sub.add_parser("birman", help="group-algebra image of a singular word")
    p.add_argument("--param", action="append", metavar="k=v")
    common(p)
    p.set_defaults(fn=cmd_birman)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
