"""Command line front end.

Exit codes: 0 success, 1 computation error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coxeter, hypertoric, nilcone, s3, suites
from .laurent import LaurentPolynomial, NegativeExponentComposition, NonPolynomialResult
from .matroid import LoopPresent, Matroid, NotAFlat, from_matrix, h_broken_circuit
from .partitions import Partition, ScaleExceeded, SizeMismatch, kostka, kostka_oracle_hl
from .report import CheckReport

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

COMPUTE_ERRORS = (LoopPresent, NotAFlat, SizeMismatch, ScaleExceeded, s3.NotDominated,
                  NegativeExponentComposition, NonPolynomialResult, ArithmeticError)


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# -- argument parsing helpers ---------------------------------------------------------

def _matroid_arg(args) -> tuple[str, Matroid]:
    if args.matrix is not None and args.corpus is not None:
        raise UsageError("--matrix", "give either --matrix or --corpus, not both")
    if args.matrix is not None:
        try:
            data = json.loads(args.matrix)
        except json.JSONDecodeError as exc:
            raise UsageError("--matrix", f"not valid JSON ({exc.msg})") from exc
        if isinstance(data, dict):
            data = data.get("matrix")
        if not (isinstance(data, list) and all(isinstance(r, list) for r in data)):
            raise UsageError("--matrix", "expected a list of integer rows")
        try:
            return "matrix", from_matrix(data)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, LoopPresent):
                raise
            raise UsageError("--matrix", str(exc)) from exc
    if args.corpus is not None:
        names = suites.corpus_names(args.corpus)
        if len(names) != 1:
            raise UsageError("--corpus", "this command takes a single matroid")
        return names[0], _load(args.corpus)[0]
    raise UsageError("--matrix", "a matrix (or --corpus) is required")


def _load(corpus: str) -> list[Matroid]:
    try:
        return suites.load_corpus(corpus)
    except suites.UnknownCorpus as exc:
        raise UsageError("--corpus", str(exc)) from exc
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError("--corpus", f"unreadable matrix file ({exc})") from exc


def _partition(flag: str, text: str | None) -> Partition:
    if text is None:
        raise UsageError(flag, "required")
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(flag, f"not a partition: {text!r}") from exc


def _weyl(args):
    if args.type is None:
        raise UsageError("--type", "required")
    try:
        return coxeter.build_weyl(args.type)
    except coxeter.UnsupportedType as exc:
        raise UsageError("--type", f"unsupported type {exc}") from exc


def _chi(w, flag: str, label: str | None) -> str:
    if label is None:
        raise UsageError(flag, "required")
    table = coxeter.character_table(w)
    try:
        return table.label(label)
    except (KeyError, ValueError) as exc:
        raise UsageError(flag, f"{label!r} is not one of {', '.join(table.labels)}") from exc


# -- output ---------------------------------------------------------------------------

def _emit_poly(args, p: LaurentPolynomial, status: str | None = None, **extra) -> int:
    if args.format == "json":
        out = {"result": p.to_text(), "polynomial": p.to_json(), **extra}
        if status:
            out["status"] = status
        print(json.dumps(out, sort_keys=True))
    else:
        print(p.to_text())
    return EXIT_OK


def _emit_reports(args, reports: list[CheckReport]) -> int:
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"passed": ok, "reports": [r.to_json() for r in reports]},
                         sort_keys=True))
    else:
        for r in reports:
            print(r.to_text())
    return EXIT_OK if ok else EXIT_VERIFY


def _emit_value(args, value) -> int:
    if args.format == "json":
        print(json.dumps({"result": value}, sort_keys=True))
    else:
        print(value)
    return EXIT_OK


# -- commands -------------------------------------------------------------------------

def cmd_tutte(args) -> int:
    _, m = _matroid_arg(args)
    if args.op == "tutte":
        return _emit_poly(args, m.tutte(args.method))
    if args.op == "char":
        return _emit_poly(args, m.char_poly())
    if args.op == "h-br":
        return _emit_poly(args, h_broken_circuit(m))
    if args.op == "flats":
        flats = [sorted(f.elements) for f in m.flats()]
        if args.format == "json":
            print(json.dumps({"result": flats}))
        else:
            for f in flats:
                print("{" + ",".join(map(str, f)) + "}")
        return EXIT_OK
    if args.op == "coloops":
        return _emit_value(args, sorted(m.coloops()))
    if args.op == "unimodular":
        return _emit_value(args, m.is_unimodular())
    if args.op == "rank":
        return _emit_value(args, m.rk)
    if args.op == "dual":
        return _emit_value(args, [[int(a) for a in row] for row in m.dual().matrix()])
    raise AssertionError(args.op)


def cmd_denham(args) -> int:
    _, m = _matroid_arg(args)
    return _emit_poly(args, hypertoric.denham_phi(m))


def cmd_hypertoric(args) -> int:
    name, m = _matroid_arg(args)
    if args.op == "verify":
        return _emit_reports(args, [hypertoric.verify_laplacian(m, name)])
    fn = {"poincare": hypertoric.hypertoric_poincare,
          "via-phi": hypertoric.hypertoric_poincare_via_phi,
          "q-ih": hypertoric.q_ih,
          "p-zero": hypertoric.p_zero}[args.op]
    warnings = []
    if m.coloops():
        warnings.append("matroid has coloops")
    if m.size <= 12 and not m.is_unimodular():
        warnings.append("representation is not totally unimodular")
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return _emit_poly(args, fn(m), warnings=warnings)


def cmd_kostka(args) -> int:
    lam = _partition("--lambda", args.lam)
    mu = _partition("--mu", args.mu)
    p = kostka_oracle_hl(lam, mu) if args.oracle else kostka(lam, mu)
    return _emit_poly(args, p)


def cmd_s3(args) -> int:
    lam = _partition("--lambda", args.lam)
    mu = _partition("--mu", args.mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    v = s3.S3Variety(lam, mu)
    if args.ih:
        return _emit_poly(args, s3.s3_ih_poly(v), "theorem")
    if args.at_x0:
        return _emit_poly(args, s3.s3_p_zero(v), s3.STATUS)
    return _emit_poly(args, s3.s3_poincare(v), s3.STATUS)


def cmd_coxeter(args) -> int:
    w = _weyl(args)
    table = coxeter.character_table(w)
    if args.op == "kostka":
        return _emit_poly(args, coxeter.generalized_kostka(w, _chi(w, "--chi", args.chi)))
    if args.op == "multiplicity":
        return _emit_poly(args, coxeter.coinvariant_multiplicity(w, _chi(w, "--chi", args.chi)))
    if args.op == "flag":
        return _emit_poly(args, coxeter.flag_poincare(w))
    if args.op == "order":
        return _emit_value(args, w.order)
    if args.op == "table":
        if args.format == "json":
            print(json.dumps({"classes": [[c.label, c.size] for c in table.classes],
                              "characters": {lab: table.values[lab] for lab in table.labels}}))
        else:
            print("class sizes: " + " ".join(str(c.size) for c in table.classes))
            for lab in table.labels:
                print(f"{lab}: " + " ".join(map(str, table.values[lab])))
        return EXIT_OK
    raise AssertionError(args.op)


def cmd_cone(args) -> int:
    if args.type is None:
        raise UsageError("--type", "required")
    w = _weyl(args)
    name = w.name
    if args.verify:
        if name in ("B2", "G2"):
            return _emit_reports(args, [nilcone.verify_springer_case(name)])
        return _emit_reports(args, [nilcone.verify_palindromicity(w.rank + 1)])
    status = nilcone.conjecture_status(name)
    if args.chi is not None:
        return _emit_poly(args, nilcone.h_multiplicity(name, _chi(w, "--chi", args.chi)), status)
    return _emit_poly(args, nilcone.conjecture_poincare(name), status)


def cmd_verify(args) -> int:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if args.corpus is not None:
        _load(args.corpus)
    reports = suites.run_suites(names, args.corpus or "acceptance")
    return _emit_reports(args, reports)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    matrix = argparse.ArgumentParser(add_help=False)
    matrix.add_argument("--matrix", help="integer matrix as JSON, e.g. '[[1,0,1],[0,1,1]]'")
    matrix.add_argument("--corpus", help="graphic:K4, graphic:cycle_5, file:<path>, dual:<name>")

    parts = argparse.ArgumentParser(add_help=False)
    parts.add_argument("--lambda", dest="lam", help="partition such as 2,1 or 1^3")
    parts.add_argument("--mu", help="partition such as 1,1,1")

    p = _Parser(prog="poisson-poincare",
                description="Poisson-de Rham Poincare polynomials of symplectic cones.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("tutte", parents=[common, matrix], help="matroid invariants")
    s.add_argument("--op", default="tutte",
                   choices=("tutte", "char", "h-br", "flats", "coloops", "unimodular", "rank", "dual"))
    s.add_argument("--method", default="auto", choices=("auto", "subsets", "deletion-contraction"))
    s.set_defaults(func=cmd_tutte)

    s = sub.add_parser("denham", parents=[common, matrix], help="flat-sum polynomial Phi(x,y,b)")
    s.set_defaults(func=cmd_denham)

    s = sub.add_parser("hypertoric", parents=[common, matrix], help="hypertoric cone polynomials")
    s.add_argument("--op", default="poincare", choices=("poincare", "via-phi", "q-ih", "p-zero", "verify"))
    s.set_defaults(func=cmd_hypertoric)

    s = sub.add_parser("kostka", parents=[common, parts], help="Kostka-Foulkes polynomial")
    s.add_argument("--oracle", action="store_true", help="use the Hall-Littlewood oracle")
    s.set_defaults(func=cmd_kostka)

    s = sub.add_parser("s3", parents=[common, parts], help="type A S3-variety polynomials")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--at-x0", action="store_true", help="P(0, y) only")
    g.add_argument("--ih", action="store_true", help="intersection cohomology polynomial")
    s.set_defaults(func=cmd_s3)

    s = sub.add_parser("coxeter", parents=[common], help="Weyl group data")
    s.add_argument("--type", help="A1..A5, B2, G2")
    s.add_argument("--op", default="kostka", choices=("kostka", "multiplicity", "flag", "order", "table"))
    s.add_argument("--chi", help="character label (triv, sigma, tau, tau_sigma, h, h_tau, or a partition)")
    s.set_defaults(func=cmd_coxeter)

    s = sub.add_parser("cone", parents=[common], help="nilpotent cone polynomial")
    s.add_argument("--type", help="A1..A5, B2, G2")
    s.add_argument("--chi", help="print h(chi; y) instead of P(x, y)")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("suite", choices=(*suites.SUITES, "all"))
    s.add_argument("--corpus", help="matroid corpus for laplacian, specialization, gale")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"poisson-poincare {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except COMPUTE_ERRORS as exc:
        print(f"poisson-poincare {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
