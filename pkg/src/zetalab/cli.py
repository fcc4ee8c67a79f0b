"""Command-line front end: ``zetalab <command> [args] [--json] [--tol T] [--order M] [--precision N]``.

Exit status is 0 on success, 1 when the library rejects the input (the
error class name is reported) and 2 for usage errors.  With ``--json``
every command prints a single JSON document built from the library's own
``to_json`` forms, so the output can be parsed back with ``from_json``.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import bernoulli, characters, modular, mzv, padic, zetavalues
from .errors import InvalidInput, ZetalabError
from .exactnum import TruncatedSeries, format_rational, parse_rational

DEFAULT_TOL = 1e-10
DEFAULT_PRECISION = 3
DEFAULT_SERIES_ORDER = 10
DEFAULT_MZV_TERMS = 100_000


@dataclass
class CommandResult:
    exit_code: int
    payload: Any  # a JSON-able object when --json was given, text otherwise

    def render(self) -> str:
        if isinstance(self.payload, str):
            return self.payload
        return json.dumps(self.payload)


class _UsageError(Exception):
    pass


class _Exit(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of printing and exiting."""

    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        raise _Exit(status, message or "")


# ---------------------------------------------------------------------------
# helpers


def _opt(args, name, default):
    value = getattr(args, name, None)
    return default if value is None else value


def _character(args) -> characters.DirichletCharacter:
    given = [x is not None for x in (args.disc, args.char, getattr(args, "omega", None))]
    if sum(given) > 1:
        raise InvalidInput("give at most one of --disc, --char, --omega")
    if args.disc is not None:
        return characters.kronecker_character(args.disc)
    if args.char is not None:
        try:
            data = json.loads(args.char)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"--char is not valid JSON: {exc}") from exc
        return characters.DirichletCharacter.from_json(data)
    if getattr(args, "omega", None) is not None:
        return padic.principal_teichmuller_power(args.p, args.omega)
    return characters.principal_character()


def _approx(value: complex, bound: float, as_json: bool, **extra):
    value = complex(value)
    if as_json:
        return {**extra, "real": value.real, "imag": value.imag, "errorBound": bound}
    if value.imag == 0:
        text = f"{value.real!r}"
    else:
        text = f"{value.real!r} {'+' if value.imag >= 0 else '-'} {abs(value.imag)!r}i"
    return f"{text} +/- {bound:.3g}"


def _series_table(series: TruncatedSeries) -> str:
    rows = [(str(series.leading_exponent + i), format_rational(c)) for i, c in enumerate(series.coefficients)]
    w0 = max([len("n")] + [len(r[0]) for r in rows])
    w1 = max([len("coefficient")] + [len(r[1]) for r in rows])
    lines = [f"{'n':>{w0}}  {'coefficient':>{w1}}"]
    lines += [f"{a:>{w0}}  {b:>{w1}}" for a, b in rows]
    lines.append(f"O(q^{series.truncation_order})")
    return "\n".join(lines)


def _report(report: bernoulli.CongruenceReport, as_json: bool):
    if as_json:
        return report.to_json()
    rel = "==" if report.holds else "!="
    return f"{'holds' if report.holds else 'fails'}: {report.lhs} {rel} {report.rhs} (mod {report.modulus})"


# ---------------------------------------------------------------------------
# commands


def cmd_bernoulli(args, as_json):
    b = bernoulli.bernoulli_number(args.m)
    return {"m": args.m, "value": format_rational(b)} if as_json else format_rational(b)


def cmd_bernoulli_poly(args, as_json):
    poly = bernoulli.bernoulli_polynomial(args.m)
    return {"m": args.m, "coefficients": poly.to_json()} if as_json else str(poly)


def cmd_gen_bernoulli(args, as_json):
    chi = _character(args)
    value = bernoulli.generalized_bernoulli(args.n, chi)
    if as_json:
        return {"n": args.n, "character": chi.to_json(), "value": value.to_json()}
    return str(value)


def cmd_voronoi(args, as_json):
    return _report(bernoulli.voronoi_check(args.a, args.N, args.m), as_json)


def cmd_kummer(args, as_json):
    N = _opt(args, "precision", DEFAULT_PRECISION)
    return _report(bernoulli.kummer_check(args.p, args.m, args.n, N), as_json)


def cmd_zeta(args, as_json):
    if args.even is not None:
        value = zetavalues.zeta_even(args.even)
        return value.to_json() if as_json else str(value)
    value = zetavalues.zeta_negative(args.negative)
    return {"s": -args.negative, "value": format_rational(value)} if as_json else format_rational(value)


def cmd_polylog(args, as_json):
    value, bound = zetavalues.polylog_with_bound(args.m, args.z, _opt(args, "tol", DEFAULT_TOL))
    return _approx(value, bound, as_json, m=args.m)


def cmd_lvalue(args, as_json):
    chi = _character(args)
    tol = _opt(args, "tol", DEFAULT_TOL)
    value, bound = zetavalues.dirichlet_L_with_bound(chi, args.s, tol)
    return _approx(value, bound, as_json, s=args.s, character=chi.to_json())


def cmd_class_number(args, as_json):
    tol = _opt(args, "tol", DEFAULT_TOL)
    h = zetavalues.class_number(args.D, tol)
    if as_json:
        return {"discriminant": args.D, "classNumber": h, "estimate": zetavalues.class_number_estimate(args.D, tol)}
    return str(h)


def _mzv_terms(args) -> int:
    return _opt(args, "order", DEFAULT_MZV_TERMS)


def cmd_mzv(args, as_json):
    index = mzv.MZVIndex.parse(args.index)
    value, bound = mzv.mzv(index, _mzv_terms(args))
    return _approx(value, bound, as_json, index=list(index.exponents), terms=_mzv_terms(args))


def cmd_cmzv(args, as_json):
    index = mzv.MZVIndex.parse(args.index, args.twists, args.level)
    value, bound = mzv.cyclotomic_mzv(index, _mzv_terms(args))
    extra = {"index": list(index.exponents), "twists": list(index.twists or ()), "level": index.level}
    return _approx(value, bound, as_json, terms=_mzv_terms(args), **extra)


def cmd_stuffle(args, as_json):
    tol = _opt(args, "tol", 1e-6)
    defect, bound = mzv.stuffle_defect(args.a, args.b, tol)
    holds = abs(defect) < tol
    if as_json:
        return {"a": args.a, "b": args.b, "defect": defect, "errorBound": bound, "tol": tol, "holds": holds}
    return f"{'holds' if holds else 'fails'}: defect {defect:.3e} (error bound {bound:.3g}, tol {tol:g})"


def cmd_iterint(args, as_json):
    tol = _opt(args, "tol", DEFAULT_TOL)
    value = mzv.zeta2_via_iterated_integral(tol)
    return _approx(value, tol, as_json)


def cmd_padic_embed(args, as_json):
    x = padic.padic_embed(parse_rational(args.r), args.p, _opt(args, "precision", DEFAULT_PRECISION))
    return x.to_json() if as_json else str(x)


def cmd_teichmuller(args, as_json):
    x = padic.teichmuller(args.c, args.p, _opt(args, "precision", DEFAULT_PRECISION))
    return x.to_json() if as_json else str(x)


def cmd_distribution(args, as_json):
    interval = padic.PAdicInterval(args.p, args.alpha, args.N)
    value = padic.bernoulli_distribution(args.m, interval)
    additive = padic.distribution_additivity_check(args.m, interval)
    if as_json:
        return {"m": args.m, "p": args.p, "alpha": args.alpha, "N": args.N,
                "value": format_rational(value), "additive": additive}
    return f"{format_rational(value)} (additive: {'yes' if additive else 'no'})"


def cmd_padic_zeta(args, as_json):
    x = padic.padic_zeta(args.p, args.a, args.s, _opt(args, "precision", DEFAULT_PRECISION))
    return x.to_json() if as_json else str(x)


def cmd_padic_l(args, as_json):
    chi = _character(args)
    x = padic.padic_L(args.p, chi, args.n, _opt(args, "precision", DEFAULT_PRECISION))
    return x.to_json() if as_json else str(x)


def cmd_sigma(args, as_json):
    value = modular.divisor_sigma(args.k, args.n)
    return {"k": args.k, "n": args.n, "value": value} if as_json else str(value)


def _order(args) -> int:
    return _opt(args, "order", DEFAULT_SERIES_ORDER)


def cmd_eisenstein(args, as_json):
    e = modular.eisenstein_series(args.k, _order(args))
    if as_json:
        return {"k": e.k, "weight": e.weight, "series": e.series.to_json()}
    return _series_table(e.series)


def cmd_delta(args, as_json):
    s = modular.discriminant_series(_order(args))
    return s.to_json() if as_json else _series_table(s)


def cmd_j(args, as_json):
    s = modular.j_series(_order(args))
    return s.to_json() if as_json else _series_table(s)


# ---------------------------------------------------------------------------
# parser


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS defaults so a flag given before the subcommand is not
    # overwritten by the subparser's own copy
    g = _Parser(add_help=False)
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON document")
    g.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="absolute error tolerance")
    g.add_argument("--order", type=int, default=argparse.SUPPRESS,
                   help="series order M, or the truncation bound for mzv/cmzv")
    g.add_argument("--precision", type=int, default=argparse.SUPPRESS, help="p-adic precision N")
    return g


def _char_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--disc", type=int, help="use the Kronecker character of this fundamental discriminant")
    sub.add_argument("--char", help='character as JSON {"modulus", "order", "values"}')


def build_parser() -> argparse.ArgumentParser:
    g = _global_flags()
    parser = _Parser(prog="zetalab", description="Exact and certified computations with Bernoulli numbers and zeta values.", parents=[g])
    subs = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    subs.required = True

    def add(name, func, help_text):
        sub = subs.add_parser(name, parents=[g], help=help_text)
        sub.set_defaults(func=func)
        return sub

    sub = add("bernoulli", cmd_bernoulli, "Bernoulli number B_m")
    sub.add_argument("m", type=int)
    sub = add("bernoulli-poly", cmd_bernoulli_poly, "Bernoulli polynomial B_m(x)")
    sub.add_argument("m", type=int)
    sub = add("gen-bernoulli", cmd_gen_bernoulli, "generalized Bernoulli number B_{n,chi}")
    sub.add_argument("n", type=int)
    _char_flags(sub)
    sub = add("voronoi", cmd_voronoi, "Voronoi congruence for B_2m modulo N")
    sub.add_argument("a", type=int)
    sub.add_argument("N", type=int)
    sub.add_argument("m", type=int)
    sub = add("kummer", cmd_kummer, "Kummer congruence modulo p^(N+1), N from --precision")
    sub.add_argument("p", type=int)
    sub.add_argument("m", type=int)
    sub.add_argument("n", type=int)
    sub = add("zeta", cmd_zeta, "exact zeta(2m) or zeta(-n)")
    which = sub.add_mutually_exclusive_group(required=True)
    which.add_argument("--even", type=int, metavar="2M")
    which.add_argument("--negative", type=int, metavar="N")
    sub = add("polylog", cmd_polylog, "polylogarithm Li_m(z) for |z| <= 1")
    sub.add_argument("m", type=int)
    sub.add_argument("z", type=complex)
    sub = add("lvalue", cmd_lvalue, "Dirichlet L(s, chi) for real s > 0")
    sub.add_argument("s", type=float)
    _char_flags(sub)
    sub = add("class-number", cmd_class_number, "class number of an imaginary quadratic field")
    sub.add_argument("D", type=int)
    sub = add("mzv", cmd_mzv, "multiple zeta value, index as a comma list")
    sub.add_argument("index")
    sub = add("cmzv", cmd_cmzv, "cyclotomic multiple zeta value")
    sub.add_argument("index")
    sub.add_argument("--twists", required=True, help="comma list of root-of-unity exponents")
    sub.add_argument("--level", type=int, required=True)
    sub = add("stuffle", cmd_stuffle, "check zeta(a)zeta(b) = zeta(a,b) + zeta(b,a) + zeta(a+b)")
    sub.add_argument("a", type=int)
    sub.add_argument("b", type=int)
    add("iterint", cmd_iterint, "zeta(2) from its iterated integral")
    sub = add("padic-embed", cmd_padic_embed, "embed a rational into Q_p")
    sub.add_argument("r")
    sub.add_argument("p", type=int)
    sub = add("teichmuller", cmd_teichmuller, "Teichmueller lift of c")
    sub.add_argument("c", type=int)
    sub.add_argument("p", type=int)
    sub = add("distribution", cmd_distribution, "Bernoulli distribution of [alpha, N]_p")
    sub.add_argument("m", type=int)
    sub.add_argument("p", type=int)
    sub.add_argument("alpha", type=int)
    sub.add_argument("N", type=int)
    sub = add("padic-zeta", cmd_padic_zeta, "branch zeta_{p,a} at an integer s")
    sub.add_argument("p", type=int)
    sub.add_argument("a", type=int)
    sub.add_argument("s", type=int)
    sub = add("padic-l", cmd_padic_l, "Kubota-Leopoldt L_p(1-n, chi)")
    sub.add_argument("p", type=int)
    sub.add_argument("n", type=int)
    _char_flags(sub)
    sub.add_argument("--omega", type=int, metavar="A", help="use the Teichmueller power omega^A")
    sub = add("sigma", cmd_sigma, "divisor sum sigma_k(n)")
    sub.add_argument("k", type=int)
    sub.add_argument("n", type=int)
    sub = add("eisenstein", cmd_eisenstein, "q-expansion of E_k (weight 2k)")
    sub.add_argument("k", type=int)
    add("delta", cmd_delta, "q-expansion of the discriminant")
    add("j", cmd_j, "q-expansion of the j-invariant")
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    out = io.StringIO()
    try:
        with contextlib.redirect_stdout(out):
            args = parser.parse_args(list(argv))
    except _UsageError as exc:
        return CommandResult(2, str(exc))
    except _Exit as exc:  # --help
        return CommandResult(exc.status, out.getvalue() + exc.message)
    as_json = bool(getattr(args, "json", False))
    try:
        payload = args.func(args, as_json)
    except ZetalabError as exc:
        name = type(exc).__name__
        if as_json:
            return CommandResult(1, {"error": name, "message": str(exc)})
        return CommandResult(1, f"error: {name}: {exc}")
    return CommandResult(0, payload)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if result.exit_code == 0 else sys.stderr
    print(result.render(), file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
