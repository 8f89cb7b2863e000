"""Command-line front end.

Five subcommands: analyze (per-index CSV of all the growth and
denominator inequalities), certify (witness certificate JSON), measure
(polynomial bound evidence JSON), search (exhaustive polynomial report),
term (decimal expansion of a term or a partial sum).

Exit status contract: 0 all requested checks verified, 1 some check
failed or stayed inconclusive, 2 invalid input or violated hypothesis.
Errors are emitted to stderr as a one-object JSON document with a stable
machine-readable code.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .convergents import partial_sum
from .enclosure import enclose
from .errors import SeriesCertError
from .measure import PolynomialInt, brute_force_min, enumerate_brackets, verify_measure
from .sequences import (
    DEFAULT_DIGIT_BUDGET,
    Ordering,
    SequenceSpec,
    checked_pow,
    compare_power,
    term,
)
from .serialize import (
    brute_force_obj,
    canonical_dumps,
    certificate_obj,
    decimal_digits,
    evidence_obj,
    int_to_str,
    parse_rational,
    rational_from_obj,
    spec_from_obj,
)
from .witness import certify

ANALYZE_COLUMNS = (
    "n",
    "digits",
    "growth",
    "sandwich_lower",
    "sandwich_upper",
    "log10_shrink",
    "denom_bound",
    "q_exp_bound",
    "q_growth",
)


@dataclass
class RunConfig:
    command: str
    spec_path: Optional[str] = None
    alpha: Optional[str] = None
    k: Optional[str] = None
    degree: Optional[int] = None
    height: Optional[int] = None
    first: int = 1
    last: Optional[int] = None
    out: Optional[str] = None
    fmt: str = "csv"
    digit_budget: int = DEFAULT_DIGIT_BUDGET
    enum_cap: int = 10**6
    max_refine: int = 8
    revalidate: Optional[str] = None
    coeffs: Optional[str] = None
    terms: int = 4
    n: Optional[int] = None
    m: Optional[int] = None
    digits: int = 50
    csv_path: Optional[str] = None


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _error(exc: SeriesCertError) -> int:
    payload = {"error": exc.code, "message": str(exc)}
    sys.stderr.write(canonical_dumps(payload))
    return exc.exit_code


def _load_spec(path: Optional[str]) -> SequenceSpec:
    if not path:
        raise SeriesCertError("--spec is required for this command")
    with open(path) as handle:
        return spec_from_obj(json.load(handle))


def _passfail(flag: bool) -> str:
    return "pass" if flag else "fail"


def _run_analyze(config: RunConfig) -> int:
    spec = _load_spec(config.spec_path)
    if config.alpha is None:
        raise SeriesCertError("--alpha is required for analyze")
    if config.last is None:
        raise SeriesCertError("--to is required for analyze")
    alpha = parse_rational(config.alpha, "alpha")
    k = parse_rational(config.k, "k") if config.k else None
    first, last = config.first, config.last
    if first < 1 or last < first:
        raise SeriesCertError(f"window {first}..{last} is empty or invalid")
    budget = config.digit_budget

    rows = []
    all_pass = True
    total = Fraction(0)
    product = 1
    a_n = term(spec, 1, budget)
    for n in range(1, last + 1):
        a_next = term(spec, n + 1, budget)
        total += Fraction(1, a_n)
        q_n = total.denominator
        product *= a_n
        if n >= first:
            growth = compare_power(a_next, a_n, alpha + 1, budget) is Ordering.GREATER
            log_shrink = float(alpha) * math.log10(product) - math.log10(a_next)
            denom_ok = q_n <= product
            p_num, p_den = alpha.numerator, alpha.denominator
            q_exp_ok = checked_pow(q_n, p_num, budget) <= checked_pow(
                a_n, p_num + p_den, budget
            )
            flags = [growth, denom_ok, q_exp_ok]
            row = {
                "n": n,
                "digits": decimal_digits(a_n),
                "growth": _passfail(growth),
                "sandwich_lower": "",
                "sandwich_upper": "",
                "log10_shrink": f"{log_shrink:.6g}",
                "denom_bound": _passfail(denom_ok),
                "q_exp_bound": _passfail(q_exp_ok),
                "q_growth": "",
            }
            if k is not None:
                lower = compare_power(a_next, a_n, alpha + 1, budget) is not Ordering.LESS
                upper = compare_power(a_next, a_n, k * alpha, budget) is Ordering.LESS
                q_next = (total + Fraction(1, a_next)).denominator
                qg = compare_power(q_next, q_n, k * (alpha + 1), budget) is Ordering.LESS
                row["sandwich_lower"] = _passfail(lower)
                row["sandwich_upper"] = _passfail(upper)
                row["q_growth"] = _passfail(qg)
                flags += [lower, upper, qg]
            rows.append(row)
            all_pass = all_pass and all(flags)
        a_n = a_next

    if config.fmt == "json":
        _emit(canonical_dumps(rows), config.out)
    else:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=ANALYZE_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
        _emit(buffer.getvalue(), config.out)
    return 0 if all_pass else 1


def _run_certify(config: RunConfig) -> int:
    if config.revalidate:
        return _run_revalidate(config)
    spec = _load_spec(config.spec_path)
    if config.alpha is None:
        raise SeriesCertError("--alpha is required for certify")
    if config.last is None:
        raise SeriesCertError("--to is required for certify")
    alpha = parse_rational(config.alpha, "alpha")
    cert = certify(spec, alpha, config.first, config.last, config.digit_budget)
    _emit(canonical_dumps(certificate_obj(cert)), config.out)
    return 0


def _run_revalidate(config: RunConfig) -> int:
    with open(config.revalidate) as handle:
        original = handle.read()
    obj = json.loads(original)
    spec = spec_from_obj(obj["spec"])
    alpha = rational_from_obj(obj["alpha"], "alpha")
    indices = [w["m"] for w in obj["witnesses"]]
    if not indices:
        raise SeriesCertError("certificate has no witnesses to revalidate")
    cert = certify(spec, alpha, min(indices), max(indices), config.digit_budget)
    regenerated = canonical_dumps(certificate_obj(cert))
    if regenerated != original:
        payload = {"error": "revalidation-mismatch", "path": config.revalidate}
        sys.stderr.write(canonical_dumps(payload))
        return 1
    _emit(canonical_dumps({"revalidated": True, "witnesses": len(indices)}), config.out)
    return 0


def _run_measure(config: RunConfig) -> int:
    spec = _load_spec(config.spec_path)
    for flag, name in ((config.alpha, "--alpha"), (config.k, "--k"), (config.coeffs, "--coeffs")):
        if flag is None:
            raise SeriesCertError(f"{name} is required for measure")
    alpha = parse_rational(config.alpha, "alpha")
    k = parse_rational(config.k, "k")
    poly = PolynomialInt(tuple(int(c) for c in config.coeffs.split(",")))
    evidence = verify_measure(
        spec,
        alpha,
        k,
        poly,
        max_refinements=config.max_refine,
        digit_budget=config.digit_budget,
        degree=config.degree,
        height=config.height,
    )
    _emit(canonical_dumps(evidence_obj(evidence)), config.out)
    return 0


def _run_search(config: RunConfig) -> int:
    spec = _load_spec(config.spec_path)
    if config.degree is None or config.height is None:
        raise SeriesCertError("--degree and --height are required for search")
    enc = enclose(spec, config.terms, config.digit_budget)
    if config.csv_path:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        header = [f"e{i}" for i in range(config.degree + 1)]
        writer.writerow(header + ["abs_lower", "abs_upper"])
        for vec, low, high in enumerate_brackets(
            spec, config.degree, config.height, enc, config.enum_cap
        ):
            writer.writerow(list(vec) + [str(low), str(high)])
        with open(config.csv_path, "w") as handle:
            handle.write(buffer.getvalue())
    result = brute_force_min(spec, config.degree, config.height, enc, config.enum_cap)
    _emit(canonical_dumps(brute_force_obj(result)), config.out)
    return 0


def _decimal_expansion(value: Fraction, places: int) -> str:
    whole, rem = divmod(value.numerator, value.denominator)
    if places <= 0 or rem == 0:
        head = int_to_str(whole)
        return head if places <= 0 else head + "." + "0" * places
    scaled = rem * 10**places // value.denominator
    return int_to_str(whole) + "." + int_to_str(scaled).rjust(places, "0")


def _run_term(config: RunConfig) -> int:
    spec = _load_spec(config.spec_path)
    if (config.n is None) == (config.m is None):
        raise SeriesCertError("term needs exactly one of --n or --m")
    if config.n is not None:
        _emit(int_to_str(term(spec, config.n, config.digit_budget)) + "\n", config.out)
        return 0
    value = partial_sum(spec, config.m, config.digit_budget).value
    _emit(_decimal_expansion(value, config.digits) + "\n", config.out)
    return 0


_HANDLERS = {
    "analyze": _run_analyze,
    "certify": _run_certify,
    "measure": _run_measure,
    "search": _run_search,
    "term": _run_term,
}


def run(config: RunConfig) -> int:
    """Execute one command, mapping every failure to the exit contract."""
    try:
        return _HANDLERS[config.command](config)
    except SeriesCertError as exc:
        return _error(exc)
    except (OSError, ValueError) as exc:
        payload = {"error": "invalid-input", "message": str(exc)}
        sys.stderr.write(canonical_dumps(payload))
        return 2


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--spec", dest="spec_path", help="path to a sequence spec JSON file")
    sub.add_argument("--digit-budget", dest="digit_budget", type=int,
                     default=DEFAULT_DIGIT_BUDGET,
                     help="max decimal digits any exact integer may reach")
    sub.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seriescert",
        description="exact checks for unit-fraction series with fast-growing terms",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", help="per-index CSV of growth, sandwich, and denominator checks"
    )
    _add_common(analyze)
    analyze.add_argument("--alpha", help="exponent as p/q")
    analyze.add_argument("--k", help="sandwich upper ratio as p/q")
    analyze.add_argument("--from", dest="first", type=int, default=1)
    analyze.add_argument("--to", dest="last", type=int)
    analyze.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")

    cert = commands.add_parser("certify", help="emit a witness certificate")
    _add_common(cert)
    cert.add_argument("--alpha", help="exponent as p/q")
    cert.add_argument("--from", dest="first", type=int, default=1)
    cert.add_argument("--to", dest="last", type=int)
    cert.add_argument("--revalidate", help="recompute a stored certificate and compare bytes")

    measure = commands.add_parser("measure", help="verify the polynomial bound")
    _add_common(measure)
    measure.add_argument("--alpha", help="exponent as p/q")
    measure.add_argument("--k", help="sandwich upper ratio as p/q")
    measure.add_argument("--coeffs", help="comma-separated integer coefficients, constant first")
    measure.add_argument("--degree", type=int, help="declared degree of the polynomial class")
    measure.add_argument("--height", type=int, help="declared height of the polynomial class")
    measure.add_argument("--max-refine", dest="max_refine", type=int, default=8)

    search = commands.add_parser("search", help="exhaustive minimum over small polynomials")
    _add_common(search)
    search.add_argument("--degree", type=int)
    search.add_argument("--height", type=int)
    search.add_argument("--terms", type=int, default=4, help="enclosure depth in series terms")
    search.add_argument("--enum-cap", dest="enum_cap", type=int, default=10**6)
    search.add_argument("--csv", dest="csv_path", help="also write per-polynomial rows here")

    term_cmd = commands.add_parser("term", help="print a term or a partial sum in decimal")
    _add_common(term_cmd)
    term_cmd.add_argument("--n", type=int, help="term index to print")
    term_cmd.add_argument("--m", type=int, help="partial-sum index to print")
    term_cmd.add_argument("--digits", type=int, default=50,
                          help="fractional digits for partial sums (truncated)")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {f: getattr(args, f) for f in RunConfig.__dataclass_fields__ if hasattr(args, f)}
    return RunConfig(**fields)


def _normalize(argv: list[str]) -> list[str]:
    """Glue values onto --coeffs so a leading minus sign is not mistaken
    for an option (argparse only special-cases bare negative numbers)."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--coeffs" and i + 1 < len(argv):
            out.append(f"--coeffs={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_normalize(argv))
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
