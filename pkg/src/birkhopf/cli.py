"""Command line front end.

Four subcommands:

* ``decompose``: Birkhoff decomposition of a character given by generator
  values, closed-form engine, optionally cross-checked against the
  Bogoliubov recursion.
* ``inverse``: convolution inverse of a character, closed-form engine,
  optionally cross-checked against both recursive engines.
* ``diffeo``: Birkhoff factorization of a formal diffeomorphism from a
  TOML coefficient list, with the composition identity verified.
* ``verify``: run named self-check suites.

Primary output goes to stdout as JSON (default) or text; diagnostics go
to stderr.  Exit codes: 0 success, 1 verification failure, 2 bad input.
Identical inputs and seed produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .closedform import closed_brb, closed_inverse
from .convolution import (
    Character,
    brb_recursive,
    convolve,
    inverse_recursive,
    inverse_series,
)
from .diffeo import FormalDiffeo, birkhoff_factorize, compose, diffeo_to_character
from .hopf import (
    HOPF_FACTORIES,
    hopf_by_name,
    monomials_up_to,
    render_hopf_monomial,
)
from .scalars import LAURENT, ParseError, parse_element, split_by_name, SPLITS
from .verify import SUITES, run_suites


class ConfigError(Exception):
    pass


def _load_toml(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as e:
        raise ConfigError("cannot read %s: %s" % (path, e)) from None
    except tomllib.TOMLDecodeError as e:
        raise ConfigError("invalid TOML in %s: %s" % (path, e)) from None


def _parse_value(text: str, where: str):
    try:
        return parse_element(text, LAURENT)
    except ParseError as e:
        raise ConfigError("bad element %r (%s): %s" % (text, where, e)) from None


def _load_character(path: str, spec) -> Character:
    data = _load_toml(path)
    section = data.get("character")
    if not isinstance(section, dict) or not section:
        raise ConfigError("%s must contain a [character] table" % path)
    values = {}
    for name, text in section.items():
        if not isinstance(text, str):
            raise ConfigError("character value for %r must be a string" % name)
        values[name] = _parse_value(text, "character.%s" % name)
    try:
        return Character(spec, LAURENT, values)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def _load_diffeo(path: str, order_flag) -> FormalDiffeo:
    data = _load_toml(path)
    section = data.get("diffeo")
    if not isinstance(section, dict):
        raise ConfigError("%s must contain a [diffeo] table" % path)
    order = section.get("order", order_flag)
    if order is None:
        raise ConfigError("diffeo order missing (set diffeo.order or --order)")
    if order_flag is not None and order != order_flag:
        raise ConfigError(
            "--order %s contradicts diffeo.order %s" % (order_flag, order)
        )
    if not isinstance(order, int):
        raise ConfigError("diffeo.order must be an integer")
    entries = section.get("coefficients", [])
    if not isinstance(entries, list):
        raise ConfigError("diffeo.coefficients must be a list of {n, value}")
    coeffs = {}
    for entry in entries:
        if not isinstance(entry, dict) or "n" not in entry or "value" not in entry:
            raise ConfigError("each coefficient needs fields n and value")
        n = entry["n"]
        if not isinstance(n, int):
            raise ConfigError("coefficient index n must be an integer")
        if n in coeffs:
            raise ConfigError("duplicate coefficient at n = %d" % n)
        coeffs[n] = _parse_value(entry["value"], "coefficient n=%d" % n)
    try:
        return FormalDiffeo(order, coeffs, LAURENT)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for line in text_lines(payload):
            sys.stdout.write(line + "\n")


def _hopf_block(spec) -> dict:
    block = {"instance": spec.name, "truncation": spec.truncation}
    if spec.name.startswith("faadibruno"):
        block["orientation"] = "left-convolution-factor-is-outer-series"
    return block


def _first_difference(spec, a, b) -> dict | None:
    for m in monomials_up_to(spec):
        if a(m) != b(m):
            return {
                "monomial": render_hopf_monomial(m),
                "primary": a(m).render(),
                "oracle": b(m).render(),
            }
    return None


def cmd_decompose(args) -> int:
    spec = hopf_by_name(args.hopf, args.degree)
    split = split_by_name(args.split)
    phi = _load_character(args.config, spec)
    plus, minus = closed_brb(phi, split)
    table = {}
    for m in monomials_up_to(spec):
        table[render_hopf_monomial(m)] = {
            "input": phi(m).render(),
            "plus": plus(m).render(),
            "minus": minus(m).render(),
        }
    payload = {
        "command": "decompose",
        "hopf": _hopf_block(spec),
        "split": split.name,
        "engine": "closed-form",
        "character": {n: v.render() for n, v in sorted(phi.generator_values.items())},
        "identity": "minus * phi = plus",
        "decomposition": table,
    }
    code = 0
    if args.check_oracle:
        plus_r, minus_r = brb_recursive(phi, split)
        contract = convolve(minus, phi) == plus
        diff = _first_difference(spec, plus, plus_r) or _first_difference(spec, minus, minus_r)
        payload["oracle"] = {
            "engine": "bogoliubov-recursion",
            "matches": diff is None,
            "convolution_contract": contract,
        }
        if diff is not None:
            payload["oracle"]["first_difference"] = diff
        if diff is not None or not contract:
            code = 1

    def text_lines(p):
        yield "decompose %s, truncation %d, split %s" % (
            p["hopf"]["instance"], p["hopf"]["truncation"], p["split"])
        for mono, row in p["decomposition"].items():
            yield "%s:" % mono
            yield "  input %s" % row["input"]
            yield "  plus  %s" % row["plus"]
            yield "  minus %s" % row["minus"]
        if "oracle" in p:
            yield "oracle match: %s" % p["oracle"]["matches"]

    _emit(payload, args.format, text_lines)
    return code


def cmd_inverse(args) -> int:
    spec = hopf_by_name(args.hopf, args.degree)
    phi = _load_character(args.config, spec)
    inv = closed_inverse(phi)
    table = {}
    for m in monomials_up_to(spec):
        table[render_hopf_monomial(m)] = {
            "input": phi(m).render(),
            "inverse": inv(m).render(),
        }
    payload = {
        "command": "inverse",
        "hopf": _hopf_block(spec),
        "engine": "closed-form",
        "character": {n: v.render() for n, v in sorted(phi.generator_values.items())},
        "inverse": table,
    }
    code = 0
    if args.check_oracle:
        rec = inverse_recursive(phi)
        ser = inverse_series(phi)
        diff = _first_difference(spec, inv, rec) or _first_difference(spec, inv, ser)
        payload["oracle"] = {
            "engines": ["degree-recursion", "alternating-series"],
            "matches": diff is None,
        }
        if diff is not None:
            payload["oracle"]["first_difference"] = diff
            code = 1

    def text_lines(p):
        yield "inverse on %s, truncation %d" % (
            p["hopf"]["instance"], p["hopf"]["truncation"])
        for mono, row in p["inverse"].items():
            yield "%s: %s  ->  %s" % (mono, row["input"], row["inverse"])
        if "oracle" in p:
            yield "oracle match: %s" % p["oracle"]["matches"]

    _emit(payload, args.format, text_lines)
    return code


def cmd_diffeo(args) -> int:
    split = split_by_name(args.split)
    f = _load_diffeo(args.config, args.order)
    plus, minus = birkhoff_factorize(f, split)
    composed = compose(minus, f)
    minus_ok = all(
        split.plus(c).is_zero() for c in minus.coefficients.values()
    )
    plus_ok = all(
        split.minus(c).is_zero() for c in plus.coefficients.values()
    )
    verification = {
        "composed_equals_plus": composed == plus,
        "minus_in_pole_sector": minus_ok,
        "plus_pole_free": plus_ok,
    }
    payload = {
        "command": "diffeo",
        "order": f.order,
        "split": split.name,
        "engine": "closed-form",
        "convention": {
            "identity": "minus o f = plus",
            "orientation": "left-convolution-factor-is-outer-series",
        },
        "input": {str(n): c.render() for n, c in sorted(f.coefficients.items())},
        "plus": {str(n): plus.coefficient(n).render() for n in range(2, f.order + 1)},
        "minus": {str(n): minus.coefficient(n).render() for n in range(2, f.order + 1)},
        "verification": verification,
    }
    code = 0 if all(verification.values()) else 1
    if args.check_oracle:
        plus_r, minus_r = birkhoff_factorize(f, split, engine="recursive")
        matches = plus == plus_r and minus == minus_r
        payload["oracle"] = {"engine": "bogoliubov-recursion", "matches": matches}
        if not matches:
            code = 1

    def text_lines(p):
        yield "diffeo factorization at order %d, split %s" % (p["order"], p["split"])

        def series_line(label, table):
            tail = "".join(
                " + (%s)*x^%s" % (v, n) for n, v in table.items() if v != "0"
            )
            return "%s: x%s" % (label, tail)

        yield series_line("f      ", p["input"])
        yield series_line("f_plus ", p["plus"])
        yield series_line("f_minus", p["minus"])
        for k, v in p["verification"].items():
            yield "%s: %s" % (k, v)
        if "oracle" in p:
            yield "oracle match: %s" % p["oracle"]["matches"]

    _emit(payload, args.format, text_lines)
    return code


def cmd_verify(args) -> int:
    try:
        results = run_suites(args.suite, seed=args.seed)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    suites: dict[str, dict] = {}
    for r in results:
        block = suites.setdefault(r.suite, {"checks": [], "passed": 0, "failed": 0})
        block["checks"].append(
            {"name": r.name, "passed": r.passed, "detail": r.detail}
        )
        block["passed" if r.passed else "failed"] += 1
    ok = all(r.passed for r in results)
    payload = {
        "command": "verify",
        "seed": args.seed,
        "ok": ok,
        "suites": suites,
    }

    def text_lines(p):
        for suite_name in p["suites"]:
            for check in p["suites"][suite_name]["checks"]:
                status = "PASS" if check["passed"] else "FAIL"
                line = "%s %s :: %s" % (status, suite_name, check["name"])
                if check["detail"]:
                    line += "  (%s)" % check["detail"]
                yield line
        yield "result: %s" % ("ok" if p["ok"] else "FAILED")

    _emit(payload, args.format, text_lines)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="birkhopf",
        description="Exact Birkhoff decomposition of Hopf-algebra characters "
        "by universal closed-form word formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, oracle: bool = True):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0, help="seed for any randomized checks")
        if oracle:
            p.add_argument(
                "--check-oracle",
                action="store_true",
                help="also run the recursive engines and report agreement",
            )

    hopf_names = sorted(HOPF_FACTORIES)
    split_names = sorted(SPLITS)

    p = sub.add_parser("decompose", help="Birkhoff-decompose a character")
    p.add_argument("--hopf", choices=hopf_names, required=True)
    p.add_argument("--degree", type=int, required=True, help="truncation degree")
    p.add_argument("--split", choices=split_names, default="polepart")
    p.add_argument("--config", required=True, help="TOML file with a [character] table")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("inverse", help="convolution-invert a character")
    p.add_argument("--hopf", choices=hopf_names, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--config", required=True, help="TOML file with a [character] table")
    common(p)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("diffeo", help="Birkhoff-factorize a formal diffeomorphism")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--split", choices=split_names, default="polepart")
    p.add_argument("--config", required=True, help="TOML file with a [diffeo] table")
    common(p)
    p.set_defaults(func=cmd_diffeo)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument(
        "--suite",
        action="append",
        required=True,
        choices=sorted(SUITES) + ["all"],
        help="suite name, repeatable; 'all' runs everything",
    )
    common(p, oracle=False)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
