"""
Command line for the partition counts, closed forms, cohomology tables and
the identity verifier. Installed as the `partcount` console script.

Exit codes: 0 ok, 2 bad input, 3 two methods disagree, 4 novel discrepancy
of an as-printed formula, 5 count-certified failure.
"""
import argparse
import json
import os
import sys
from dataclasses import replace

import pandas as pd

import congruent_partitions.closed_forms as cf
import congruent_partitions.flag_cohomology as fc
import congruent_partitions.oracle as orc
import congruent_partitions.verifier as vf
from congruent_partitions.helper_functions import (
    CONGRUENT_COUNTED_NOTE,
    COUNT_CERTIFIED,
    EXIT_CODES,
    IDENTITY_ALIASES,
    IDENTITY_DICT,
    OUTPUT_FORMATS,
    FormulaConsistencyError,
    check_increasing,
    check_length,
    check_nonnegative,
    check_parts,
    format_exact,
    resolve_identity,
)

FORMAT_ENV = "PARTCOUNT_FORMAT"

COUNT_METHODS = ("oracle", "closed", "decomposition", "all")
COHOMOLOGY_MODES = ("profile", "total", "poincare")
COHOMOLOGY_METHODS = ("enumeration", "closed-form", "both")
WEIGHTED_METHODS = ("oracle", "closed", "both")

# sweep flags are named after the SweepConfig fields they set
SWEEP_FLAGS = {
    "r_min": "smallest number of parts",
    "r_max": "largest number of parts",
    "max_part": "largest part size",
    "strict": "strictly increasing part sequences only (true/false)",
    "d_values": "moduli, e.g. 2,3,4 or 2..5",
    "n_min": "smallest n for the count identities",
    "n_max": "largest n for the count identities",
    "faithful_d_values": "moduli for the weighted identities",
    "faithful_n_max": "largest n for the weighted identities",
    "j_max": "largest weight j checked (default n)",
    "dary_d_values": "moduli of the d-ary identities",
    "k_values": "exponents k of the d-ary identities",
    "dary_n_max": "largest n for the d-ary identities",
    "primes": "characteristics for the cohomology identities",
    "cohomology_n_max": "largest n for the cohomology identities",
    "identities": "comma separated identity ids",
    "workers": "worker processes",
    "seed": "seed for the random sample",
    "samples": "cases sampled per identity, 0 checks the whole grid",
}


class CommandError(Exception):
    """a command finished but its result maps to a nonzero exit status"""

    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def parse_parts(text):
    """
    '1,3,9' -> (1, 3, 9)
    """
    try:
        parts = tuple(int(item) for item in text.split(",") if item.strip())
        return check_parts(parts)
    except ValueError as ex:
        raise argparse.ArgumentTypeError(f"bad part sequence {text!r}: {ex}") from None


def default_format():
    fmt = os.environ.get(FORMAT_ENV, "table")
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(
            f"Error: {FORMAT_ENV}={fmt!r} is not one of {', '.join(OUTPUT_FORMATS)}."
        )
    return fmt


def _record(payload):
    return json.dumps(payload, indent=2)


def _render(fmt, text, payload, frame):
    if fmt == "record":
        return _record(payload)
    if fmt == "csv":
        return frame.to_csv(index=False)
    return text


def _format_profile(h):
    return "{" + ", ".join(f"{j}:{count}" for j, count in h.items()) + "}"


def cmd_count(args):
    """
    p_{a,d}(n) by the oracle, the closed form, the subset decomposition or all
    three with an agreement verdict
    """
    check_nonnegative(args.n, "n")
    methods = ("oracle", "closed", "decomposition") if args.method == "all" else (args.method,)
    values = {}
    for method in methods:
        if method == "oracle":
            values[method] = orc.congruent_count(args.parts, args.d, args.n)
        elif method == "closed":
            values[method] = cf.congruent_closed(args.parts, args.d, args.n)
        else:
            values[method] = cf.congruent_by_decomposition(args.parts, args.d, args.n)
    agree = len(set(values.values())) == 1

    lines = [f"{method}: {value}" for method, value in values.items()]
    if args.method == "all":
        lines.append("agree" if agree else "disagree")
    payload = {
        "parts": list(args.parts),
        "d": args.d,
        "n": args.n,
        "values": {method: format_exact(value) for method, value in values.items()},
        "agree": agree,
    }
    frame = pd.DataFrame(
        [(method, value) for method, value in values.items()], columns=["method", "value"]
    )
    text = "\n".join(lines) if len(values) > 1 else str(values[methods[0]])
    output = _render(args.format, text, payload, frame)
    if not agree:
        raise CommandError(output, EXIT_CODES["disagree"])
    return output


def cmd_polypart(args):
    """
    polynomial part P_{a,d}(n) reduced, or P_a(n) with --plain
    """
    if args.plain:
        value = cf.polynomial_part(args.parts, args.n)
        unreduced = None
    else:
        value = cf.congruent_poly_part(args.parts, args.d, args.n)
        unreduced = cf.congruent_poly_part_unreduced(args.parts, args.d, args.n)

    text = format_exact(value)
    payload = {
        "parts": list(args.parts),
        "d": None if args.plain else args.d,
        "n": args.n,
        "poly_part": format_exact(value),
    }
    row = {"poly_part": format_exact(value)}
    if args.unreduced and unreduced is not None:
        numerator, denominator = unreduced
        text += f" (unreduced {numerator}/{denominator})"
        payload["unreduced"] = f"{numerator}/{denominator}"
        row["unreduced"] = payload["unreduced"]
    return _render(args.format, text, payload, pd.DataFrame([row]))


def cmd_weighted(args):
    """
    weighted profile p_{a,d}(n;j) by the oracle and by the weighted closed
    form, for 0 <= j <= n + r
    """
    check_increasing(check_length(args.parts))
    check_nonnegative(args.n, "n")
    profile = orc.weighted_profile(args.parts, args.d, args.n)
    rows = []
    for j in range(0, args.n + len(args.parts) + 1):
        oracle = profile.get(j, 0)
        closed = None
        if args.method != "oracle":
            closed = int(cf.counted_congruent_closed(args.parts, args.d, args.n, j).value)
        if not oracle and not closed:
            continue
        rows.append((j, oracle, closed))
    frame = pd.DataFrame(rows, columns=["j", "oracle", "closed"])
    if args.method == "oracle":
        frame = frame.drop(columns="closed")
    elif args.method == "closed":
        frame = frame.drop(columns="oracle")
    else:
        frame["gap"] = frame["closed"] - frame["oracle"]

    payload = {
        "parts": list(args.parts),
        "d": args.d,
        "n": args.n,
        "rows": [
            {key: (int(value) if key == "j" else str(value)) for key, value in row.items()}
            for row in frame.to_dict("records")
        ],
    }
    text = frame.to_string(index=False) if len(frame) else "(empty profile)"
    if args.method != "oracle":
        text += f"\nnote: closed column is as-printed; it {CONGRUENT_COUNTED_NOTE}"
        payload["note"] = CONGRUENT_COUNTED_NOTE
    return _render(args.format, text, payload, frame)


def cmd_cohomology(args):
    """
    profile, total or Poincare polynomial of h^j_st(-n,n)
    """
    methods = ("enumeration", "closed-form") if args.method == "both" else (args.method,)
    payload = {"p": args.p, "n": args.n, "mode": args.mode}
    lines = []

    if args.mode == "total":
        totals = {method: fc.h_total(args.p, args.n, method) for method in methods}
        payload["total"] = {method: str(value) for method, value in totals.items()}
        frame = pd.DataFrame(list(totals.items()), columns=["method", "total"])
        if len(totals) == 1:
            lines.append(str(totals[methods[0]]))
        else:
            lines.extend(f"{method}: {value}" for method, value in totals.items())
        output = _render(args.format, "\n".join(lines), payload, frame)
        if len(set(totals.values())) > 1:
            raise CommandError(output, EXIT_CODES["disagree"])
        return output

    profiles = {method: fc.stable_profile(args.p, args.n, method) for method in methods}
    rows = []
    for method, profile in profiles.items():
        if args.mode == "poincare":
            rendered = fc.format_poincare(fc.profile_coefficients(profile))
        else:
            rendered = _format_profile(profile.h)
        lines.append(rendered if len(profiles) == 1 else f"{method}: {rendered}")
        for note in profile.notes:
            lines.append(f"  note ({method}): {note}")
        payload[method] = {
            "profile": {str(j): str(count) for j, count in profile.h.items()},
            "as_printed": profile.as_printed,
            "notes": list(profile.notes),
        }
        if args.mode == "poincare":
            payload[method]["poincare"] = rendered
        rows.extend((method, j, count) for j, count in profile.h.items())
    frame = pd.DataFrame(rows, columns=["method", "j", "h"])
    return _render(args.format, "\n".join(lines), payload, frame)


def cmd_series(args):
    """
    coefficients of prod(1 + z^a_i) / prod(1 - z^(d a_i)) up to z^N
    """
    coeffs = orc.series_coeffs(args.parts, args.d, args.N)
    payload = {
        "parts": list(args.parts),
        "d": args.d,
        "N": args.N,
        "coefficients": [str(value) for value in coeffs],
    }
    frame = pd.DataFrame({"m": range(len(coeffs)), "coefficient": coeffs})
    text = "\n".join(str(value) for value in coeffs)
    return _render(args.format, text, payload, frame)


def _verify_single(args):
    params = {}
    name = resolve_identity(args.identity)
    for key in IDENTITY_DICT[name]["params"]:
        value = getattr(args, key, None)
        if value is None:
            raise ValueError(f"Error: identity {name} needs --{key}.")
        params[key] = value
    params, formula, oracle, record = vf.compare_identity(name, params)

    verdict = "match" if record is None else record.classification
    text = (
        f"{name} {vf.format_params(params)}: formula {format_exact(formula)}, "
        f"oracle {format_exact(oracle)}, {verdict}"
    )
    if record is not None and record.note:
        text += f"\n  {record.note}"
    payload = {
        "identity": name,
        "params": {
            key: list(value) if isinstance(value, tuple) else value for key, value in params
        },
        "formula": format_exact(formula),
        "oracle": format_exact(oracle),
        "classification": verdict,
        "note": "" if record is None else record.note,
    }
    frame = pd.DataFrame(
        [(name, vf.format_params(params), payload["formula"], payload["oracle"], verdict)],
        columns=["identity", "params", "formula", "oracle", "classification"],
    )
    output = _render(args.format, text, payload, frame)
    if record is None or record.classification == vf.KNOWN:
        return output
    if IDENTITY_DICT[name]["family"] == COUNT_CERTIFIED:
        raise CommandError(output, EXIT_CODES["failed"])
    raise CommandError(output, EXIT_CODES["novel"])


def sweep_config(args):
    """
    SweepConfig from --config (if given) with the grid flags layered on top
    """
    config = vf.read_config(args.config) if args.config else vf.SweepConfig()
    overrides = {}
    for name in SWEEP_FLAGS:
        text = getattr(args, f"sweep_{name}", None)
        if text is not None:
            overrides[name] = vf.parse_setting(name, text)
    return replace(config, **overrides)


def cmd_verify(args):
    """
    one identity at one parameter tuple with --identity, otherwise a sweep
    """
    if args.identity:
        return _verify_single(args)
    config = sweep_config(args)
    report = vf.sweep(config, progress=args.progress)
    output = vf.render_report(report, args.format)
    if config.output and not args.output:
        _write(config.output, output)
    if report.status == "failed":
        raise CommandError(output, EXIT_CODES["failed"])
    if report.status == "novel":
        raise CommandError(output, EXIT_CODES["novel"])
    return output


def _add_common(parser, parts=True, d=True):
    if parts:
        parser.add_argument(
            "--parts", type=parse_parts, required=True, help="part sequence, e.g. 1,3,9"
        )
    if d:
        parser.add_argument("--d", type=int, default=2, help="congruence modulus (default 2)")
    parser.add_argument(
        "--format",
        choices=list(OUTPUT_FORMATS),
        default=None,
        help=f"output format (default ${FORMAT_ENV} or table)",
    )
    parser.add_argument("--output", default=None, help="write the result to this file")


def build_parser():
    """
    argparse parser with one subparser per command
    """
    parser = argparse.ArgumentParser(
        prog="partcount",
        description="Exact counts and closed forms for congruence-restricted partitions",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    count = subparsers.add_parser(
        "count",
        help="number of solutions of sum a_i x_i = n with x_i = 0,1 (mod d)",
        description=(
            "oracle: coefficient of the rational generating function by dynamic "
            "programming (ground truth, identity prop2.1); closed: eps/box closed form "
            "(identity thm2.3, count-certified); decomposition: subset sum of scaled "
            "denumerants (identity prop2.2, count-certified); all: every method plus "
            "a verdict"
        ),
    )
    _add_common(count)
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--method", choices=COUNT_METHODS, default="oracle")
    count.set_defaults(handler=cmd_count)

    polypart = subparsers.add_parser(
        "polypart",
        help="polynomial part of the congruent count",
        description=(
            "Full eps/box sum divided by D(d) (r-1)!, reduced; the polynomial part "
            "companion of identity thm2.3. --unreduced also prints the fraction before "
            "reduction, --plain gives the polynomial part of the unrestricted "
            "denumerant instead (the box of identity thm1.1 without its congruence)"
        ),
    )
    _add_common(polypart)
    polypart.add_argument("--n", type=int, required=True)
    polypart.add_argument("--unreduced", action="store_true")
    polypart.add_argument("--plain", action="store_true")
    polypart.set_defaults(handler=cmd_polypart)

    weighted = subparsers.add_parser(
        "weighted",
        help="weighted profile j -> p_{a,d}(n;j)",
        description=(
            "oracle: bivariate generating function DP (ground truth); closed: the "
            "weighted eps reduction (identity thm2.7, as-printed, may overcount). "
            "Parts must be strictly increasing"
        ),
    )
    _add_common(weighted)
    weighted.add_argument("--n", type=int, required=True)
    weighted.add_argument("--method", choices=WEIGHTED_METHODS, default="both")
    weighted.set_defaults(handler=cmd_weighted)

    cohomology = subparsers.add_parser(
        "cohomology",
        help="stable cohomology of O(-n,n) on the flag variety",
        description=(
            "enumeration: Phi summed over the listing of A_{p,n} (ground truth); "
            "closed-form: d-ary closed forms, the total by identity cor2.4 "
            "(count-certified, checked as thm3.1) and the profile by identities "
            "cor2.8 and thm3.3 (as-printed); both: each method side by side"
        ),
    )
    _add_common(cohomology, parts=False, d=False)
    cohomology.add_argument("--p", type=int, required=True, help="prime characteristic")
    cohomology.add_argument("--n", type=int, required=True)
    cohomology.add_argument("--mode", choices=COHOMOLOGY_MODES, default="profile")
    cohomology.add_argument("--method", choices=COHOMOLOGY_METHODS, default="enumeration")
    cohomology.set_defaults(handler=cmd_cohomology)

    series = subparsers.add_parser(
        "series",
        help="generating function coefficients up to z^N",
        description=(
            "prod(1 + z^a_i) / prod(1 - z^(d a_i)) expanded by power series DP; the "
            "generating function of identity prop2.1"
        ),
    )
    _add_common(series)
    series.add_argument("--N", type=int, required=True)
    series.set_defaults(handler=cmd_series)

    verify = subparsers.add_parser(
        "verify",
        help="check closed forms against the oracle",
        description=(
            "With --identity, one case; otherwise a sweep over the grid given by "
            "--config and the grid flags. Registered identities: "
            + ", ".join(f"{name} ({info['family']})" for name, info in IDENTITY_DICT.items())
            + ". Aliases: "
            + ", ".join(f"{alias} = {name}" for alias, name in IDENTITY_ALIASES.items())
        ),
    )
    verify.add_argument(
        "--identity", "--case", choices=list(IDENTITY_DICT) + list(IDENTITY_ALIASES), default=None
    )
    verify.add_argument("--parts", type=parse_parts, default=None)
    for key in ("d", "d2", "k", "p", "n", "j"):
        verify.add_argument(f"--{key}", type=int, default=None)
    verify.add_argument("--config", default=None, help="key = value sweep file")
    verify.add_argument("--progress", action="store_true", help="progress bar on stderr")
    for name, help_text in SWEEP_FLAGS.items():
        verify.add_argument(
            "--" + name.replace("_", "-"), dest=f"sweep_{name}", default=None, help=help_text
        )
    verify.add_argument(
        "--format", choices=list(OUTPUT_FORMATS), default=None,
        help=f"output format (default ${FORMAT_ENV} or table)",
    )
    verify.add_argument("--output", default=None, help="write the report to this file")
    verify.set_defaults(handler=cmd_verify)
    return parser


def _write(path, text):
    with open(path, "w") as output_file:
        output_file.write(text if text.endswith("\n") else text + "\n")


def _emit(args, text):
    if args.output:
        _write(args.output, text)
    else:
        print(text)


def main(argv=None):
    """
    Entry point of the partcount script

    Inputs:
    argv    - argument list, defaults to sys.argv[1:]

    Outputs:
    status  - exit code, see EXIT_CODES
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_CODES["usage"]

    try:
        if args.format is None:
            args.format = default_format()
        text, status = args.handler(args), EXIT_CODES["ok"]
    except CommandError as ex:
        text, status = str(ex), ex.status
    except FormulaConsistencyError as ex:
        print(f"Error: {ex}", file=sys.stderr)
        return EXIT_CODES["failed"]
    except (ValueError, KeyError) as ex:
        message = ex.args[0] if ex.args else str(ex)
        print(message, file=sys.stderr)
        return EXIT_CODES["usage"]
    except OSError as ex:
        print(f"Error: {ex}", file=sys.stderr)
        return EXIT_CODES["usage"]

    try:
        _emit(args, text)
    except OSError as ex:
        print(f"Error: {ex}", file=sys.stderr)
        return EXIT_CODES["usage"]
    return status


if __name__ == "__main__":
    sys.exit(main())
