"""
Cross-checks every closed formula against the oracle over parameter grids.

A case is one identity evaluated at one parameter tuple. The formula side
only calls closed_forms (and the closed-form paths of flag_cohomology), the
oracle side only calls oracle and the enumeration paths, so a match is two
independent computations agreeing.

Count-certified identities must never disagree; a disagreement fails the run.
As-printed identities are printed reductions that drop a constraint; they
are expected to overcount, and a discrepancy is classified known when the
overcount is exactly the relaxed solution set the dropped constraint lets in.
"""
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import numpy as np
import pandas as pd
from tqdm import tqdm

import congruent_partitions.closed_forms as cf
import congruent_partitions.flag_cohomology as fc
import congruent_partitions.oracle as orc
from congruent_partitions.helper_functions import (
    COUNT_CERTIFIED,
    DEFAULT_SWEEP,
    IDENTITY_DICT,
    KNOWN_DISCREPANCIES,
    OUTPUT_FORMATS,
    check_increasing,
    check_prime,
    check_parts,
    dary_parts,
    format_exact,
    log_floor,
    resolve_identity,
)

KNOWN = "known"
NOVEL = "novel"


@dataclass(frozen=True)
class SweepConfig:
    r_min: int = DEFAULT_SWEEP["r_min"]
    r_max: int = DEFAULT_SWEEP["r_max"]
    max_part: int = DEFAULT_SWEEP["max_part"]
    strict: bool = DEFAULT_SWEEP["strict"]
    d_values: tuple = DEFAULT_SWEEP["d_values"]
    n_min: int = DEFAULT_SWEEP["n_min"]
    n_max: int = DEFAULT_SWEEP["n_max"]
    faithful_d_values: tuple = DEFAULT_SWEEP["faithful_d_values"]
    faithful_n_max: int = DEFAULT_SWEEP["faithful_n_max"]
    j_max: int = DEFAULT_SWEEP["j_max"]
    dary_d_values: tuple = DEFAULT_SWEEP["dary_d_values"]
    k_values: tuple = DEFAULT_SWEEP["k_values"]
    dary_n_max: int = DEFAULT_SWEEP["dary_n_max"]
    primes: tuple = DEFAULT_SWEEP["primes"]
    cohomology_n_max: int = DEFAULT_SWEEP["cohomology_n_max"]
    identities: tuple = DEFAULT_SWEEP["identities"]
    workers: int = DEFAULT_SWEEP["workers"]
    seed: int = DEFAULT_SWEEP["seed"]
    samples: int = DEFAULT_SWEEP["samples"]
    output: str = DEFAULT_SWEEP["output"]


@dataclass(frozen=True)
class DiscrepancyRecord:
    identity: str
    params: tuple
    formula: Fraction
    oracle: Fraction
    classification: str
    note: str = ""

    @property
    def gap(self):
        return self.formula - self.oracle


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    cases: int
    matches: int
    discrepancies: dict
    records: tuple
    duration: float = field(default=0.0, compare=False)

    @property
    def certified_failures(self):
        return sum(
            1
            for record in self.records
            if IDENTITY_DICT[record.identity]["family"] == COUNT_CERTIFIED
        )

    @property
    def novel(self):
        return sum(1 for record in self.records if record.classification == NOVEL)

    @property
    def known(self):
        return sum(1 for record in self.records if record.classification == KNOWN)

    @property
    def status(self):
        if self.certified_failures:
            return "failed"
        if self.novel:
            return "novel"
        return "ok"


def check_config(config):
    """
    Check every range of a SweepConfig is nonempty and finite. Raises
    ValueError with the offending field otherwise.
    """
    if config.r_min < 1 or config.r_max < config.r_min:
        raise ValueError(f"Error: bad part-count range {config.r_min}..{config.r_max}.")
    if config.max_part < 1:
        raise ValueError(f"Error: max_part must be >= 1, got {config.max_part}.")
    if config.n_min < 0 or config.n_max < config.n_min:
        raise ValueError(f"Error: bad n range {config.n_min}..{config.n_max}.")
    for name in ("faithful_n_max", "dary_n_max", "cohomology_n_max"):
        if getattr(config, name) < 0:
            raise ValueError(f"Error: {name} must be nonnegative.")
    for name in ("d_values", "faithful_d_values", "dary_d_values"):
        values = getattr(config, name)
        if not values or any(d < 2 for d in values):
            raise ValueError(f"Error: {name} must be a nonempty list of integers >= 2.")
    if not config.k_values or any(k < 1 for k in config.k_values):
        raise ValueError("Error: k_values must be a nonempty list of integers >= 1.")
    for p in config.primes:
        check_prime(p)
    if not config.primes:
        raise ValueError("Error: primes must not be empty.")
    if config.j_max is not None and config.j_max < 0:
        raise ValueError(f"Error: j_max must be nonnegative, got {config.j_max}.")
    if not config.identities:
        raise ValueError("Error: no identities selected.")
    for name in config.identities:
        _identity_info(name)
    if config.workers < 1:
        raise ValueError(f"Error: workers must be >= 1, got {config.workers}.")
    if config.samples < 0:
        raise ValueError(f"Error: samples must be nonnegative, got {config.samples}.")
    return config


def _identity_info(name):
    return IDENTITY_DICT[resolve_identity(name)]


def normalize_params(name, params):
    """
    Turn a dict of parameters into the ordered ((name, value), ...) tuple an
    identity stores on its records

    Inputs:
    name    - identity id or alias
    params  - dict (or pairs) of parameter values; N is read as n

    Outputs:
    params  - tuple of (name, value) pairs in registry order
    """
    info = _identity_info(name)
    params = dict(params)
    if "N" in params and "n" not in params:
        params["n"] = params.pop("N")
    missing = [key for key in info["params"] if key not in params]
    if missing:
        raise ValueError(f"Error: identity {name} needs parameters {', '.join(missing)}.")
    ordered = []
    for key in info["params"]:
        value = params[key]
        if key == "parts":
            value = check_parts(value)
        ordered.append((key, value))
    return tuple(ordered)


# each check returns (formula side, oracle side, agrees)


def _check_denumerant_closed(parts, n):
    formula = cf.popoviciu_general(parts, n)
    oracle = orc.denumerant(parts, n)
    return formula, oracle, formula == oracle


def _check_congruent_closed(parts, d, n):
    formula = cf.congruent_closed(parts, d, n)
    oracle = orc.congruent_count(parts, d, n)
    return formula, oracle, formula == oracle


def _check_congruent_decomposition(parts, d, n):
    formula = cf.congruent_by_decomposition(parts, d, n)
    oracle = orc.congruent_count(parts, d, n)
    return formula, oracle, formula == oracle


def _check_dary_closed(d, k, n):
    formula = cf.dary_closed(d, k, n)
    oracle = orc.congruent_count(dary_parts(d, k), d, n)
    return formula, oracle, formula == oracle


def _check_series(parts, d, n):
    formula = orc.series_coeffs(parts, d, n)[n]
    oracle = orc.congruent_count(parts, d, n)
    return formula, oracle, formula == oracle


def _check_sum_over_j(parts, d, n):
    formula = sum(orc.weighted_profile(parts, d, n).values())
    oracle = orc.congruent_count(parts, d, n)
    return formula, oracle, formula == oracle


def _check_d2_reduction(parts, n):
    formula = orc.congruent_count(parts, 2, n)
    oracle = orc.denumerant(parts, n)
    return formula, oracle, formula == oracle


def _check_divisor_monotonicity(parts, d, d2, n):
    formula = orc.congruent_count(parts, d2, n)
    oracle = orc.congruent_count(parts, d, n)
    return formula, oracle, d2 % d != 0 or formula <= oracle


def _check_quasi_period(parts, d, n):
    period = cf.lcm_scaled(parts, d)
    values = np.array(
        [cf.congruent_closed(parts, d, n + m * period) for m in range(len(parts) + 1)],
        dtype=object,
    )
    difference = np.diff(values, n=len(parts))[0]
    return difference, 0, difference == 0


def _check_polynomial_part_average(parts, d, n):
    period = cf.lcm_scaled(parts, d)
    formula = period * cf.congruent_poly_part(parts, d, n)
    oracle = sum(cf.residue_class_sum(parts, d, n, c) for c in range(period))
    return formula, oracle, formula == oracle


def _check_polynomial_part_decomposition(parts, d, n):
    formula = cf.congruent_poly_part(parts, d, n)
    oracle = cf.polynomial_part_by_decomposition(parts, d, n)
    return formula, oracle, formula == oracle


def _check_constituent_average(parts, d, n):
    formula = cf.congruent_poly_part(parts, d, n)
    oracle = cf.constituent_average(parts, d, n)
    return formula, oracle, formula == oracle


def _check_binary_total_closed(n):
    # d = 2 allows every multiplicity, so this counts binary partitions of n
    formula = fc.binary_total_closed(n)
    oracle = orc.congruent_count(dary_parts(2, log_floor(2, n)), 2, n)
    return formula, oracle, formula == oracle


def _check_cohomology_total(p, n):
    formula = fc.h_total(p, n, "closed-form")
    oracle = fc.h_total(p, n, "enumeration")
    return formula, oracle, formula == oracle


def _check_counted_closed(parts, n, j):
    formula = cf.counted_closed(parts, n, j).value
    oracle = orc.weighted_profile(parts, 2, n).get(j, 0)
    return formula, oracle, formula == oracle


def _check_counted_congruent_closed(parts, d, n, j):
    formula = cf.counted_congruent_closed(parts, d, n, j).value
    oracle = orc.weighted_profile(parts, d, n).get(j, 0)
    return formula, oracle, formula == oracle


def _check_dary_counted_closed(d, k, n, j):
    formula = cf.dary_counted_closed(d, k, n, j).value
    oracle = orc.weighted_profile(dary_parts(d, k), d, n).get(j, 0)
    return formula, oracle, formula == oracle


@lru_cache(maxsize=1024)
def _cohomology_profile(p, n, method):
    # every j of one (p, n) reads the same two profiles
    return fc.stable_profile(p, n, method)


def _check_cohomology_closed(p, n, j):
    formula = _cohomology_profile(p, n, "closed-form").h.get(j, 0)
    oracle = _cohomology_profile(p, n, "enumeration").h.get(j, 0)
    return formula, oracle, formula == oracle


IDENTITY_CHECKS = {
    "denumerant-closed": _check_denumerant_closed,
    "congruent-closed": _check_congruent_closed,
    "congruent-decomposition": _check_congruent_decomposition,
    "dary-closed": _check_dary_closed,
    "series": _check_series,
    "sum-over-j": _check_sum_over_j,
    "d2-reduction": _check_d2_reduction,
    "divisor-monotonicity": _check_divisor_monotonicity,
    "quasi-period": _check_quasi_period,
    "polynomial-part-average": _check_polynomial_part_average,
    "polynomial-part-decomposition": _check_polynomial_part_decomposition,
    "constituent-average": _check_constituent_average,
    "binary-total-closed": _check_binary_total_closed,
    "cohomology-total": _check_cohomology_total,
    "counted-closed": _check_counted_closed,
    "counted-congruent-closed": _check_counted_congruent_closed,
    "dary-counted-closed": _check_dary_counted_closed,
    "cohomology-closed": _check_cohomology_closed,
}


def _relaxed_value(name, params):
    # size of the solution set each as-printed formula really counts
    values = dict(params)
    n, j = values["n"], values["j"]
    if name == "counted-closed":
        return orc.relaxed_count(values["parts"], n, j)
    if name == "counted-congruent-closed":
        return orc.relaxed_weighted_count(values["parts"], values["d"], n, j)
    if name == "dary-counted-closed":
        d = values["d"]
        return orc.relaxed_weighted_count(dary_parts(d, values["k"]), d, n, j)
    p = values["p"]
    k = log_floor(p, n)
    if n == 0 or k == 0 or j == 0:
        return None
    if p == 2:
        return orc.relaxed_count(dary_parts(2, k), n, j)
    return orc.relaxed_weighted_count(dary_parts(p, k), p, n, j)


def classify(name, params, formula, oracle):
    """
    Decide whether an as-printed discrepancy is known or novel

    Inputs:
    name    - identity id
    params  - normalized parameter tuple
    formula - formula value
    oracle  - true count

    Outputs:
    classification - ('known' or 'novel', note)
    """
    if IDENTITY_DICT[name]["family"] == COUNT_CERTIFIED:
        return NOVEL, "count-certified identity disagrees"
    if formula < oracle:
        return NOVEL, "formula below the true count"
    registered = KNOWN_DISCREPANCIES.get((name, params))
    if registered:
        return KNOWN, registered
    relaxed = _relaxed_value(name, params)
    if relaxed is not None and relaxed == formula:
        return KNOWN, f"overcount {format_exact(formula - oracle)} from the dropped nonnegativity constraint"
    return NOVEL, f"overcount not explained by the relaxed count {relaxed}"


def _compare(name, params):
    formula, oracle, agrees = IDENTITY_CHECKS[name](**dict(params))
    formula, oracle = Fraction(formula), Fraction(oracle)
    if agrees:
        return formula, oracle, None
    classification, note = classify(name, params, formula, oracle)
    return formula, oracle, DiscrepancyRecord(
        name, params, formula, oracle, classification, note
    )


def _evaluate_case(case):
    return _compare(*case)[2]


def compare_identity(name, params):
    """
    Evaluate both sides of one identity at one parameter tuple

    Inputs:
    name    - identity id (see IDENTITY_DICT) or alias
    params  - dict of the parameters the identity needs

    Outputs:
    params  - normalized parameter tuple
    formula - formula side as a Fraction
    oracle  - oracle side as a Fraction
    record  - None when both sides match, DiscrepancyRecord otherwise
    """
    name = resolve_identity(name)
    params = normalize_params(name, params)
    return (params,) + _compare(name, params)


def check_identity(name, params):
    """
    Evaluate one identity at one parameter tuple

    Inputs:
    name    - identity id (see IDENTITY_DICT) or alias
    params  - dict of the parameters the identity needs

    Outputs:
    record  - None when both sides match, DiscrepancyRecord otherwise
    """
    return compare_identity(name, params)[3]


def part_sequences(config):
    """
    every part sequence of the grid, strictly increasing when config.strict
    and nondecreasing otherwise
    """
    choose = combinations if config.strict else combinations_with_replacement
    sequences = []
    for r in range(config.r_min, config.r_max + 1):
        sequences.extend(choose(range(1, config.max_part + 1), r))
    return sequences


def _j_range(config, n):
    upper = n if config.j_max is None else min(n, config.j_max)
    return range(0, upper + 1)


def _identity_cases(name, config):
    sequences = part_sequences(config)
    n_values = range(config.n_min, config.n_max + 1)
    faithful_n = range(0, config.faithful_n_max + 1)
    if name in ("denumerant-closed", "d2-reduction"):
        return [
            (("parts", parts), ("n", n))
            for parts in sequences
            if len(parts) >= 2 or name == "d2-reduction"
            for n in n_values
        ]
    if name in (
        "congruent-closed",
        "congruent-decomposition",
        "series",
        "sum-over-j",
        "quasi-period",
        "polynomial-part-average",
        "polynomial-part-decomposition",
        "constituent-average",
    ):
        needs_two = name not in ("congruent-decomposition", "series", "sum-over-j")
        return [
            (("parts", parts), ("d", d), ("n", n))
            for parts in sequences
            if len(parts) >= 2 or not needs_two
            for d in config.d_values
            for n in n_values
        ]
    if name == "divisor-monotonicity":
        pairs = [
            (d, d2)
            for d in config.d_values
            for d2 in config.d_values
            if d < d2 and d2 % d == 0
        ]
        return [
            (("parts", parts), ("d", d), ("d2", d2), ("n", n))
            for parts in sequences
            for d, d2 in pairs
            for n in n_values
        ]
    if name == "dary-closed":
        return [
            (("d", d), ("k", k), ("n", n))
            for d in config.dary_d_values
            for k in config.k_values
            for n in range(0, config.dary_n_max + 1)
        ]
    if name == "binary-total-closed":
        return [(("n", n),) for n in range(0, config.dary_n_max + 1)]
    if name == "cohomology-total":
        return [
            (("p", p), ("n", n))
            for p in config.primes
            for n in range(0, config.cohomology_n_max + 1)
        ]
    if name == "counted-closed":
        return [
            (("parts", parts), ("n", n), ("j", j))
            for parts in _increasing(sequences)
            for n in faithful_n
            for j in _j_range(config, n)
        ]
    if name == "counted-congruent-closed":
        return [
            (("parts", parts), ("d", d), ("n", n), ("j", j))
            for parts in _increasing(sequences)
            for d in config.faithful_d_values
            for n in faithful_n
            for j in _j_range(config, n)
        ]
    if name == "dary-counted-closed":
        return [
            (("d", d), ("k", k), ("n", n), ("j", j))
            for d in config.faithful_d_values
            for k in config.k_values
            for n in faithful_n
            for j in _j_range(config, n)
        ]
    if name == "cohomology-closed":
        return [
            (("p", p), ("n", n), ("j", j))
            for p in config.primes
            for n in range(0, config.cohomology_n_max + 1)
            for j in range(0, n + 1)
        ]
    raise KeyError(f"unknown identity {name!r}")


def _increasing(sequences):
    increasing = []
    for parts in sequences:
        if len(parts) < 2:
            continue
        try:
            increasing.append(check_increasing(parts))
        except ValueError:
            continue
    return increasing


def build_cases(config):
    """
    All (identity, params) cases of a config in canonical order. With
    config.samples > 0 each identity keeps a seeded random sample of that size.
    """
    rng = random.Random(config.seed)
    cases = []
    for name in config.identities:
        name = resolve_identity(name)
        identity_cases =[(name, params) for params in _identity_cases(name, config)]
        if config.samples and len(identity_cases) > config.samples:
            identity_cases = sorted(rng.sample(identity_cases, config.samples))
        cases.extend(identity_cases)
    return cases


def sweep(config=None, progress=False):
    """
    Check every identity of the config on every parameter tuple of its grid

    Inputs:
    config      - SweepConfig, defaults to DEFAULT_SWEEP
    progress    - show a tqdm bar on stderr

    Outputs:
    report      - SweepReport with records sorted by (identity, params)
    """
    config = check_config(config or SweepConfig())
    start = time.perf_counter()
    cases = build_cases(config)
    with tqdm(total=len(cases), disable=not progress, desc="Checking identities") as bar:
        if config.workers > 1:
            chunksize = max(1, len(cases) // (config.workers * 16))
            with ProcessPoolExecutor(max_workers=config.workers) as executor:
                outcomes = []
                for outcome in executor.map(_evaluate_case, cases, chunksize=chunksize):
                    outcomes.append(outcome)
                    bar.update(1)
        else:
            outcomes = []
            for case in cases:
                outcomes.append(_evaluate_case(case))
                bar.update(1)

    records = sorted(
        (record for record in outcomes if record is not None),
        key=lambda record: (record.identity, record.params),
    )
    discrepancies = {}
    for record in records:
        discrepancies[record.identity] = discrepancies.get(record.identity, 0) + 1
    return SweepReport(
        config=config,
        cases=len(cases),
        matches=len(cases) - len(records),
        discrepancies=discrepancies,
        records=tuple(records),
        duration=time.perf_counter() - start,
    )


def validity_map(parts, d, n_max):
    """
    Where the weighted congruent closed form agrees with the true count

    Inputs:
    parts   - strictly increasing part sequence, r >= 2
    d       - modulus >= 2
    n_max   - largest n tabulated

    Outputs:
    validity_df - DataFrame with columns n, j, formula, oracle, gap, status,
                  one row for every (n, j) where either side is nonzero
    """
    parts = check_increasing(check_parts(parts))
    rows = []
    for n in range(0, n_max + 1):
        profile = orc.weighted_profile(parts, d, n)
        for j in range(0, n + len(parts) + 1):
            formula = int(cf.counted_congruent_closed(parts, d, n, j).value)
            oracle = profile.get(j, 0)
            if not formula and not oracle:
                continue
            rows.append((n, j, formula, oracle))
    validity_df = pd.DataFrame(rows, columns=["n", "j", "formula", "oracle"])
    validity_df["gap"] = validity_df["formula"] - validity_df["oracle"]
    validity_df["status"] = np.where(
        validity_df["gap"] == 0,
        "agree",
        np.where(validity_df["gap"] > 0, "overcount", "undercount"),
    )
    return validity_df


def format_params(params):
    """
    'parts=1,3 d=3 n=10' rendering of a parameter tuple
    """
    rendered = []
    for key, value in params:
        if isinstance(value, tuple):
            value = ",".join(str(v) for v in value)
        rendered.append(f"{key}={value}")
    return " ".join(rendered)


def record_payload(record):
    """
    the structured (json-ready) form of one record, fixed key order
    """
    return {
        "identity": record.identity,
        "params": {
            key: list(value) if isinstance(value, tuple) else value
            for key, value in record.params
        },
        "formula": format_exact(record.formula),
        "oracle": format_exact(record.oracle),
        "classification": record.classification,
        "note": record.note,
    }


def report_frame(report):
    """
    DataFrame of a report's records, one row per discrepancy
    """
    columns = ["identity", "params", "formula", "oracle", "gap", "classification"]
    rows = [
        (
            record.identity,
            format_params(record.params),
            format_exact(record.formula),
            format_exact(record.oracle),
            format_exact(record.gap),
            record.classification,
        )
        for record in report.records
    ]
    return pd.DataFrame(rows, columns=columns)


def _config_payload(config):
    payload = {}
    for key, value in asdict(config).items():
        payload[key] = list(value) if isinstance(value, tuple) else value
    return payload


def render_report(report, fmt="table"):
    """
    Serialize a SweepReport

    Inputs:
    report  - SweepReport
    fmt     - 'table', 'record' (json) or 'csv'

    Outputs:
    text    - the rendered report
    """
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"Error: unknown output format {fmt!r}.")
    if fmt == "record":
        payload = {
            "config": _config_payload(report.config),
            "cases": report.cases,
            "matches": report.matches,
            "discrepancies": dict(sorted(report.discrepancies.items())),
            "known": report.known,
            "novel": report.novel,
            "status": report.status,
            "records": [record_payload(record) for record in report.records],
            "duration": round(report.duration, 3),
        }
        return json.dumps(payload, indent=2)
    frame = report_frame(report)
    if fmt == "csv":
        return frame.to_csv(index=False)
    lines = [
        f"cases: {report.cases}",
        f"matches: {report.matches}",
        f"discrepancies: {len(report.records)} (known {report.known}, novel {report.novel})",
    ]
    for name, count in sorted(report.discrepancies.items()):
        lines.append(f"  {name}: {count}")
    lines.append(f"status: {report.status}")
    lines.append(f"duration: {report.duration:.1f}s")
    if len(frame):
        lines.append("")
        lines.append(frame.to_string(index=False))
    return "\n".join(lines)


def parse_setting(key, text):
    """
    Parse the text of one sweep setting into the type SweepConfig stores
    """
    text = text.strip()
    kind = {f.name: f.type for f in fields(SweepConfig)}[key]
    if key == "identities":
        return tuple(item.strip() for item in text.split(",") if item.strip())
    if key == "output":
        return text or None
    if key == "j_max" and text.lower() in ("", "none"):
        return None
    if kind is bool or kind == "bool":
        if text.lower() not in ("true", "false", "yes", "no", "1", "0"):
            raise ValueError(f"Error: {key} must be true or false, got {text!r}.")
        return text.lower() in ("true", "yes", "1")
    if kind is tuple or kind == "tuple":
        values = []
        for item in text.split(","):
            item = item.strip()
            if ".." in item:
                low, high = item.split("..")
                values.extend(range(int(low), int(high) + 1))
            elif item:
                values.append(int(item))
        return tuple(values)
    return int(text)


def parse_config_text(text, base=None):
    """
    Read a key = value sweep configuration. Blank lines and # comments are
    skipped, lists are comma separated and a..b expands to an integer range.

    Inputs:
    text    - contents of the config file
    base    - SweepConfig the values are layered onto

    Outputs:
    config  - SweepConfig
    """
    known = {f.name for f in fields(SweepConfig)}
    overrides = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"Error: line {number} is not of the form key = value.")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ValueError(f"Error: unknown sweep setting {key!r} on line {number}.")
        try:
            overrides[key] = parse_setting(key, value)
        except ValueError as ex:
            raise ValueError(f"Error: bad value for {key} on line {number}: {ex}") from None
    return replace(base or SweepConfig(), **overrides)


def read_config(path, base=None):
    """
    parse_config_text on the contents of a file
    """
    with open(path, "r") as config_file:
        return parse_config_text(config_file.read(), base)
