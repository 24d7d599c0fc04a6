from pathlib import Path
import pandas as pd

import congruent_partitions.closed_forms as cf
import congruent_partitions.flag_cohomology as fc
import congruent_partitions.oracle as orc
from congruent_partitions.helper_functions import (
    check_increasing,
    check_length,
    check_modulus,
    check_nonnegative,
    check_parts,
    check_prime,
)


def check_format(data_format):
    """
    Check that the format for the data is either csv or pandas

    Inputs:
    data_format - String of format

    Outputs:
    """
    possible_formats = ["pandas", "csv"]
    if data_format.lower() not in possible_formats:
        print(
            f"You passed {data_format} to a table function as a data format.\n"
            "This is an unaccepted format. Please either pass 'pandas' or 'csv'.\n"
        )


def _deliver(table_df, data_format, data_dir, file_name):
    if data_format == "pandas":
        return table_df
    table_df.to_csv(f"{data_dir}/{file_name}", index=False)
    return None


def count_table(
    parts, d, n_max, data_format="pandas", data_dir=f"{Path.home()}/", verbose=True
):
    """
    Tabulates p_{a,d}(n) for 0 <= n <= n_max by every method, next to the
    polynomial part

    Inputs:
    parts       - part sequence, r >= 2
    d           - modulus >= 2
    n_max       - last n tabulated
    data_format - the format of the data the user wants returned. This is either
                  a pandas dataframe or a csv file
    data_dir    - a directory to write the csv file to if that option is chosen.
                  Defaults to the user's home directory
    verbose     - print a line per n

    Outputs:
    count_df    - columns n, oracle, closed, decomposition, poly_part if pandas
                  is chosen, None when a csv file is written instead
    """
    check_format(data_format)
    parts = check_length(check_parts(parts))
    d = check_modulus(d)
    check_nonnegative(n_max, "n_max")

    rows = []
    for n in range(0, n_max + 1):
        if verbose:
            print(f"Tabulating n = {n}")
        rows.append(
            (
                n,
                orc.congruent_count(parts, d, n),
                cf.congruent_closed(parts, d, n),
                cf.congruent_by_decomposition(parts, d, n),
                cf.congruent_poly_part(parts, d, n),
            )
        )
    count_df = pd.DataFrame(
        rows, columns=["n", "oracle", "closed", "decomposition", "poly_part"]
    )
    name = "_".join(str(part) for part in parts)
    return _deliver(count_df, data_format, data_dir, f"count_{name}_d{d}.csv")


def weighted_table(
    parts, d, n_max, data_format="pandas", data_dir=f"{Path.home()}/", verbose=True
):
    """
    Long table of the weighted counts p_{a,d}(n;j) from the bivariate DP

    Inputs:
    parts       - strictly increasing part sequence
    d           - modulus >= 2
    n_max       - last n tabulated
    data_format - 'pandas' or 'csv'
    data_dir    - directory the csv file goes to
    verbose     - print a line per n

    Outputs:
    weighted_df - columns n, j, count, one row per nonzero count, if pandas is
                  chosen. None if a csv file was written
    """
    check_format(data_format)
    parts = check_increasing(check_parts(parts))
    d = check_modulus(d)
    check_nonnegative(n_max, "n_max")

    rows = []
    for n in range(0, n_max + 1):
        if verbose:
            print(f"Tabulating n = {n}")
        rows.extend((n, j, count) for j, count in orc.weighted_profile(parts, d, n).items())
    weighted_df = pd.DataFrame(rows, columns=["n", "j", "count"])
    name = "_".join(str(part) for part in parts)
    return _deliver(weighted_df, data_format, data_dir, f"weighted_{name}_d{d}.csv")


def cohomology_table(
    p, n_max, data_format="pandas", data_dir=f"{Path.home()}/", verbose=True
):
    """
    h^j_st(-n,n) for 0 <= n <= n_max by enumeration and by the closed forms

    Inputs:
    p           - prime characteristic
    n_max       - last n tabulated
    data_format - 'pandas' or 'csv'
    data_dir    - directory the csv file goes to
    verbose     - print a line per n

    Outputs:
    cohom_df    - columns n, j, h_enumeration, h_closed for every (n, j) where
                  either method is nonzero. The h_closed column is
                  as-printed and can exceed h_enumeration
    """
    check_format(data_format)
    p = check_prime(p)
    check_nonnegative(n_max, "n_max")

    rows = []
    for n in range(0, n_max + 1):
        if verbose:
            print(f"Tabulating n = {n}")
        enumerated = fc.stable_profile(p, n, "enumeration").h
        closed = fc.stable_profile(p, n, "closed-form").h
        for j in sorted(set(enumerated) | set(closed)):
            rows.append((n, j, enumerated.get(j, 0), closed.get(j, 0)))
    cohom_df = pd.DataFrame(rows, columns=["n", "j", "h_enumeration", "h_closed"])
    return _deliver(cohom_df, data_format, data_dir, f"cohomology_p{p}.csv")
