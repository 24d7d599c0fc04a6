"""
Ground-truth counts for the restricted partition functions.

Every count in here comes from dynamic programming on a generating function or
from listing the solutions one by one. The closed formulas in closed_forms.py
are checked against these values, never the other way round, so nothing in
this file may import closed_forms.
"""
from functools import lru_cache

import numpy as np

from congruent_partitions.helper_functions import (
    check_increasing,
    check_length,
    check_modulus,
    check_nonnegative,
    check_parts,
    row_block,
    table_size,
)


def weight(x, d):
    """
    the cohomological weight x - (d-2)*floor(x/d) of a single coordinate
    """
    return x - (d - 2) * (x // d)


def allowed_multiplicities(d, bound):
    """
    All multiplicities x with 0 <= x <= bound and x = 0 or 1 (mod d)

    Inputs:
    d       - modulus >= 2
    bound   - largest multiplicity wanted

    Outputs:
    x_values - ascending list 0, 1, d, d+1, 2d, 2d+1, ...
    """
    x_values = []
    base = 0
    while base <= bound:
        x_values.append(base)
        if base + 1 <= bound:
            x_values.append(base + 1)
        base += d
    return x_values


@lru_cache(maxsize=4096)
def _denumerant_table(parts, size):
    coeffs = [1] + [0] * size
    for part in parts:
        for m in range(part, size + 1):
            coeffs[m] += coeffs[m - part]
    return tuple(coeffs)


@lru_cache(maxsize=4096)
def _congruent_table(parts, d, size):
    # expands prod_i sum_{x = 0,1 mod d} z^(a_i x) one factor at a time
    coeffs = [1] + [0] * size
    for part in parts:
        steps = [part * x for x in allowed_multiplicities(d, size // part)]
        expanded = [0] * (size + 1)
        for m, value in enumerate(coeffs):
            if not value:
                continue
            for step in steps:
                if m + step > size:
                    break
                expanded[m + step] += value
        coeffs = expanded
    return tuple(coeffs)


def _max_weight(parts, d, size):
    # x = d q + e carries weight 2q + e, never more than x, so at most
    # size // min(parts) overall and 2 size / (d min(parts)) + r once d > 2
    smallest = min(parts)
    return min(size // smallest, 2 * size // (d * smallest) + len(parts))


@lru_cache(maxsize=1024)
def _weighted_table(parts, d, size):
    # bivariate series prod_i (1 + y z^a_i) / (1 - y^2 z^(d a_i)); rows are
    # powers of z and columns powers of y up to the largest reachable weight.
    # object dtype keeps python ints
    table = np.zeros((size + 1, _max_weight(parts, d, size) + 1), dtype=object)
    table[0, 0] = 1
    for part in parts:
        # descending, so row m - part still holds the previous factor
        for m in range(size, part - 1, -1):
            table[m, 1:] += table[m - part, :-1]
        step = d * part
        for m in range(step, size + 1):
            table[m, 2:] += table[m - step, :-2]
    rows = []
    for row in table:
        rows.append({j: int(count) for j, count in enumerate(row) if count})
    return tuple(rows)


def denumerant(parts, n):
    """
    number of nonnegative solutions of a_1 x_1 + ... + a_r x_r = n

    Inputs:
    parts   - part sequence (a_1, ..., a_r)
    n       - target, any integer

    Outputs:
    count   - exact count, 0 for negative n
    """
    parts = check_parts(parts)
    if n < 0:
        return 0
    return _denumerant_table(tuple(sorted(parts)), table_size(n))[n]


def congruent_count(parts, d, n):
    """
    number of nonnegative solutions of a_1 x_1 + ... + a_r x_r = n with every
    x_i = 0 or 1 (mod d)

    Inputs:
    parts   - part sequence (a_1, ..., a_r)
    d       - modulus >= 2
    n       - target, any integer

    Outputs:
    count   - p_{a,d}(n), 0 for negative n
    """
    parts = check_parts(parts)
    d = check_modulus(d)
    if n < 0:
        return 0
    return _congruent_table(tuple(sorted(parts)), d, table_size(n))[n]


def weighted_profile(parts, d, n):
    """
    Splits the congruent count by the weight sum_i (x_i - (d-2) floor(x_i/d))

    Inputs:
    parts   - part sequence (a_1, ..., a_r)
    d       - modulus >= 2
    n       - target, any integer

    Outputs:
    profile - dict j -> p_{a,d}(n;j) holding only nonzero counts, ascending j;
              empty for negative n
    """
    parts = check_parts(parts)
    d = check_modulus(d)
    if n < 0:
        return {}
    row = _weighted_table(tuple(sorted(parts)), d, row_block(n))[n]
    return dict(sorted(row.items()))


def _extend_solutions(parts, d, remaining, prefix, solutions):
    part = parts[len(prefix)]
    if len(prefix) == len(parts) - 1:
        if remaining % part == 0 and (remaining // part) % d in (0, 1):
            solutions.append(prefix + (remaining // part,))
        return
    for x in allowed_multiplicities(d, remaining // part):
        _extend_solutions(parts, d, remaining - part * x, prefix + (x,), solutions)


def enumerate_solutions(parts, d, n):
    """
    Lists every solution counted by congruent_count

    Inputs:
    parts       - part sequence (a_1, ..., a_r)
    d           - modulus >= 2
    n           - nonnegative target

    Outputs:
    solutions   - list of tuples (x_1, ..., x_r) in lexicographic order
    """
    parts = check_parts(parts)
    d = check_modulus(d)
    check_nonnegative(n, "n")
    solutions = []
    _extend_solutions(parts, d, n, (), solutions)
    return solutions


def series_coeffs(parts, d, N):
    """
    Coefficients of prod(1 + z^a_i) / prod(1 - z^(d a_i)) up to z^N. The
    numerator is multiplied out first, then each geometric series is applied
    as a running sum with stride d*a_i.

    Inputs:
    parts   - part sequence (a_1, ..., a_r)
    d       - modulus >= 2
    N       - last power of z wanted

    Outputs:
    coeffs  - list of N+1 ints, coeffs[m] = p_{a,d}(m)
    """
    parts = check_parts(parts)
    d = check_modulus(d)
    check_nonnegative(N, "N")
    coeffs = [1] + [0] * N
    for part in parts:
        for m in range(N, part - 1, -1):
            coeffs[m] += coeffs[m - part]
    for part in parts:
        step = d * part
        for m in range(step, N + 1):
            coeffs[m] += coeffs[m - step]
    return coeffs


def relaxed_count(parts, n, j):
    """
    Size of the solution set of sum a_i x_i = n, sum x_i = j once x_1 is no
    longer required to be nonnegative. Parts must be strictly increasing.

    Inputs:
    parts   - strictly increasing part sequence, r >= 2
    n       - target
    j       - number of parts

    Outputs:
    count   - denumerant of the differences (a_2-a_1, ..., a_r-a_1) at n - a_1 j
    """
    parts = check_increasing(check_length(check_parts(parts)))
    differences = tuple(part - parts[0] for part in parts[1:])
    return denumerant(differences, n - parts[0] * j)


def relaxed_weighted_count(parts, d, n, j):
    """
    Size of the solution set of the weighted congruent count once the quotient
    q_1 of the first coordinate x_1 = d q_1 + eps_1 may go negative. Written as
    a sum over eps in {0,1}^r of scaled denumerants, all evaluated by the DP.

    Inputs:
    parts   - strictly increasing part sequence, r >= 2
    d       - modulus >= 2
    n       - target
    j       - weight

    Outputs:
    count   - number of relaxed solutions
    """
    parts = check_increasing(check_length(check_parts(parts)))
    d = check_modulus(d)
    scaled = tuple(d * (part - parts[0]) for part in parts[1:])
    total = 0
    for mask in range(1 << len(parts)):
        eps = [(mask >> i) & 1 for i in range(len(parts))]
        size = sum(eps)
        if (j - size) % 2:
            continue
        target = (
            n
            - parts[0] * d * (j - size) // 2
            - sum(part * e for part, e in zip(parts, eps))
        )
        total += denumerant(scaled, target)
    return total
