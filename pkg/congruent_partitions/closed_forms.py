"""
Closed formulas for the restricted partition functions, evaluated exactly.

Every formula here has the same shape: a sum over a box of indices of a
product prod_{l=1}^{deg} ((n - s)/M + l), where s is a weighted sum of the box
indices and M the modulus, sometimes restricted to s = n (mod M). The box is
turned into a multiset of sums s once (cached), split by residue mod M, and
then each evaluation only walks the bucket it needs.

Nothing in this module calls the oracle. Values flagged as-printed are the
printed reductions for the weighted counts; they drop a nonnegativity
constraint and can exceed the true count.
"""
from collections import Counter, namedtuple
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from sympy import Poly, interpolate, symbols

from congruent_partitions.helper_functions import (
    COUNTED_NOTE,
    CONGRUENT_COUNTED_NOTE,
    AS_PRINTED,
    FormulaConsistencyError,
    check_increasing,
    check_length,
    check_modulus,
    check_nonnegative,
    check_parts,
    dary_parts,
    lcm_of,
)

BoxSums = namedtuple("BoxSums", ["modulus", "sums", "buckets"])


@dataclass(frozen=True)
class FormulaResult:
    value: Fraction
    exactness: str
    note: str = ""


@lru_cache(maxsize=2048)
def box_sums(coordinates, modulus):
    """
    Multiset of s = v_1 + ... + v_r with v_i drawn from coordinates[i]

    Inputs:
    coordinates - tuple of tuples, the values each box coordinate contributes
    modulus     - the M the sums get bucketed by

    Outputs:
    box         - BoxSums with the sorted (s, multiplicity) pairs and the same
                  pairs grouped by s mod M
    """
    sums = Counter({0: 1})
    for values in coordinates:
        merged = Counter()
        for s, mult in sums.items():
            for value in values:
                merged[s + value] += mult
        sums = merged
    ordered = tuple(sorted(sums.items()))
    buckets = {}
    for s, mult in ordered:
        buckets.setdefault(s % modulus, []).append((s, mult))
    return BoxSums(
        modulus, ordered, {residue: tuple(terms) for residue, terms in buckets.items()}
    )


def box_numerator(terms, n, modulus, degree):
    """
    sum of mult * prod_{l=1}^{degree} (n - s + l*M) over the (s, mult) terms
    """
    return sum(
        mult * prod(n - s + ell * modulus for ell in range(1, degree + 1))
        for s, mult in terms
    )


@lru_cache(maxsize=2048)
def _box_polynomial(coordinates, modulus, degree):
    # box_numerator over all sums, expanded as a polynomial in n
    box = box_sums(coordinates, modulus)
    coeffs = [0] * (degree + 1)
    for s, mult in box.sums:
        factor = [mult]
        for ell in range(1, degree + 1):
            shift = ell * modulus - s
            factor = [
                (factor[i - 1] if i > 0 else 0)
                + (factor[i] * shift if i < len(factor) else 0)
                for i in range(len(factor) + 1)
            ]
        for i, c in enumerate(factor):
            coeffs[i] += c
    return tuple(coeffs)


def _evaluate(coeffs, n):
    total = 0
    for c in reversed(coeffs):
        total = total * n + c
    return total


def exact_quotient(numerator, denominator, context):
    """
    Divide a count-certified box numerator. A remainder means a formula was
    transcribed wrong, so it raises FormulaConsistencyError.
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise FormulaConsistencyError(
            f"{context}: {numerator}/{denominator} is not an integer"
        )
    return quotient


def lcm_parts(parts):
    """
    D = lcm(a_1, ..., a_r)
    """
    return lcm_of(check_parts(parts))


def lcm_scaled(parts, d):
    """
    D(d) = lcm(d a_1, ..., d a_r)
    """
    return lcm_of(d * part for part in check_parts(parts))


def lcm_shifted(parts, d=1):
    """
    D'(d) = lcm(d(a_2 - a_1), ..., d(a_r - a_1)) for strictly increasing parts;
    d = 1 gives the D' of the weighted count without congruences
    """
    parts = check_increasing(check_length(check_parts(parts)))
    return lcm_of(d * (part - parts[0]) for part in parts[1:])


def _popoviciu_coordinates(parts, modulus):
    return tuple(tuple(part * j for j in range(modulus // part)) for part in parts)


def _congruent_coordinates(parts, d, modulus):
    return tuple(
        tuple(part * (d * j + e) for j in range(modulus // (d * part)) for e in (0, 1))
        for part in parts
    )


def _popoviciu_value(parts, n):
    # denumerant formula for any r >= 1; with r = 1 the product is empty
    parts = tuple(sorted(parts))
    modulus = lcm_parts(parts)
    box = box_sums(_popoviciu_coordinates(parts, modulus), modulus)
    degree = len(parts) - 1
    numerator = box_numerator(box.buckets.get(n % modulus, ()), n, modulus, degree)
    return exact_quotient(
        numerator, modulus ** degree * factorial(degree), f"denumerant formula {parts}"
    )


def popoviciu_general(parts, n):
    """
    The closed form for the denumerant p_a(n) as a sum over the box
    0 <= j_i < D/a_i restricted to sum a_i j_i = n (mod D)

    Inputs:
    parts   - part sequence, r >= 2
    n       - integer >= -(r-1)*D

    Outputs:
    value   - p_a(n) as an int
    """
    parts = check_length(check_parts(parts))
    window = -(len(parts) - 1) * lcm_parts(parts)
    if n < window:
        raise ValueError(
            f"Error: the closed form is only evaluated for n >= {window}, got {n}."
        )
    return _popoviciu_value(parts, n)


def polynomial_part(parts, n):
    """
    Polynomial part P_a(n) of the denumerant: the same box without the
    congruence restriction, divided by D (r-1)!

    Inputs:
    parts   - part sequence, r >= 2
    n       - any integer

    Outputs:
    value   - Fraction
    """
    parts = tuple(sorted(check_length(check_parts(parts))))
    modulus = lcm_parts(parts)
    degree = len(parts) - 1
    coeffs = _box_polynomial(_popoviciu_coordinates(parts, modulus), modulus, degree)
    return Fraction(_evaluate(coeffs, n), modulus ** (degree + 1) * factorial(degree))


def _congruent_box(parts, d):
    parts = tuple(sorted(parts))
    modulus = lcm_scaled(parts, d)
    coordinates = _congruent_coordinates(parts, d, modulus)
    return coordinates, modulus


def congruent_closed(parts, d, n):
    """
    Closed form for p_{a,d}(n): sum over eps in {0,1}^r and the box
    0 <= j_i < D(d)/(d a_i), restricted to sum a_i (d j_i + eps_i) = n (mod D(d))

    Inputs:
    parts   - part sequence, r >= 2
    d       - modulus >= 2
    n       - nonnegative target

    Outputs:
    value   - p_{a,d}(n) as an int
    """
    parts = check_length(check_parts(parts))
    d = check_modulus(d)
    check_nonnegative(n, "n")
    coordinates, modulus = _congruent_box(parts, d)
    box = box_sums(coordinates, modulus)
    degree = len(parts) - 1
    numerator = box_numerator(box.buckets.get(n % modulus, ()), n, modulus, degree)
    return exact_quotient(
        numerator,
        modulus ** degree * factorial(degree),
        f"congruent closed form {parts}, d={d}, n={n}",
    )


def congruent_by_decomposition(parts, d, n):
    """
    p_{a,d}(n) as the sum over subsets J of p_{d a}(n - a_J), each scaled
    denumerant evaluated by its closed form and dropped when n - a_J < 0
    """
    parts = check_parts(parts)
    d = check_modulus(d)
    check_nonnegative(n, "n")
    scaled = tuple(d * part for part in parts)
    total = 0
    for mask in range(1 << len(parts)):
        target = n - sum(part for i, part in enumerate(parts) if (mask >> i) & 1)
        if target >= 0:
            total += _popoviciu_value(scaled, target)
    return total


def congruent_poly_part(parts, d, n):
    """
    Polynomial part P_{a,d}(n): the full eps/box sum divided by D(d) (r-1)!

    Inputs:
    parts   - part sequence, r >= 2
    d       - modulus >= 2
    n       - any integer

    Outputs:
    value   - Fraction in lowest terms
    """
    numerator, denominator = congruent_poly_part_unreduced(parts, d, n)
    return Fraction(numerator, denominator)


def congruent_poly_part_unreduced(parts, d, n):
    """
    P_{a,d}(n) as the pair (numerator, D(d)^r (r-1)!) before reduction, which
    is how hand computations of the box sum come out (168/81 for a=(1,3), d=3,
    n=10)
    """
    parts = check_length(check_parts(parts))
    d = check_modulus(d)
    coordinates, modulus = _congruent_box(parts, d)
    degree = len(parts) - 1
    coeffs = _box_polynomial(coordinates, modulus, degree)
    return _evaluate(coeffs, n), modulus ** (degree + 1) * factorial(degree)


def residue_class_sum(parts, d, n, residue):
    """
    The congruent closed form evaluated at n but with the box restricted to
    sums congruent to residue instead of n. For residue = n mod D(d) this is
    p_{a,d}(n); summed over every residue it gives D(d) P_{a,d}(n).

    Inputs:
    parts   - part sequence, r >= 2
    d       - modulus >= 2
    n       - any integer
    residue - target residue class mod D(d)

    Outputs:
    value   - Fraction
    """
    parts = check_length(check_parts(parts))
    d = check_modulus(d)
    coordinates, modulus = _congruent_box(parts, d)
    box = box_sums(coordinates, modulus)
    degree = len(parts) - 1
    numerator = box_numerator(box.buckets.get(residue % modulus, ()), n, modulus, degree)
    return Fraction(numerator, modulus ** degree * factorial(degree))


def polynomial_part_by_decomposition(parts, d, n):
    """
    sum over subsets J of P_{d a}(n - a_J), with no clamping since polynomial
    parts are polynomials
    """
    parts = check_length(check_parts(parts))
    d = check_modulus(d)
    scaled = tuple(d * part for part in parts)
    total = Fraction(0)
    for mask in range(1 << len(parts)):
        shift = sum(part for i, part in enumerate(parts) if (mask >> i) & 1)
        total += polynomial_part(scaled, n - shift)
    return total


@lru_cache(maxsize=256)
def _quasi_polynomial(parts, d):
    modulus = lcm_scaled(parts, d)
    r = len(parts)
    x = symbols("x")
    constituents = []
    for residue in range(modulus):
        points = [
            (residue + m * modulus, congruent_closed(parts, d, residue + m * modulus))
            for m in range(r)
        ]
        coeffs = Poly(interpolate(points, x), x).all_coeffs()[::-1]
        coeffs = [Fraction(int(c.p), int(c.q)) for c in coeffs]
        coeffs += [Fraction(0)] * (r - len(coeffs))
        constituents.append(tuple(coeffs))
    return tuple(constituents)


def quasi_polynomial(parts, d):
    """
    The constituents of p_{a,d} as a quasi-polynomial of period D(d)

    Inputs:
    parts   - part sequence, r >= 2
    d       - modulus >= 2

    Outputs:
    constituents - list indexed by residue c mod D(d); entry c holds the r
                   exact coefficients (constant term first) of the polynomial
                   that agrees with p_{a,d}(n) for every n >= 0 with n = c
    """
    parts = tuple(sorted(check_length(check_parts(parts))))
    d = check_modulus(d)
    return [list(coeffs) for coeffs in _quasi_polynomial(parts, d)]


def constituent_average(parts, d, n):
    """
    mean over all residue classes of the constituents evaluated at n
    """
    constituents = quasi_polynomial(parts, d)
    total = sum(_evaluate(coeffs, Fraction(n)) for coeffs in constituents)
    return total / len(constituents)


def dary_closed(d, k, n):
    """
    p_{(1,d,...,d^k),d}(n) by the d-ary specialization: box 0 <= j_i < d^(k-i)
    for i < k with weights d^(i+1), eps_i with weights d^i, modulus d^(k+1)

    Inputs:
    d   - modulus >= 2
    k   - largest exponent, >= 1
    n   - nonnegative target

    Outputs:
    value - count as an int
    """
    coordinates, modulus = _dary_box(d, k)
    check_nonnegative(n, "n")
    box = box_sums(coordinates, modulus)
    numerator = box_numerator(box.buckets.get(n % modulus, ()), n, modulus, k)
    return exact_quotient(
        numerator, modulus ** k * factorial(k), f"d-ary closed form d={d}, k={k}, n={n}"
    )


def dary_poly_part(d, k, n):
    """
    polynomial part of p_{(1,d,...,d^k),d}(n), divided by k! d^(k+1)
    """
    coordinates, modulus = _dary_box(d, k)
    coeffs = _box_polynomial(coordinates, modulus, k)
    return Fraction(_evaluate(coeffs, n), modulus ** (k + 1) * factorial(k))


def _dary_box(d, k):
    d = check_modulus(d)
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"Error: k must be an integer >= 1, got {k!r}.")
    quotients = tuple(
        tuple(d ** (i + 1) * j for j in range(d ** (k - i))) for i in range(k)
    )
    units = tuple((0, d ** i) for i in range(k + 1))
    return quotients + units, d ** (k + 1)


def _check_weighted(parts, j):
    parts = check_increasing(check_length(check_parts(parts)))
    check_nonnegative(j, "j")
    return parts


def counted_closed(parts, n, j):
    """
    Weighted count by number of parts, p_a(n;j), as the denumerant of the
    differences (a_2 - a_1, ..., a_r - a_1) at n - a_1 j. Printed without the
    constraint x_2 + ... + x_r <= j, so the value is an upper bound.

    Inputs:
    parts   - strictly increasing part sequence, r >= 2
    n       - target
    j       - nonnegative number of parts

    Outputs:
    result  - FormulaResult flagged as-printed
    """
    parts = _check_weighted(parts, j)
    differences = tuple(part - parts[0] for part in parts[1:])
    target = n - parts[0] * j
    value = _popoviciu_value(differences, target) if target >= 0 else 0
    return FormulaResult(Fraction(value), AS_PRINTED, COUNTED_NOTE)


def _eps_vectors(length):
    # eps as binary integers 0 .. 2^length - 1, low bit first coordinate
    for mask in range(1 << length):
        yield tuple((mask >> i) & 1 for i in range(length))


def _counted_numerator(box, degree, parts, d, n, j):
    total = 0
    for eps in _eps_vectors(len(parts)):
        size = sum(eps)
        if (j - size) % 2:
            continue
        target = (
            n
            - parts[0] * d * (j - size) // 2
            - sum(part * e for part, e in zip(parts, eps))
        )
        if target < 0:
            continue
        terms = box.buckets.get(target % box.modulus, ())
        total += box_numerator(terms, target, box.modulus, degree)
    return total


def counted_congruent_closed(parts, d, n, j):
    """
    Weighted congruent count p_{a,d}(n;j) by writing x_i = d q_i + eps_i: a sum
    over eps with |eps| = j (mod 2) of denumerants of
    (d(a_2-a_1), ..., d(a_r-a_1)) at n - a_1 d (j-|eps|)/2 - sum a_i eps_i,
    each evaluated by the closed form and taken as 0 for a negative target.

    Inputs:
    parts   - strictly increasing part sequence, r >= 2
    d       - modulus >= 2
    n       - target
    j       - nonnegative weight

    Outputs:
    result  - FormulaResult flagged as-printed
    """
    parts = _check_weighted(parts, j)
    d = check_modulus(d)
    scaled = tuple(d * (part - parts[0]) for part in parts[1:])
    modulus = lcm_shifted(parts, d)
    box = box_sums(_popoviciu_coordinates(scaled, modulus), modulus)
    degree = len(scaled) - 1
    numerator = _counted_numerator(box, degree, parts, d, n, j)
    value = exact_quotient(
        numerator,
        modulus ** degree * factorial(degree),
        f"weighted congruent closed form {parts}, d={d}, n={n}, j={j}",
    )
    return FormulaResult(Fraction(value), AS_PRINTED, CONGRUENT_COUNTED_NOTE)


def dary_counted_closed(d, k, n, j):
    """
    The weighted congruent count for the d-ary parts (1, d, ..., d^k), with
    box 0 <= j_i < D'/(d^i - 1), weights d(d^i - 1) and modulus d D' where
    D' = lcm(d-1, d^2-1, ..., d^k-1). k = 1 is the two-part case of
    counted_congruent_closed.

    Inputs:
    d   - modulus >= 2
    k   - largest exponent, >= 1
    n   - target
    j   - nonnegative weight

    Outputs:
    result - FormulaResult flagged as-printed
    """
    d = check_modulus(d)
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"Error: k must be an integer >= 1, got {k!r}.")
    check_nonnegative(j, "j")
    if k == 1:
        return counted_congruent_closed((1, d), d, n, j)
    lcm_minus = lcm_of(d ** i - 1 for i in range(1, k + 1))
    modulus = d * lcm_minus
    coordinates = tuple(
        tuple(d * (d ** i - 1) * jj for jj in range(lcm_minus // (d ** i - 1)))
        for i in range(1, k + 1)
    )
    box = box_sums(coordinates, modulus)
    numerator = _counted_numerator(box, k - 1, dary_parts(d, k), d, n, j)
    value = exact_quotient(
        numerator,
        modulus ** (k - 1) * factorial(k - 1),
        f"d-ary weighted closed form d={d}, k={k}, n={n}, j={j}",
    )
    return FormulaResult(Fraction(value), AS_PRINTED, CONGRUENT_COUNTED_NOTE)
