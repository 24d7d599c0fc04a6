"""
Stable cohomology dimensions h^j_st(-n,n) of the line bundle O(-n,n) on the
flag variety in characteristic p.

The ground truth is the listing of A_{p,n}: tuples (a_0, ..., a_k) with
sum a_i p^i = n and every a_i = 0 or 1 (mod p), each contributing t^Phi(a) to
the Poincare polynomial. The closed-form route goes through the weighted
d-ary counts in closed_forms.py and inherits their as-printed caveat.
"""
from collections import Counter
from dataclasses import dataclass
from math import factorial

from congruent_partitions.closed_forms import (
    box_numerator,
    box_sums,
    counted_closed,
    dary_closed,
    dary_counted_closed,
    exact_quotient,
)
from congruent_partitions.helper_functions import (
    check_nonnegative,
    check_prime,
    dary_parts,
    log_floor,
)
from congruent_partitions.oracle import enumerate_solutions, weight

METHODS = ("enumeration", "closed-form")


@dataclass(frozen=True)
class CohomProfile:
    p: int
    n: int
    k: int
    h: dict
    method: str
    as_printed: bool = False
    notes: tuple = ()

    @property
    def total(self):
        return sum(self.h.values())


def check_method(method):
    """
    Check that method is either enumeration or closed-form
    """
    if method not in METHODS:
        raise ValueError(
            f"Error: unknown method {method!r}. Please pass 'enumeration' or 'closed-form'."
        )
    return method


def phi(p, a):
    """
    Cohomological degree of a tuple of A_{p,n}

    Inputs:
    p   - characteristic
    a   - tuple (a_0, ..., a_k)

    Outputs:
    j   - sum of a_i - (p-2) floor(a_i/p)
    """
    return sum(weight(a_i, p) for a_i in a)


def ap_set(p, n):
    """
    Lists A_{p,n} in lexicographic order

    Inputs:
    p   - prime characteristic
    n   - nonnegative integer

    Outputs:
    tuples - list of (a_0, ..., a_k) with k = floor(log_p n)
    """
    p = check_prime(p)
    check_nonnegative(n, "n")
    return enumerate_solutions(dary_parts(p, log_floor(p, n)), p, n)


def _closed_value(p, k, n, j):
    if p == 2:
        return counted_closed(dary_parts(2, k), n, j)
    return dary_counted_closed(p, k, n, j)


def stable_profile(p, n, method="enumeration"):
    """
    The map j -> h^j_st(-n,n), nonzero entries only

    Inputs:
    p       - prime characteristic
    n       - nonnegative integer
    method  - 'enumeration' (Phi over A_{p,n}) or 'closed-form' (weighted
              closed forms, evaluated for 1 <= j <= n)

    Outputs:
    profile - CohomProfile
    """
    p = check_prime(p)
    check_nonnegative(n, "n")
    check_method(method)
    k = log_floor(p, n)

    if method == "enumeration":
        degrees = Counter(phi(p, a) for a in ap_set(p, n))
        return CohomProfile(p, n, k, dict(sorted(degrees.items())), method)

    if n == 0:
        return CohomProfile(p, n, k, {0: 1}, method)
    if k == 0:
        # one part only: A_{p,n} is {(1)} for n = 1 and empty for 1 < n < p
        h = {1: 1} if n == 1 else {}
        return CohomProfile(
            p, n, k, h, method, notes=("single-part case evaluated directly",)
        )

    h = {}
    notes = set()
    for j in range(1, n + 1):
        result = _closed_value(p, k, n, j)
        if result.value:
            h[j] = int(result.value)
        if result.note:
            notes.add(result.note)
    return CohomProfile(p, n, k, h, method, True, tuple(sorted(notes)))


def binary_total_closed(n):
    """
    number of binary partitions of n by the closed form with modulus 2^k,
    box 0 <= j_i < 2^(k-i+1) with weights 2^(i-1) and normalization 1/k!
    """
    check_nonnegative(n, "n")
    k = log_floor(2, n)
    if k == 0:
        return 1
    modulus = 2 ** k
    coordinates = tuple(
        tuple(2 ** (i - 1) * j for j in range(2 ** (k - i + 1))) for i in range(1, k + 1)
    )
    box = box_sums(coordinates, modulus)
    numerator = box_numerator(box.buckets.get(n % modulus, ()), n, modulus, k)
    return exact_quotient(
        numerator, modulus ** k * factorial(k), f"binary partition closed form n={n}"
    )


def h_total(p, n, method="enumeration"):
    """
    Total dimension h_st(-n,n) = |A_{p,n}|

    Inputs:
    p       - prime characteristic
    n       - nonnegative integer
    method  - 'enumeration' or 'closed-form' (d-ary closed form with modulus
              p^(k+1))

    Outputs:
    total   - int
    """
    p = check_prime(p)
    check_nonnegative(n, "n")
    check_method(method)
    if method == "enumeration":
        return len(ap_set(p, n))
    k = log_floor(p, n)
    if k == 0:
        return 1 if n in (0, 1) else 0
    return dary_closed(p, k, n)


def profile_coefficients(profile):
    """
    dense coefficient list [h^0, h^1, ..., h^max] of a profile
    """
    if not profile.h:
        return [0]
    coeffs = [0] * (max(profile.h) + 1)
    for j, count in profile.h.items():
        coeffs[j] = count
    return coeffs


def poincare_polynomial(p, n):
    """
    Coefficients of sum_j h^j_st(-n,n) t^j, constant term first, taken from
    the enumeration profile
    """
    return profile_coefficients(stable_profile(p, n, "enumeration"))


def format_poincare(coeffs, variable="t"):
    """
    Render a coefficient list as 't + t^2 + t^5 + t^6'
    """
    terms = []
    for j, count in enumerate(coeffs):
        if not count:
            continue
        if j == 0:
            terms.append(str(count))
            continue
        power = variable if j == 1 else f"{variable}^{j}"
        terms.append(power if count == 1 else f"{count}{power}")
    return " + ".join(terms) if terms else "0"
