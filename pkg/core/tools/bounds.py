"""
Counting Bounds

This module provides exact integer evaluations of the counting inequalities used to
limit the field sizes for which SL_2(5)-type groups can have no regular orbit on 1-spaces:

    60 * sum over primes s | r of (q^(1/s) + 1)  >=  q - 62

together with its polynomial reduction 120 y^3 + 60 y^2 + 242 >= y^6 at q = y^6.
All roots are exact integer roots; nothing is evaluated in floating point.
"""

import logging
from typing import Dict, List

from sympy import integer_nthroot, primefactors, primerange

from core.errors import InvalidArgumentError

logger = logging.getLogger("core.tools.bounds")

# Elements fixing a 1-space, counted over the nontrivial cyclic subgroups of A_5
FIXED_SPACE_SLACK = 62
A5_ORDER = 60


def exact_root(q: int, s: int) -> int:
    """q^(1/s); raises InvalidArgumentError when q is not a perfect s-th power."""
    root, exact = integer_nthroot(q, s)
    if not exact:
        raise InvalidArgumentError(f"{q} is not a perfect {s}-th power")
    return int(root)


def ineq2_lhs(q: int, r: int) -> int:
    """60 * sum over primes s | r of (q^(1/s) + 1)."""
    return A5_ORDER * sum(exact_root(q, s) + 1 for s in primefactors(r))


def ineq2_holds(q: int, r: int) -> bool:
    """True iff the subfield-counting inequality holds for q and r."""
    if r < 2:
        raise InvalidArgumentError("the subfield inequality needs r > 1")
    return ineq2_lhs(q, r) >= q - FIXED_SPACE_SLACK


def poly_y6_holds(y: int) -> bool:
    return 120 * y ** 3 + 60 * y ** 2 + 242 >= y ** 6


def poly_y6_scan(lo: int = 7, hi: int = 200) -> Dict[str, object]:
    """
    Evaluate the degree-six polynomial inequality on lo..hi.

    Beyond y = 7 the right side grows faster on every step (y^6 more than doubles
    while the left side grows by less than a factor 2), so the scan plus that
    monotonicity settles all y >= lo.
    """
    failing = [y for y in range(lo, hi + 1) if not poly_y6_holds(y)]
    largest = max((y for y in range(1, hi + 1) if poly_y6_holds(y)), default=0)
    return {
        "false_for_all": len(failing) == hi - lo + 1,
        "largest_y_holding": largest,
        "value_at_lo": [120 * lo ** 3 + 60 * lo ** 2 + 242, lo ** 6],
    }


def ineq2_6r_holds(y: int) -> bool:
    """6 | r at q = y^6: 2(q^(1/2) + 1) + (q^(1/3) + 1) >= (q - 62)/60, cleared of denominators."""
    q = y ** 6
    return A5_ORDER * (2 * (exact_root(q, 2) + 1) + exact_root(q, 3) + 1) >= q - FIXED_SPACE_SLACK


def ineq2_6r_scan(lo: int = 7, hi: int = 200) -> Dict[str, object]:
    """The 6 | r reduction on lo..hi; it is the polynomial inequality in disguise."""
    failing = [y for y in range(lo, hi + 1) if not ineq2_6r_holds(y)]
    agrees = all(ineq2_6r_holds(y) == poly_y6_holds(y) for y in range(1, hi + 1))
    return {"fails_for_all": len(failing) == hi - lo + 1, "checked": hi - lo + 1, "matches_polynomial": agrees}


def ineq2_hcf2_holds(q: int) -> bool:
    """2(q^(1/2) + 1) >= (q - 62)/60, the case where two subfield counts coincide."""
    return 2 * A5_ORDER * (exact_root(q, 2) + 1) >= q - FIXED_SPACE_SLACK


def ineq2_hcf2_max(limit: int = 10_000) -> Dict[str, int]:
    """Largest sqrt(q) with 2(sqrt(q) + 1) >= (q - 62)/60, scanning perfect squares."""
    largest = max(y for y in range(1, limit + 1) if ineq2_hcf2_holds(y * y))
    return {"max_sqrt_q": largest, "max_q": largest * largest}


def ineq2_survivors(lo: int = 61, hi: int = 10 ** 6) -> List[int]:
    """
    Prime powers q = p^a with p > 5, q = +-1 mod 5 and lo < q <= hi for which some
    r | a with r > 1 satisfies the subfield inequality, ascending.
    """
    survivors = []
    for p in primerange(7, integer_nthroot(hi, 2)[0] + 1):
        q, a = p * p, 2
        while q <= hi:
            if q > lo and q % 5 in (1, 4):
                if any(ineq2_holds(q, r) for r in range(2, a + 1) if a % r == 0):
                    survivors.append(q)
            q, a = q * p, a + 1
    survivors.sort()
    logger.debug(f"{len(survivors)} prime powers survive the subfield inequality")
    return survivors


BOUNDS = {
    "poly_y6": poly_y6_scan,
    "ineq2_6r": ineq2_6r_scan,
    "ineq2_hcf2": ineq2_hcf2_max,
    "ineq2_survivors": lambda: {"survivors": ineq2_survivors()},
}
