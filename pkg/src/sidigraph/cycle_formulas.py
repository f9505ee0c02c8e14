"""Closed-form energy and iota energy of signed directed cycles.

Energy of a cycle on n vertices (n >= 2):

    positive cycle: 2*cot(pi/n)   n = 0 mod 4
                    2*csc(pi/n)   n = 2 mod 4
                    csc(pi/2n)    n odd
    negative cycle: csc and cot swapped in the even cases, same odd case.

Iota energy:

    positive cycle: 2*cot(pi/n)   n even
                    cot(pi/2n)    n odd
    negative cycle: 2*csc(pi/n)   n even
                    cot(pi/2n)    n odd

Everything is evaluated directly in double precision; the gaps these
values must resolve are orders of magnitude above rounding error for any
practical cycle length.
"""
from __future__ import annotations

import math

from .graphs import CyclePair, check_sign


def _two_cot(n: int) -> float:
    # cot(pi/2) is exactly 0; special-cased so C2+ values come out exact
    if n == 2:
        return 0.0
    return 2.0 / math.tan(math.pi / n)


def _two_csc(n: int) -> float:
    return 2.0 / math.sin(math.pi / n)


def energy_cycle(n: int, sign: int) -> float:
    """Energy (sum of |Re| of eigenvalues) of the cycle C_n with this sign."""
    check_sign(sign)
    if n < 2:
        raise ValueError(f"cycle length must be >= 2, got {n}")
    if n % 2 == 1:
        return 1.0 / math.sin(math.pi / (2 * n))
    if (n % 4 == 0) == (sign == 1):
        return _two_cot(n)
    return _two_csc(n)


def iota_energy_cycle(n: int, sign: int) -> float:
    """Iota energy (sum of |Im| of eigenvalues) of the cycle C_n."""
    check_sign(sign)
    if n < 2:
        raise ValueError(f"cycle length must be >= 2, got {n}")
    if n % 2 == 1:
        return 1.0 / math.tan(math.pi / (2 * n))
    return _two_cot(n) if sign == 1 else _two_csc(n)


def pair_iota(pair: CyclePair) -> float:
    """Iota energy of a two-cycle pair: the sum over its cycles."""
    return iota_energy_cycle(pair.c1.length, pair.c1.sign) + iota_energy_cycle(
        pair.c2.length, pair.c2.sign
    )


def energy_case_label(n: int, sign: int) -> str:
    """Human-readable formula branch used by energy_cycle."""
    check_sign(sign)
    if n % 2 == 1:
        return f"csc(pi/{2 * n})"
    if (n % 4 == 0) == (sign == 1):
        return f"2*cot(pi/{n})"
    return f"2*csc(pi/{n})"


def iota_case_label(n: int, sign: int) -> str:
    """Human-readable formula branch used by iota_energy_cycle."""
    check_sign(sign)
    if n % 2 == 1:
        return f"cot(pi/{2 * n})"
    return f"2*cot(pi/{n})" if sign == 1 else f"2*csc(pi/{n})"
