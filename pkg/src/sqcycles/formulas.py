"""Closed forms for the longest squaring cycle L(m).

The squaring map acts on a unit of odd order ``d`` with period ``ord_d(2)``,
so everything here reduces to multiplicative orders of 2 and an lcm over
prime-power components.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from . import numcore as nc

# Known Fermat primes 2**(2**k) + 1, k = 0..4.
FERMAT_PRIMES = (3, 5, 17, 257, 65537)


class Route(str, enum.Enum):
    PRIME = "prime"
    PRIME_SQUARE = "prime-square"
    PRIME_POWER = "prime-power"
    COMPOSITE_LCM = "composite-lcm"
    FERMAT_SPECIAL = "fermat-special"
    BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class LValue:
    modulus: int
    value: int
    route: Route


@dataclass(frozen=True)
class PrimeClassRecord:
    p: int
    l_p: int
    l_p2: int
    k: int


@functools.lru_cache(maxsize=1 << 16)
def order_of_two(d: int) -> int:
    """``ord_d(2)`` for odd ``d``, with ``ord_1(2) = 1``."""
    return nc.multiplicative_order(2, d)


def _require_prime(p: int) -> None:
    if not nc.is_prime(p):
        raise ValueError(f"{p} is not prime")


def l_prime(p: int) -> LValue:
    _require_prime(p)
    value = 1 if p == 2 else order_of_two(nc.odd_part(p - 1))
    return LValue(p, value, Route.PRIME)


def l_prime_square(p: int) -> LValue:
    _require_prime(p)
    if p == 2:
        return LValue(4, 1, Route.PRIME_SQUARE)
    value = nc.lcm(l_prime(p).value, order_of_two(p))
    return LValue(p * p, value, Route.PRIME_SQUARE)


@functools.lru_cache(maxsize=1 << 16)
def l_prime_power(p: int, n: int) -> LValue:
    """L(p**n).

    Odd units mod ``p**n`` have odd orders dividing ``odd_part(p-1) * p**(n-1)``,
    so the answer is ``lcm(L(p), ord_{p**(n-1)}(2))``.  Away from base-2
    Wieferich primes this equals ``p**(n-2) * L(p**2)`` for ``n >= 2``.
    """
    _require_prime(p)
    if n < 1:
        raise ValueError("exponent must be >= 1")
    m = p**n
    if m > nc.U64_MAX:
        raise OverflowError(f"{p}**{n} does not fit in 64 bits")
    if n == 1:
        return l_prime(p)
    if n == 2:
        return l_prime_square(p)
    if p == 2:
        return LValue(m, 1, Route.PRIME_POWER)
    value = nc.lcm(l_prime(p).value, order_of_two(p ** (n - 1)))
    return LValue(m, value, Route.PRIME_POWER)


def ladder_value(p: int, n: int) -> int:
    """The scaling law ``p**(n-2) * L(p**2)`` for ``n >= 2`` (odd ``p``)."""
    if n < 2:
        raise ValueError("ladder needs n >= 2")
    if p == 2:
        return 1
    return p ** (n - 2) * l_prime_square(p).value


def l_of(m: int) -> LValue:
    """L(m) as the lcm of the prime-power components."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    fac = nc.factorize(m)
    if len(fac) == 1:
        (p, e), = fac.factors
        return l_prime_power(p, e)
    value = nc.lcm_all(l_prime_power(p, e).value for p, e in fac)
    return LValue(m, value, Route.COMPOSITE_LCM)


def l_carmichael(m: int) -> int:
    """L(m) as ``ord(2)`` modulo the odd part of the unit-group exponent.

    Independent of the prime-power dispatch in :func:`l_of`; used by formula-only sweeps.
    """
    return order_of_two(nc.odd_part(nc.carmichael_lambda(m)))


def _odd_divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in nc.factorize(nc.odd_part(n)):
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return divs


def l_prime_by_divisors(p: int) -> int:
    """L(p) as the maximum of ``ord_d(2)`` over odd divisors ``d`` of ``p - 1``."""
    _require_prime(p)
    return max(order_of_two(d) for d in _odd_divisors(p - 1))


def l_prime_square_by_divisors(p: int) -> int:
    """L(p**2) as the maximum of ``ord_d(2)`` over odd divisors of ``p*(p-1)``."""
    _require_prime(p)
    if p == 2:
        return 1
    return max(order_of_two(d) for d in _odd_divisors(p * (p - 1)))


def _fermat_k(k: int) -> int:
    if not 0 <= k <= 4:
        raise ValueError(f"no known Fermat prime with k={k}; only 0..4 are supported")
    return FERMAT_PRIMES[k]


def fermat_l(k: int) -> int:
    """L(F_k) for a Fermat prime: always 1."""
    _fermat_k(k)
    return 1


def fermat_l_square(k: int) -> int:
    """L(F_k**2) for a Fermat prime: ``(F_k - 1) / 2**(2**k - k - 1) = 2**(k+1)``."""
    p = _fermat_k(k)
    value, rem = divmod(p - 1, 2 ** (2**k - k - 1))
    assert rem == 0 and value == 2 ** (k + 1)
    return value


@dataclass(frozen=True)
class TheoremCheck:
    lhs: bool
    rhs: bool


def theorem_43_check(p: int) -> TheoremCheck:
    """Both sides of: L(p) == (p-3)/2  iff  q = (p-1)/2 is prime with 2 generating (Z/q)*.

    Only defined for odd primes that are not Fermat primes.
    """
    _require_prime(p)
    if p == 2:
        raise ValueError("p must be odd")
    if nc.fermat_index(p) is not None:
        raise ValueError(f"{p} is a Fermat prime")
    lhs = 2 * l_prime(p).value == p - 3
    q = (p - 1) // 2
    rhs = nc.is_prime(q) and nc.is_primitive_root(2, q)
    return TheoremCheck(lhs, rhs)


def bound_45_check(p: int) -> bool:
    """Whether L(p**2) <= (p-1) * L(p)."""
    return l_prime_square(p).value <= (p - 1) * l_prime(p).value


def classify_ratio(p: int) -> PrimeClassRecord:
    """The integer k with ``k * L(p**2) == (p-1) * L(p)``.

    ``p = 2`` is accepted and lands in k = 1.
    """
    l_p = l_prime(p).value
    l_p2 = l_prime_square(p).value
    k, rem = divmod((p - 1) * l_p, l_p2)
    if rem or k < 1:
        raise ArithmeticError(
            f"ratio for p={p} is not a positive integer: (p-1)*{l_p} / {l_p2}"
        )
    return PrimeClassRecord(p, l_p, l_p2, k)
