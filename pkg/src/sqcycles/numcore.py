"""Exact modular arithmetic, primality, factorization and the residue predicates.

Every public function works on non-negative integers below 2**64.  Python
integers never overflow, so products are exact by construction; the 64-bit
ceiling is enforced explicitly instead so that results stay within the range
the rest of the package promises.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional

U64_MAX = 2**64 - 1

# Deterministic Miller-Rabin witness sets, keyed by the bound below which each is exact.
# The first twelve primes cover every n < 3.3e24, so all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (3_215_031_751, (2, 3, 5, 7)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
)

_TRIAL_LIMIT = 1000


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = _small_primes(_TRIAL_LIMIT)


def _check_u64(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")
    if n > U64_MAX:
        raise OverflowError(f"{name}={n} does not fit in 64 bits")


def _check_modulus(m: int) -> None:
    if m == 0:
        raise ValueError("modulus must be >= 1")
    _check_u64(m, "modulus")


# ---------------------------------------------------------------------------
# modular arithmetic


def mod_mul(a: int, b: int, m: int) -> int:
    """Return ``a*b mod m`` exactly for any 64-bit modulus."""
    _check_modulus(m)
    return (a % m) * (b % m) % m


def mod_pow(base: int, exp: int, m: int) -> int:
    """Return ``base**exp mod m``; ``mod_pow(x, 0, m) == 1 % m``."""
    _check_modulus(m)
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base % m, exp, m)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple, refusing results beyond 64 bits."""
    if a == 0 or b == 0:
        return 0
    a, b = abs(a), abs(b)
    result = a // math.gcd(a, b) * b
    if result > U64_MAX:
        raise OverflowError(f"lcm({a}, {b}) = {result} exceeds 64 bits")
    return result


def lcm_all(values) -> int:
    """Fold :func:`lcm` over ``values``; the empty fold is 1, zeros are rejected."""
    acc = 1
    for v in values:
        if v == 0:
            raise ValueError("lcm_all does not accept 0")
        acc = lcm(acc, v)
    return acc


# ---------------------------------------------------------------------------
# primality and factorization


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for every 64-bit ``n``."""
    _check_u64(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    bases = _MR_BASES
    for bound, tier in _MR_TIERS:
        if n < bound:
            bases = tier
            break
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        batch = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += batch
            r *= 2
        if g == n:
            # batched product hit zero; redo one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``(prime, exponent)`` pairs in increasing prime order."""

    factors: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        value = 1
        for p, e in self.factors:
            value *= p**e
        return value

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def _factor_into(n: int, counts: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    d = _pollard_brent(n, rng)
    _factor_into(d, counts, rng)
    _factor_into(n // d, counts, rng)


@functools.lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Factor a 64-bit integer: trial division by small primes, then Pollard-Brent."""
    if n == 0:
        raise ValueError("cannot factorize 0")
    _check_u64(n)
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        # fixed seed keeps the splitter reproducible run to run
        _factor_into(n, counts, random.Random(n))
    return Factorization(tuple(sorted(counts.items())))


def euler_phi(n: int) -> int:
    """Totient from the factorization: multiplicative, ``(p-1)*p**(e-1)`` per prime power."""
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def _phi_factors(n: int) -> dict[int, int]:
    """Factorization of ``euler_phi(n)`` assembled from the factors of ``n``."""
    out: dict[int, int] = {}
    for p, e in factorize(n):
        if e > 1:
            out[p] = out.get(p, 0) + e - 1
        for q, f in factorize(p - 1):
            out[q] = out.get(q, 0) + f
    return out


def odd_part(n: int) -> int:
    """Largest odd divisor of ``n``."""
    if n < 1:
        raise ValueError("odd_part needs n >= 1")
    return n >> ((n & -n).bit_length() - 1)


def two_adic_valuation(n: int) -> int:
    if n < 1:
        raise ValueError("valuation needs n >= 1")
    return (n & -n).bit_length() - 1


def carmichael_lambda(n: int) -> int:
    """Exponent of the unit group modulo ``n``."""
    parts = []
    for p, e in factorize(n):
        if p == 2:
            parts.append(1 if e == 1 else 2 if e == 2 else 2 ** (e - 2))
        else:
            parts.append((p - 1) * p ** (e - 1))
    return lcm_all(parts)


# ---------------------------------------------------------------------------
# orders and residue predicates


def _require_unit(a: int, m: int) -> int:
    _check_modulus(m)
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    return a


def multiplicative_order(a: int, m: int) -> int:
    """Least ``e >= 1`` with ``a**e == 1 (mod m)``; the order modulo 1 is 1.

    Starts from ``euler_phi(m)`` and strips prime factors while the power
    still reduces to 1, so the cost is polylogarithmic in ``m``.
    """
    a = _require_unit(a, m)
    if m == 1:
        return 1
    phi_factors = _phi_factors(m)
    order = 1
    for q, f in phi_factors.items():
        order *= q**f
    for q in phi_factors:
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def is_quadratic_residue(a: int, p: int) -> bool:
    """Euler's criterion for an odd prime ``p`` not dividing ``a``."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if a % p == 0:
        raise ValueError(f"{p} divides {a}")
    return pow(a % p, (p - 1) // 2, p) == 1


def is_primitive_root(a: int, m: int) -> bool:
    a = _require_unit(a, m)
    return multiplicative_order(a, m) == euler_phi(m)


def fermat_index(p: int) -> Optional[int]:
    """``k`` when ``p == 2**(2**k) + 1`` is prime, otherwise ``None``."""
    if p < 3 or p > U64_MAX:
        return None
    e = p - 1
    if e & (e - 1):
        return None
    t = e.bit_length() - 1
    if t & (t - 1):
        return None
    if not is_prime(p):
        return None
    return t.bit_length() - 1


def has_primitive_root(m: int) -> bool:
    """True for m in {1, 2, 4, p**a, 2*p**a} with p an odd prime."""
    _check_modulus(m)
    if m in (1, 2, 4):
        return True
    if m % 4 == 0:
        return False
    if m % 2 == 0:
        m //= 2
    return len(factorize(m)) == 1


def count_dth_roots_of_unity(d: int, m: int) -> int:
    """Number of solutions of ``x**d == 1 (mod m)`` for a modulus with a primitive root."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if not has_primitive_root(m):
        raise ValueError(f"modulus {m} has no primitive root")
    return math.gcd(d, euler_phi(m))


def is_dth_power_residue(a: int, d: int, m: int) -> bool:
    """Whether ``x**d == a (mod m)`` is solvable, for a unit ``a`` and a cyclic unit group."""
    if d < 1:
        raise ValueError("d must be >= 1")
    a = _require_unit(a, m)
    if not has_primitive_root(m):
        raise ValueError(f"modulus {m} has no primitive root")
    phi = euler_phi(m)
    return pow(a, phi // math.gcd(d, phi), m) == 1 % m
