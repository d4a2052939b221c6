"""Walk through the closed forms for a few moduli and compare with the oracle."""

from sqcycles import formulas as fm
from sqcycles.graph import l_bruteforce
from sqcycles.numcore import factorize, odd_part

print("Primes: L(p) is the order of 2 modulo the odd part of p - 1.")
for p in (7, 23, 47, 107, 167):
    print(f"  p = {p:3d}  odd part of p-1 = {odd_part(p - 1):3d}  L(p) = {fm.l_prime(p).value}")

print("\nSquares pick up the order of 2 modulo p itself.")
for p in (11, 47, 107):
    v = fm.l_prime_square(p).value
    print(f"  L({p}^2) = {v}  oracle says {l_bruteforce(p * p)}")

print("\nHigher powers grow by a factor of p at each step.")
for n in range(2, 7):
    print(f"  L(5^{n}) = {fm.l_prime_power(5, n).value}")

print("\nThe growth stalls once at 1093, where 2^1092 = 1 mod 1093^2.")
print(f"  L(1093^2) = {fm.l_prime_power(1093, 2).value}, L(1093^3) = {fm.l_prime_power(1093, 3).value}")

print("\nComposite moduli take the lcm of their prime-power parts.")
for m in (99, 675, 999, 3375):
    parts = " * ".join(f"{p}^{e}" for p, e in factorize(m))
    print(f"  L({m}) = {fm.l_of(m).value}  ({parts})")
