"""Re-check the stored tables and group primes by L(p^2) / L(p)."""

from sqcycles import harness

for name in harness.FIXTURE_NAMES:
    report = harness.check_fixture(name)
    status = "ok" if report.passed else "MISMATCH"
    print(f"{name:16s} {report.checked:3d} rows  {status}")

print("\nPrimes below 360 grouped by k, where k L(p^2) = (p - 1) L(p):")
for k, primes in harness.classify_sweep(360).items():
    print(f"  k = {k:3d}: {primes}")

report = harness.sweep(1, 5000)
print(f"\nformula against oracle on 1..5000: {report.checked} moduli, {len(report.mismatches)} mismatches")
