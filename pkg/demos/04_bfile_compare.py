"""Compare L(p) against an OEIS-style b-file (index value per line)."""

import sys
import tempfile
from pathlib import Path

from sqcycles import harness
from sqcycles.formulas import l_prime

if len(sys.argv) > 1:
    path = Path(sys.argv[1])
else:
    # no file given: write a small one from the formula itself
    path = Path(tempfile.mkdtemp()) / "b-sample.txt"
    lines = [f"{i} {l_prime(harness.nth_prime(i)).value}" for i in range(1, 101)]
    path.write_text("# L(p) for the first 100 primes\n" + "\n".join(lines) + "\n")

report = harness.oeis_compare(path)
print(f"{path}: {report.checked} entries, {'agree' if report.passed else 'disagree'}")
for note in report.notes:
    print(" ", note)

shifted = harness.oeis_compare(path, offset=0)
print(f"with offset 0 instead: {len(shifted.mismatches)} mismatches; {shifted.notes}")
