"""Enumerate every squaring cycle for a handful of moduli."""

from sqcycles.graph import cycle_period, enumerate_cycles, largest_cycles, trajectory

for m in (99, 121, 999):
    s = enumerate_cycles(m, elements=True)
    lengths = sorted(c.length for c in s.cycles)
    print(f"m = {m}: {len(s.cycles)} cycles, {s.on_cycle_count} residues on cycles, lengths {lengths}")
    for c in largest_cycles(m):
        print(f"  longest: {list(c.elements)}")

print("\nA single residue can be followed without building the whole graph.")
big = 65537**2
print(f"  starting at 65536 mod {big}: period {cycle_period(65536, big)}")
print(f"  first steps: {trajectory(65536, big, 4)}")
