"""
What each doubling costs
========================

Each Cayley-Dickson doubling gives up a law: commutativity at the
quaternions, associativity at the octonions, the multiplicative norm at the
sedenions. Probes check basis elements first, then seeded random rationals.
"""

from octofano import Law, cd_multiply, find_zero_divisors, probe_law
from octofano.cayley_dickson import NAMES

for level, name in NAMES.items():
    verdicts = {law.value: probe_law(level, law, trials=20).holds for law in Law}
    print(f"{name:16s}", " ".join(f"{k}={'y' if v else 'n'}" for k, v in verdicts.items()))

# a failing probe carries a counterexample that can be recomputed
r = probe_law(3, Law.ASSOCIATIVE)
print("octonion associator witness:", ", ".join(map(str, r.counterexample)), "recheck:", r.recheck())

x, y = find_zero_divisors(4)
print(f"sedenion zero divisors: ({x})({y}) = {cd_multiply(x, y)}")
