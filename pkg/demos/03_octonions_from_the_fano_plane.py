"""
Octonion multiplication from an oriented Fano plane
===================================================

Label the seven imaginary units by the nonzero vectors of GF(2)^3, orient
each line, and read off a multiplication table. Whether the result is really
the octonions is decided by expanding N(xy) - N(x)N(y) symbolically.
"""

from octofano import (
    FANO_LABELING,
    fano_lines,
    fano_table,
    find_isomorphism,
    quaternion_subalgebra,
    sweep_orientations,
    validate_table,
)

table = fano_table()
print(table.render())
print("labeling:", FANO_LABELING)

report = validate_table(table)
print("anticommutative:", report.anticommutative)
print("units square to -1:", report.units_square_to_minus_one)
print("norm composing:", report.norm_composing)
print("alternative:", report.alternative)

# every line spans a copy of the quaternions
for line in fano_lines(table):
    sub = quaternion_subalgebra(table, line)
    print(line, "closed:", sub.closed, "associative:", sub.associative)

# a signed permutation of units carries this table onto the doubling table
print("isomorphism:", find_isomorphism(table))

# flipping line orientations: only some of the 128 choices compose
results = sweep_orientations()
print(sum(ok for _, ok in results), "of", len(results), "orientations validate")
