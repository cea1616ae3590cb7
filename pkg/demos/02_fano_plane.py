"""
The Fano plane as PG(2,2)
=========================

Points of PG(2,2) are the lines through the origin of GF(2)^3 and its lines
are the planes. We rebuild the incidence structure, test the projective
plane axioms, and exhibit the point-line duality explicitly.
"""

from octofano import duality_check, lattice_to_dot, build_lattice, plane_axioms, projective_space

fano = projective_space(2, 2)
for i, line in enumerate(fano.line_labels(), start=1):
    print(f"L{i} = {{{', '.join(line)}}}")

for name, ok in plane_axioms(fano).items():
    print(f"{name:32s} {ok}")

# every point becomes the pencil of three lines through it
report = duality_check(fano)
print("self-dual:", report.is_self_dual_plane)
print("correlation preserves incidence:", report.correlation_preserves_incidence)
for point, pencil in sorted(report.pencils.items()):
    print(f"  {fano.point_label(point)} -> lines {list(pencil)}")

# larger planes work the same way: PG(2,3) has 13 points
print(len(projective_space(2, 3).points), "points in PG(2,3)")

# the Hasse diagram of L(3,2), ready for `dot -Tsvg`
print(lattice_to_dot(build_lattice(3, 2))[:200], "...")
