"""
Counting subspaces with q-analogues
===================================

Gaussian binomials count the k-dimensional subspaces of GF(q)^n, and their
row sums are the Galois numbers. We check the counts by brute enumeration,
then confirm the q-exponential squared identity as truncated power series.
"""

from octofano import (
    build_lattice,
    enumerate_subspaces,
    galois_number,
    gaussian_binomial,
    verify_qexp_squared,
)

# the q-analogue of Pascal's triangle for q = 2
for n in range(6):
    row = [gaussian_binomial(n, k, 2) for k in range(n + 1)]
    print(f"n={n}: {row}  G={galois_number(n, 2)}")

# at q = 1 the ordinary binomials come back
print([gaussian_binomial(5, k, 1) for k in range(6)])

# enumerate the planes of V(3,2) by hand and compare with [3 choose 2]_2
planes = enumerate_subspaces(3, 2, 2)
print(len(planes), "planes, formula says", gaussian_binomial(3, 2, 2))
for p in planes:
    print("  ", sorted(p.point_strings()))

# the whole lattice L(3,2) has 1 + 7 + 7 + 1 = 16 elements
lattice = build_lattice(3, 2)
print([len(level) for level in lattice.levels], "covers:", len(lattice.covers))

# exp_q(x)^2 against the Galois-number series, up to x^12
for q in (1, 2, 3, 5):
    report = verify_qexp_squared(q, 12)
    print(f"q={q}: identity holds through degree {report.degree}: {report.holds}")
