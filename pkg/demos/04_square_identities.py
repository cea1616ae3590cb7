"""
The 2-, 4- and 8-square identities by expansion
===============================================

Multiplying two generic elements with symbolic coefficients gives bilinear
forms z_k. When the norm is multiplicative the product of sums of squares is
the sum of the z_k squared. The same code exposes the failure at n = 16.
"""

from octofano import derive_identity, emit_identity, fano_table, verify_identity

print(emit_identity(derive_identity(2)))
print()
print(emit_identity(derive_identity(4)))

eight = derive_identity(8)
print("8-square residual is zero:", verify_identity(eight))

# the Fano-coded table gives a different but equally valid 8-square identity
fano8 = derive_identity(8, fano_table())
print("Fano 8-square residual is zero:", verify_identity(fano8))
print(emit_identity(fano8, "json")[:120], "...")

sixteen = derive_identity(16)
print("16-square residual terms:", len(sixteen.residual))
