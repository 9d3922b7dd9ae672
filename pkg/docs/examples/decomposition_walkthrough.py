"""
Graded decomposition numbers, step by step
==========================================

From a crystal string to a column of the decomposition matrix.
"""

from klrdecomp import combinat, crystal, fock, canbase
from klrdecomp.combinat import ContentVector, LevelData, Multipartition

# level one, e = 2: the symmetric group in characteristic two
L = LevelData(2, (0,))
alpha = ContentVector({0: 2, 1: 2})  # blocks are indexed by how many nodes of each residue

block = combinat.enumerate_multipartitions(L, alpha=alpha)
print("block:", ", ".join(str(lam) for lam in block))

rows = crystal.restricted_set(L, alpha)  # these label the simple modules
print("restricted:", ", ".join(str(lam) for lam in rows))

# every restricted label has a string of crystal moves from the empty multipartition
lam = rows[-1]
word = crystal.crystal_string(L, lam)
print(f"string for {lam}:", word)

# replaying the string as divided powers on the vacuum gives a bar-invariant vector
v = fock.apply_word(fock.FockVector.vacuum(L), word)
print("monomial:", v)

# reduction turns monomials into the canonical basis
for c in canbase.canonical_basis(L, alpha):
    print(f"T{c.label} =", c.vector)

d = canbase.decomposition_matrix(L, alpha)
print()
print(d.to_text())

# the matrix is unitriangular and every off-diagonal entry is in qZ[q]
print("violations:", d.violations())

# a second level: two charges, same machinery
L2 = LevelData(3, (0, 1))
d2 = canbase.decomposition_matrix(L2, ContentVector({0: 1, 1: 2, 2: 2}))
print(d2.to_text())
