"""
Characters, degrees and graded dimensions
=========================================
"""

from klrdecomp import canbase, tableaux
from klrdecomp.combinat import ContentVector, LevelData, Multipartition

L = LevelData(2, (0,))
lam = Multipartition([[2, 1]])

for T in tableaux.standard_tableaux(lam):
    print(tableaux.residue_sequence(L, T), "degree", tableaux.degree(L, T))

ch = tableaux.specht_character(L, lam)
print(ch)

# the graded dimension of a block, computed two ways
alpha = ContentVector({0: 2, 1: 2})
for (i, j), (first, second) in sorted(tableaux.graded_dim_table(L, alpha).items()):
    print(i, j, first, "|", second)
print("total:", tableaux.graded_dim_total(L, alpha))

# simple characters come from inverting the restricted part of the matrix
for mu, chD in canbase.irreducible_characters(L, alpha).items():
    seq, runs, target = canbase.extremal_sequence(L, chD)
    print(mu, chD, "extremal", seq, canbase.extremal_factor(runs))
