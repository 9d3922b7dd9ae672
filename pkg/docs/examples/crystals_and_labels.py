"""
Crystals of multipartitions
===========================
"""

from klrdecomp import crystal
from klrdecomp.combinat import LevelData, Multipartition

L = LevelData(2, (2, 0))
empty = Multipartition.empty(2)

# the reduced 0-signature of the empty bipartition: two addable 0-nodes, nothing cancels
signs, nodes, eps, phi = crystal.reduced_signature(L, empty, 0)
print(signs, eps, phi)

lam = crystal.crystal_f(L, empty, 0)
print("f_0 ∅ =", lam)
print("e_0 back:", crystal.crystal_e(L, lam, 0))

# the component of the empty multipartition, size by size
for n in range(5):
    print(n, [str(m) for m in crystal.restricted_of_size(L, n)])

# the primed crystal reads nodes in the opposite order; the bijection matches the two labellings
for mu in crystal.restricted_of_size(L, 3):
    print(mu, "->", crystal.prime_bijection(L, mu))

# e = 0 at level two: restricted means interleaving
L0 = LevelData(0, (2, 0))
print(all(crystal.is_interleaving(L0, m) for m in crystal.restricted_of_size(L0, 4)))

# graphviz source for a small crystal
print(crystal.edges_to_dot(crystal.crystal_edges(LevelData(3, (0,)), 3)))
