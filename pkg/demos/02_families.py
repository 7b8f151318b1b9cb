"""
Graph families and what they do to the fractional parameters
============================================================

"""

from fractions import Fraction

from cofrac import (
    chi_f,
    complement,
    disjoint_union,
    gen_complete,
    gen_cycle,
    gen_kneser,
    gen_mycielski,
    gen_random,
    stats,
    z_f,
)

# Kneser graphs: b-subsets of an a-set, adjacent when disjoint.
# K(5,2) is the Petersen graph.
for a, b in [(5, 2), (6, 2), (7, 3)]:
    G = gen_kneser(a, b)
    print(f"K({a},{b}): n={G.n:2d} m={G.m:3d} chi_f={chi_f(G).value}")

# The Mycielski construction keeps graphs triangle-free while pushing
# chi_f from c to c + 1/c.
G = gen_complete(2)
for _ in range(3):
    c = chi_f(G).value
    G = gen_mycielski(G)
    print(f"n={G.n:2d} chi_f={chi_f(G).value} (c + 1/c = {c + 1 / c})")

# z_f does not notice complementation: cliques and independent sets swap.
G = gen_random(11, Fraction(1, 2), seed=4)
print("z_f(G) =", z_f(G).value, " z_f(complement) =", z_f(complement(G)).value)

# Taking k disjoint copies, with k at least the clique number, makes
# cliques useless, so z_f rises to chi_f.
K3 = gen_complete(3)
print("z_f(K3) =", z_f(K3).value, " z_f(3 K3) =", z_f(disjoint_union(K3, 3)).value)
C5 = gen_cycle(5)
print("z_f(2 C5) =", z_f(disjoint_union(C5, 2)).value, " chi_f(C5) =", chi_f(C5).value)
print("stats of 3K3:", stats(disjoint_union(K3, 3)))
