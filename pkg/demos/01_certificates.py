"""
Exact values and the certificates behind them
=============================================

"""

from fractions import Fraction

from cofrac import chi_f, gen_cycle, gen_star, verify_cover, verify_labeling, z_f
from cofrac.solver import COCOLORING, FractionalCover

# The 5-cycle needs 5/2 colours fractionally: weight 1/2 on each of its
# five maximal independent pairs.
C5 = gen_cycle(5)
cert = chi_f(C5)
print("chi_f(C5) =", cert.value)
for s, w in cert.cover.entries:
    print("   ", s.kind, s.members, "weight", w)

# The dual labeling proves nothing smaller works: every independent set
# carries label sum at most 1, and the labels add up to the same 5/2.
print("labels:", cert.dual.to_json(), "sum", cert.dual.weight)

# Allowing cliques in the cover can only help. For a star it helps a lot.
star = gen_star(3)
print("chi_f(K_1,3) =", chi_f(star).value, " z_f(K_1,3) =", z_f(star).value)

# Certificates are plain data, so anyone can re-check them. Halve one
# weight and the cover check says exactly which vertex went short.
zc = z_f(star)
broken = FractionalCover([(s, w / 2) for s, w in zc.cover.entries[:1]] + zc.cover.entries[1:], COCOLORING)
print(verify_cover(star, zc.cover), verify_cover(star, broken))

# A labeling that overloads a clique is rejected the same way.
bad = type(zc.dual)({0: Fraction(3, 4), 1: Fraction(1, 2)})
print(verify_labeling(star, bad, COCOLORING).reason)
