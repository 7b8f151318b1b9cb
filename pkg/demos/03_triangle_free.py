"""
Triangle-free graphs, stars, and rounding a cocoloring
======================================================

"""

from cofrac.graph import gen_kneser, gen_star
from cofrac.harness import (
    check_theorem6,
    edge_cocover,
    ramsey_convert,
    triangle_free_sample,
)
from cofrac.solver import verify_cover

# On triangle-free graphs cliques are just edges, and they almost never
# beat independent sets. Stars with isolated vertices are the exception.
verdicts = {}
for G in triangle_free_sample(200, 8, seed=1):
    r = check_theorem6(G)
    verdicts[r.verdict] = verdicts.get(r.verdict, 0) + 1
print(verdicts)
print(check_theorem6(gen_star(4, 2)).to_json())

# Any cocoloring can be turned into a colouring at bounded extra cost.
# Start from the Petersen graph covered by its 15 edges at weight 1/3.
P = gen_kneser(5, 2)
cover = edge_cocover(P)
colouring, trace = ramsey_convert(P, cover)
print("input weight", cover.weight, "-> output weight", colouring.weight)
print("valid colouring:", bool(verify_cover(P, colouring)))

# The trace records how many independent triples each level gave up and
# what was carried upward; check() re-derives the bookkeeping.
print(trace.to_json())
print("accounting:", bool(trace.check()))
