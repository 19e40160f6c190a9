# # Extremal joins and their quotient matrices
#
# Each extremal graph is a join K_s v (K_a u ...) whose distance matrix has a
# three-block equitable partition. The 3x3 quotient gives the spectral radius
# exactly as the largest root of a cubic.

# %%
from distough.distance import distance_matrix
from distough.extremal import (
    FamilyParams,
    build_family,
    detect_equitable,
    eval_P_Rdelta,
    family_partition,
    matches_join_family,
)
from distough.poly import count_real_roots, largest_real_root
from distough.spectral import spectral_radius

# %%
p = FamilyParams("thm1-star", n=18, delta=2)
g = build_family(p)
q = detect_equitable(distance_matrix(g), family_partition(p))
print("quotient rows:", q.rows())
poly = q.char_poly()
print("characteristic polynomial:", poly, "| closed form agrees:", poly == eval_P_Rdelta(18, 2))

# %%
root = largest_real_root(poly)
print(f"largest root {root:.12f}")
print(f"full 18x18 eigensolve {spectral_radius(distance_matrix(g)).lambda1:.12f}")
print("real roots above 20:", count_real_roots(poly, 20, 30))

# %%
# recognition is structural, so relabelled copies are found at any order
shuffled = g.relabel(list(reversed(range(g.n))))
print("relabelled copy recognised:", matches_join_family(shuffled, 2, (13, 1, 1, 1)))
extra = shuffled.add_edge(*shuffled.non_edges()[0])
print("after adding an edge:", matches_join_family(extra, 2, (13, 1, 1, 1)))
