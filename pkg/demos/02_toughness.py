# # Toughness by enumeration
#
# tau(G) = min |S| / (c(G-S) - 1) over vertex sets whose removal disconnects G.
# The exact enumerator is capped at 20 vertices; beyond that, a bounded search
# for a violating cut is still exact because such a cut is smaller than
# tau * (alpha - 1).

# %%
from distough.errors import CapabilityError
from distough.extremal import join_of_cliques
from distough.graph import complete_graph, cycle_graph, path_graph
from distough.toughness import classic_toughness, find_tau_violation, tau_lower_bound, tau_toughness

# %%
for name, g in [("P5", path_graph(5)), ("C8", cycle_graph(8)), ("K2 v (K5 u 3K1)", join_of_cliques(2, (5, 1, 1, 1)))]:
    t, c = tau_toughness(g), classic_toughness(g)
    print(f"{name:>16}: tau = {t.value} (cut {t.witness}, {t.components} parts), classic t = {c.value}, lower bound {tau_lower_bound(g)}")

# %%
# a 40-vertex graph is far beyond plain enumeration, yet a 1-toughness
# violation is found at once: the two core vertices split off 6 parts
big = join_of_cliques(2, (33, 1, 1, 1, 1, 1))
print(big.n, "vertices:", find_tau_violation(big, 1))

# %%
# dense graphs have small independence number, so almost nothing needs scanning
dense = complete_graph(40)
for i in range(0, 40, 2):
    dense = dense.remove_edge(i, i + 1)
print("K40 minus a perfect matching has a 1-toughness violation:", find_tau_violation(dense, 1) is not None)

# %%
# sparse graphs have too many candidate cuts; the search says so instead of guessing
try:
    find_tau_violation(cycle_graph(40), 1)
except CapabilityError as exc:
    print("undecided:", exc)
