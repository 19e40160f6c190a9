# # Theorem checks and counterexample search
#
# A graph passes when its distance spectral radius is above the extremal
# threshold, when it is the extremal graph itself, or when the toughness
# conclusion is confirmed by an exact cut search.

# %%
from collections import Counter

from distough.verify import check_theorem_graph, cmd_search_counterexample, extremal_neighbourhood, threshold_radius

# %%
print("threshold at n=18, min degree 2:", round(threshold_radius(1, 18, 2), 8))
graphs = extremal_neighbourhood(1, 18, 2)
records = [check_theorem_graph(1, g) for g in graphs]
print(records[0].detail)
print(Counter(r.detail.split(";")[0] for r in records[1:]))

# %%
for theorem, param in ((1, 2), (2, 2), (3, 2)):
    rep = cmd_search_counterexample(theorem, param=param, samples=300, seed=11)
    print(rep.row())
