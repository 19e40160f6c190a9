# # Distance spectra of small graphs
#
# Parse a few graph6 strings, build their distance matrices and compare the
# largest distance eigenvalue with the two Wiener-index bounds.

# %%
import numpy as np

from distough.distance import distance_matrix, wiener2_index, wiener_index
from distough.graph import cycle_graph, format_graph6, parse_graph6, path_graph
from distough.spectral import rayleigh_lower_bound, spectral_radius, wiener2_upper_bound

# %%
# graph6 round trip: "Bg" is the path on three vertices
p3 = parse_graph6("Bg")
print(p3, format_graph6(path_graph(3)))
print(distance_matrix(p3))

# %%
# the Perron vector of a path is symmetric and peaks at the ends
res = spectral_radius(distance_matrix(path_graph(6)))
print("lambda1(P6) =", round(res.lambda1, 6))
print("perron vector:", np.round(res.vector, 4))

# %%
# 2W/n <= lambda1 <= sqrt(2(n-1)W2/n); the upper bound is tight only on complete graphs
print(f"{'graph':>8} {'2W/n':>9} {'lambda1':>9} {'upper':>9}  W   W2")
for name, g in [("P6", path_graph(6)), ("C7", cycle_graph(7)), ("K5", parse_graph6("D~{"))]:
    dm = distance_matrix(g)
    print(f"{name:>8} {rayleigh_lower_bound(dm):9.4f} {spectral_radius(dm).lambda1:9.4f} {wiener2_upper_bound(dm):9.4f}  {wiener_index(dm)}  {wiener2_index(dm)}")
