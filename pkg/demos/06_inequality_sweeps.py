# # Sweeping the auxiliary inequalities
#
# Each inequality used along the way is evaluated exactly with rationals at
# every integer grid point. Three stated claims turn out to be false at some
# points; the sweep reports where, and the radius comparisons they support
# still hold when checked directly.

# %%
from distough.inequalities import Grid, proof_inequality_suite

# %%
for theorem, grid in ((1, Grid(2, 5, n_max=120)), (2, Grid(2, 3, n_max=120)), (3, Grid(1, 3, n_max=120))):
    rep = proof_inequality_suite(theorem, grid)
    print(f"theorem {theorem}: {len(rep.results)} claims, {sum(r.checked for r in rep.results)} evaluations")
    for r in rep.violated():
        print(f"   violated {r.name}: {r.violations}/{r.checked}, first at {r.first_violations[0]}")
    radius = [r for r in rep.results if r.name.endswith("radius_order")]
    print("   radius comparisons hold:", all(r.ok for r in radius))
