# # Property suites for the supporting lemmas
#
# Every suite returns counts and the worst margin seen, so a near miss is as
# visible as a violation.

# %%
from distough.verify import lemma_bounds, lemma_composition, lemma_edge_deletion, lemma_quotient

# %%
for rep in [
    lemma_edge_deletion(n=6),
    lemma_quotient(max_order=30),
    lemma_composition((1,), name="le3"),
    lemma_composition((1, 2), large_part=True, name="le4"),
    *lemma_bounds(count=300, seed=1),
]:
    print(rep.row())

# %%
# with a tight budget the report is flagged incomplete rather than passed
print(lemma_edge_deletion(n=6, budget=50).row())
