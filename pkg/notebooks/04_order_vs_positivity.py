"""
Dehornoy sign against coefficient positivity
============================================

The table is reported as observed. The trefoil is Dehornoy-positive but its
Jones polynomial has a negative coefficient.
"""

#%%
from braidorder.experiments import experiment_order_positivity

for strands, max_len in ((2, 5), (3, 3)):
    report = experiment_order_positivity(strands, max_len)
    print(strands, "strands, up to length", max_len, "->", len(report.records), "braids")
    for verdict, cells in report.summary().items():
        print(f"  {verdict:9s} {cells}")

#%%
rows = {r.braid: r for r in experiment_order_positivity(2, 3).records}
print(rows["1 1 1"])

#%%
from braidorder.experiments import lo_dimension

print([lo_dimension(m) for m in range(2, 11)])
