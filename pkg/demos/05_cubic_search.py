"""
Searching small cubic graphs
============================

Enumerate connected cubic graphs, group them by characteristic polynomial,
and look for a group whose members disagree on having a perfect matching.
Raise N_MAX to 14 for the full desk-scale run (about two minutes).
"""

import json

from cospectral_pm.search import enumerate_regular, scan_cospectral_pm

N_MAX = 12

print([len(list(enumerate_regular(n, 3))) for n in range(4, N_MAX + 1, 2)])
report = scan_cospectral_pm(3, N_MAX)
print(json.dumps(report.to_json()["per_n"], indent=1))
print("mixed classes:", len(report.discrepant))
