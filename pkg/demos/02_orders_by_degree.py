"""
Orders of the family for growing degree
=======================================

Odd degrees follow b^2 + 5b - 8, even degrees b^2 + 3b - 10.
"""

import time

from cospectral_pm.certify import certify
from cospectral_pm.family import expected_order

for b in range(5, 11):
    t = time.perf_counter()
    report = certify(b)
    print(f"b={b:2d}  order={report.order:4d}  formula={expected_order(b):4d}  "
          f"all checks pass={report.passed}  ({time.perf_counter() - t:.1f}s)")
