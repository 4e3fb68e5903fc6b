"""
A non-regular cospectral pair
=============================

C_4 plus a path, against the same path with two leaves on each end.
"""

from cospectral_pm.family import intro_fixture
from cospectral_pm.matching import has_perfect_matching
from cospectral_pm.spectral import char_poly

for n in (8, 10, 12):
    a, b = intro_fixture(n)
    print(n, char_poly(a) == char_poly(b), has_perfect_matching(a), has_perfect_matching(b))
