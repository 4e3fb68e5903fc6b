"""Cospectral regular graph pairs where exactly one member has a perfect matching.

Builds the pairs for every degree b >= 5 via Godsil-McKay switching and
checks each claim exactly: integer characteristic polynomials for
cospectrality, blossom matching plus Tutte sets for the matching claims.
"""

from .family import build_family, build_pair, expected_order, intro_fixture
from .graph import Graph, from_graph6, to_graph6
from .matching import check_tutte_violator, has_perfect_matching, maximum_matching
from .search import canonical_form, enumerate_regular, scan_cospectral_pm
from .spectral import CharPoly, char_poly, cospectral
from .switching import SwitchingPartition, apply_switch, validate_switching_set

__all__ = [
    "CharPoly",
    "Graph",
    "SwitchingPartition",
    "apply_switch",
    "build_family",
    "build_pair",
    "canonical_form",
    "char_poly",
    "check_tutte_violator",
    "cospectral",
    "enumerate_regular",
    "expected_order",
    "from_graph6",
    "has_perfect_matching",
    "intro_fixture",
    "maximum_matching",
    "scan_cospectral_pm",
    "to_graph6",
    "validate_switching_set",
]

__version__ = "0.1.0"
