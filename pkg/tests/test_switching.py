from __future__ import annotations

import random

import pytest

from cospectral_pm.family import build_family
from cospectral_pm.graph import Graph, complement, components, cycle_graph, induced_subgraph, is_regular, path_graph
from cospectral_pm.spectral import char_poly
from cospectral_pm.switching import (
    InvalidSwitchingSet,
    SwitchingPartition,
    apply_switch,
    validate_switching_set,
)
from oracles import planted_instance


def test_partition_well_formed():
    with pytest.raises(ValueError):
        SwitchingPartition([0, 1, 2], 5)
    with pytest.raises(ValueError):
        SwitchingPartition([0, 0], 5)
    with pytest.raises(ValueError):
        SwitchingPartition([0, 7], 5)
    p = SwitchingPartition([3, 1], 5)
    assert p.y == {0, 2, 4}
    assert p.to_json() == {"X": [1, 3]}
    assert SwitchingPartition.from_json({"X": [1, 3]}, 5) == p


def test_family_switching_set_valid():
    layout = build_family(5)
    report = validate_switching_set(layout.graph, layout.partition)
    assert report.valid
    assert report.x_induced_degree == 2
    induced = induced_subgraph(layout.graph, layout.x)
    assert sorted(len(c) for c in components(induced)) == [3, 5]


def test_path_x_not_regular():
    g = path_graph(6)
    report = validate_switching_set(g, SwitchingPartition([0, 1, 2, 3], 6))
    assert not report.valid
    assert report.x_induced_degree is None


def test_offender_reported():
    # X = 4-cycle on 0..3, vertex 4 sees only vertex 0
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    report = validate_switching_set(g, SwitchingPartition([0, 1, 2, 3], 5))
    assert not report.valid
    assert report.offenders == [(4, 1)]
    assert "vertex 4 has 1 neighbors" in report.describe()
    with pytest.raises(InvalidSwitchingSet) as err:
        apply_switch(g, SwitchingPartition([0, 1, 2, 3], 5))
    assert err.value.report.offenders == [(4, 1)]


def test_switch_leaves_zero_and_full_vertices():
    # X = 4-cycle; vertex 4 sees nothing, vertex 5 sees all of X, vertex 6 sees half
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (5, 0), (5, 1), (5, 2), (5, 3), (6, 0), (6, 1), (4, 6)]
    g = Graph.from_edges(7, edges)
    gs = apply_switch(g, SwitchingPartition([0, 1, 2, 3], 7))
    assert gs.neighbors(4) == g.neighbors(4)
    assert gs.neighbors(5) == g.neighbors(5)
    assert gs.neighbors(6) == {2, 3, 4}
    assert induced_subgraph(gs, [0, 1, 2, 3]) == cycle_graph(4)


def test_switch_is_involution_on_family():
    layout = build_family(5)
    once = apply_switch(layout.graph, layout.partition)
    assert once != layout.graph
    assert apply_switch(once, layout.partition) == layout.graph
    assert is_regular(once, 5)


def test_planted_instances_preserve_spectrum():
    rng = random.Random(77)
    switched_some = 0
    for _ in range(60):
        g, p = planted_instance(rng)
        assert validate_switching_set(g, p).valid
        gs = apply_switch(g, p)
        switched_some += gs != g
        assert char_poly(gs) == char_poly(g)
        assert apply_switch(gs, p) == g
    assert switched_some > 20


def test_complement_of_switching_set_graph_also_switches():
    # switching commutes with complementation on valid partitions
    rng = random.Random(4)
    for _ in range(20):
        g, p = planted_instance(rng)
        assert validate_switching_set(complement(g), p).valid
        assert apply_switch(complement(g), p) == complement(apply_switch(g, p))
