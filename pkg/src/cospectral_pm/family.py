"""Cospectral b-regular pairs, one with a perfect matching and one without.

Vertex labels are assigned block by block in a fixed order, so the output is
reproducible byte for byte:

    triangle | big cycle | gadget copies | extra gadget (odd b) or filler cycle (even b) | pendant pairs (odd b)

The triangle plus the big cycle is the switching set ``X``. The gadget
copies hang off ``X`` through their ``v`` vertices, which form ``W``; deleting
``W`` leaves ``b`` odd components, more than ``|W| = b - 2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    remove_edge,
)
from .switching import SwitchingPartition, apply_switch

MIN_DEGREE = 5


class UnsupportedDegree(ValueError):
    pass


def _check_b(b: int) -> None:
    if b < MIN_DEGREE:
        raise UnsupportedDegree(
            f"b={b}: the construction needs b >= {MIN_DEGREE}; "
            "no construction of this kind is known for b <= 4 (open range)"
        )


def expected_order(b: int) -> int:
    _check_b(b)
    return b * b + 5 * b - 8 if b % 2 else b * b + 3 * b - 10


def _perfect_matching_graph(pairs: int) -> Graph:
    return Graph.from_edges(2 * pairs, [(2 * i, 2 * i + 1) for i in range(pairs)])


def build_H(b: int) -> tuple[Graph, int]:
    """Complement of ``(b-1)/2`` disjoint edges plus a 3-vertex path.

    Returns the graph on ``b + 2`` vertices and the vertex ``u`` (the path's
    middle vertex), the only one of degree ``b - 1``.
    """
    _check_b(b)
    if b % 2 == 0:
        raise ValueError(f"build_H needs odd b, got {b}")
    base = disjoint_union(_perfect_matching_graph((b - 1) // 2), path_graph(3))
    return complement(base), b


def build_H_tilde(b: int) -> tuple[Graph, int, int]:
    """``build_H(b)`` with a pendant edge ``{u, v}``; returns ``(graph, u, v)``."""
    h, u = build_H(b)
    g = disjoint_union(h, empty_graph(1))
    v = h.n
    return Graph.from_edges(g.n, [*g.edges(), (u, v)]), u, v


def build_gadget_even(b: int) -> tuple[Graph, tuple[int, int], int]:
    """``K_{b+1}`` minus the edge ``{b-1, b}`` plus a vertex ``v`` joined to both ends.

    Returns ``(graph, (a1, a2), v)`` where ``a1, a2`` are the endpoints of the
    deleted edge.
    """
    _check_b(b)
    if b % 2:
        raise ValueError(f"build_gadget_even needs even b, got {b}")
    a1, a2 = b - 1, b
    k = remove_edge(complete_graph(b + 1), a1, a2)
    g = disjoint_union(k, empty_graph(1))
    v = b + 1
    return Graph.from_edges(g.n, [*g.edges(), (a1, v), (a2, v)]), (a1, a2), v


@dataclass
class FamilyLayout:
    """A constructed family graph together with its certificates' ingredients."""

    b: int
    graph: Graph
    partition: SwitchingPartition
    w: list[int]
    blocks: dict[str, list[int]]
    u_v_pairs: list[tuple[tuple[int, ...], int]]
    attachments: dict[int, list[int]] = field(default_factory=dict)

    @property
    def parity(self) -> str:
        return "odd" if self.b % 2 else "even"

    @property
    def x(self) -> list[int]:
        return sorted(self.partition.x)

    def vertex_labels(self) -> dict[int, str]:
        """Readable block-based name for every vertex, e.g. ``gadget_2.v``."""
        labels: dict[int, str] = {}
        v_of = {v: i for i, (_, v) in enumerate(self.u_v_pairs)}
        u_of = {u: i for i, (us, _) in enumerate(self.u_v_pairs) for u in us}
        for name, verts in self.blocks.items():
            for i, vert in enumerate(verts):
                if vert in v_of:
                    labels[vert] = f"{name}.v"
                elif vert in u_of:
                    labels[vert] = f"{name}.u"
                else:
                    labels[vert] = f"{name}[{i}]"
        return labels

    def sidecar(self) -> dict:
        return {
            "b": self.b,
            "parity": self.parity,
            "order": self.graph.n,
            "blocks": {k: v for k, v in self.blocks.items()},
            "X": self.x,
            "W": list(self.w),
            "u_v_pairs": [{"u": list(us), "v": v} for us, v in self.u_v_pairs],
        }


class _Assembler:
    """Accumulates blocks with consecutive labels."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.blocks: dict[str, list[int]] = {}

    def add_block(self, name: str, g: Graph) -> int:
        off = self.n
        self.edges.extend((u + off, v + off) for u, v in g.edges())
        self.blocks[name] = list(range(off, off + g.n))
        self.n += g.n
        return off


def _attach_balanced(
    attachers: list[tuple[int, int]],
    cycle: list[int],
    rng: random.Random | None,
) -> dict[int, list[int]]:
    """Give each ``(vertex, quota)`` its quota of distinct big-cycle vertices.

    Each attacher takes the ``quota`` big-cycle vertices with the fewest
    attachments so far, ties broken by smallest label (or at random when
    ``rng`` is given). This keeps the attachment counts within one of each
    other at every step.
    """
    count = {c: 0 for c in cycle}
    result: dict[int, list[int]] = {}
    for vert, quota in attachers:
        if quota > len(cycle):
            raise ValueError(f"quota {quota} exceeds big cycle length {len(cycle)}")
        if rng is None:
            order = sorted(cycle, key=lambda c: (count[c], c))
        else:
            keys = {c: rng.random() for c in cycle}
            order = sorted(cycle, key=lambda c: (count[c], keys[c]))
        chosen = sorted(order[:quota])
        for c in chosen:
            count[c] += 1
        result[vert] = chosen
    return result


def build_family(b: int, seed: int | None = None) -> FamilyLayout:
    """Construct the unswitched graph ``G`` (no perfect matching) and its layout.

    With ``seed`` set, ties in the balanced big-cycle wiring are broken at
    random instead of by smallest label; any such wiring is a valid member
    of the family.
    """
    _check_b(b)
    rng = None if seed is None else random.Random(seed)
    odd = b % 2 == 1
    cycle_len = 2 * b - 5 if odd else 2 * b - 7
    asm = _Assembler()
    asm.add_block("triangle", complete_graph(3))
    asm.add_block("big_cycle", cycle_graph(cycle_len))
    triangle = asm.blocks["triangle"]
    big_cycle = asm.blocks["big_cycle"]

    u_v_pairs: list[tuple[tuple[int, ...], int]] = []
    w: list[int] = []

    def add_gadget(name: str) -> int:
        if odd:
            gadget, u, v = build_H_tilde(b)
            anchors: tuple[int, ...] = (u,)
        else:
            gadget, anchors, v = build_gadget_even(b)
        off = asm.add_block(name, gadget)
        u_v_pairs.append((tuple(a + off for a in anchors), v + off))
        return v + off

    for i in range(b - 2):
        w.append(add_gadget(f"gadget_{i}"))

    # W sees the whole triangle plus enough of the big cycle to reach |X|/2
    w_quota = b - 4 if odd else b - 5
    attachers = [(vert, w_quota) for vert in w]
    for vert in w:
        asm.edges.extend((vert, t) for t in triangle)

    if odd:
        extra_v = add_gadget("extra_gadget")
        attachers.append((extra_v, b - 1))
        pairs = (b - 3) // 2
        off = asm.add_block("pendant_pairs", _perfect_matching_graph(pairs))
        attachers.extend((off + i, b - 1) for i in range(2 * pairs))
    else:
        off = asm.add_block("filler_cycle", cycle_graph(b - 2))
        attachers.extend((off + i, b - 2) for i in range(b - 2))

    attachments = _attach_balanced(attachers, big_cycle, rng)
    for vert, targets in attachments.items():
        asm.edges.extend((vert, c) for c in targets)
    for vert in w:
        attachments[vert] = sorted(triangle) + attachments[vert]

    g = Graph.from_edges(asm.n, asm.edges)
    partition = SwitchingPartition(triangle + big_cycle, g.n)
    return FamilyLayout(
        b=b,
        graph=g,
        partition=partition,
        w=w,
        blocks=asm.blocks,
        u_v_pairs=u_v_pairs,
        attachments=attachments,
    )


def build_pair(b: int, seed: int | None = None) -> tuple[Graph, Graph, FamilyLayout]:
    """``(G, G', layout)`` with ``G'`` the switch of ``G`` on the layout's ``X``."""
    layout = build_family(b, seed=seed)
    return layout.graph, apply_switch(layout.graph, layout.partition), layout


def intro_fixture(n: int) -> tuple[Graph, Graph]:
    """Small non-regular cospectral pair on ``n`` vertices.

    The first graph is ``C_4`` plus a path on ``n - 4`` vertices and has a
    perfect matching; the second is that path with two pendant vertices at
    each end and has none.
    """
    if n % 2 or n < 8:
        raise ValueError(f"n must be even and at least 8, got {n}")
    with_pm = disjoint_union(cycle_graph(4), path_graph(n - 4))
    p = n - 4
    ends = [(0, p), (0, p + 1), (p - 1, p + 2), (p - 1, p + 3)]
    without_pm = Graph.from_edges(n, [*path_graph(p).edges(), *ends])
    return with_pm, without_pm
