"""Maximum-cardinality matching in general graphs and Tutte-set certificates."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph, components, delete_vertices

Matching = list[tuple[int, int]]


@dataclass(frozen=True)
class TutteViolator:
    """A vertex set ``s`` together with the odd components left by deleting it.

    ``component_orders`` lists the orders of the odd components of
    ``g - s``, largest first. The certificate rules out a perfect matching iff
    ``odd_components > len(s)``.
    """

    s: tuple[int, ...]
    odd_components: int
    component_orders: tuple[int, ...]

    @property
    def violating(self) -> bool:
        return self.odd_components > len(self.s)

    def to_json(self) -> dict:
        return {
            "S": list(self.s),
            "size": len(self.s),
            "odd_components": self.odd_components,
            "component_orders": list(self.component_orders),
            "violating": self.violating,
        }


def _greedy(g: Graph, mate: list[int]) -> None:
    for u in range(g.n):
        if mate[u] < 0:
            for w in sorted(g.neighbors(u)):
                if mate[w] < 0:
                    mate[u], mate[w] = w, u
                    break


def _augment_from(g: Graph, root: int, mate: list[int], nbrs: list[list[int]]) -> bool:
    """Search for an augmenting path from the free vertex ``root``.

    Edmonds' algorithm: a BFS forest of alternating paths in which odd cycles
    (blossoms) are contracted by recording a common ``base`` for their
    vertices. On success the path is flipped in ``mate`` and True returned.
    """
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                # odd cycle: contract the blossom
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if mate[to] < 0:
                    # augmenting path found; flip it
                    while to >= 0:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                in_tree[mate[to]] = True
                queue.append(mate[to])
    return False


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching as sorted ``(u, v)`` pairs with ``u < v``.

    Vertices and neighbors are scanned in ascending label order, so the
    result is a deterministic function of the labeled input.
    """
    n = g.n
    mate = [-1] * n
    _greedy(g, mate)
    nbrs = [sorted(g.neighbors(v)) for v in range(n)]
    for v in range(n):
        if mate[v] < 0 and nbrs[v]:
            _augment_from(g, v, mate, nbrs)
    return sorted((u, w) for u, w in enumerate(mate) if 0 <= u < w)


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * len(maximum_matching(g)) == g.n


def perfect_matching(g: Graph) -> Matching | None:
    """A perfect matching of ``g``, or None if there is none."""
    if g.n % 2:
        return None
    m = maximum_matching(g)
    return m if 2 * len(m) == g.n else None


def verify_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    used: set[int] = set()
    for u, v in m:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
            return False
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_perfect(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    m = list(m)
    return verify_matching(g, m) and 2 * len(m) == g.n


def deficiency(g: Graph) -> int:
    return g.n - 2 * len(maximum_matching(g))


def check_tutte_violator(g: Graph, s: Iterable[int]) -> TutteViolator:
    s = tuple(sorted(set(s)))
    rest, _ = delete_vertices(g, s)
    orders = tuple(sorted((len(c) for c in components(rest) if len(c) % 2), reverse=True))
    return TutteViolator(s=s, odd_components=len(orders), component_orders=orders)
