"""Exhaustive small-scale search for cospectral regular graphs that disagree
on having a perfect matching.

Connected k-regular graphs are enumerated up to isomorphism, bucketed by exact
characteristic polynomial, and every bucket with more than one member is
checked for mixed perfect-matching status.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .graph import Graph, from_graph6, is_connected, is_regular, to_graph6
from .matching import has_perfect_matching
from .spectral import CharPoly, char_poly

log = logging.getLogger(__name__)


# --------------------------------------------------------------------------
# Canonical labeling
# --------------------------------------------------------------------------

def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition finer than ``colors``.

    New colours are ranks of sorted (old colour, neighbour colour multiset)
    signatures, so the result depends only on the isomorphism type of the
    coloured graph.
    """
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _orbits(n: int, gens: list[list[int]]) -> list[int]:
    """Smallest member of each vertex's orbit under the group generated by ``gens``."""
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for gamma in gens:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is the same graph for
    every graph isomorphic to ``g``.

    Individualization-refinement: refine, pick the first non-singleton cell,
    branch on each of its vertices, and keep the leaf whose relabelled edge
    list is lexicographically largest. Automorphisms discovered from equal
    leaves prune sibling branches lying in one orbit.
    """
    n = g.n
    if n == 0:
        return []
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    edges = g.edges()
    best: list = [None, None]  # code, perm
    first: list = [None, None]
    autos: list[list[int]] = []

    def leaf(colors: list[int]) -> None:
        perm = colors
        code = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
        for ref_code, ref_perm in (first, best):
            if ref_code is not None and code == ref_code:
                inv = [0] * n
                for v, p in enumerate(ref_perm):
                    inv[p] = v
                autos.append([inv[perm[v]] for v in range(n)])
                return
        if first[0] is None:
            first[:] = [code, perm]
        if best[0] is None or code > best[0]:
            best[:] = [code, perm]

    def search(colors: list[int], prefix: list[int]) -> None:
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = defaultdict(list)
        for v, c in enumerate(colors):
            cells[c].append(v)
        if len(cells) == n:
            leaf(colors)
            return
        target = cells[min(c for c, vs in cells.items() if len(vs) > 1)]
        done: list[int] = []
        for v in target:
            if done:
                stab = [a for a in autos if all(a[p] == p for p in prefix)]
                if stab:
                    orbit = _orbits(n, stab)
                    if orbit[v] in {orbit[d] for d in done}:
                        continue
            c = colors[v]
            search([2 * x + (1 if x == c and w != v else 0) for w, x in enumerate(colors)], prefix + [v])
            done.append(v)

    search([0] * n, [])
    return best[1]


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return to_graph6(g.relabel(canonical_labeling(g)))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.num_edges() == g2.num_edges() and canonical_form(g1) == canonical_form(g2)


# --------------------------------------------------------------------------
# Enumeration
# --------------------------------------------------------------------------

def _labeled_regular(n: int, k: int) -> Iterator[Graph]:
    """Labelled k-regular graphs on n vertices containing every connected
    isomorphism class at least once.

    Vertices are completed in label order. When vertex ``i`` picks new
    neighbours, candidates with identical current neighbourhoods are
    interchangeable (swapping two of them is an automorphism of the partial
    graph fixing ``0..i``), so only the lowest-labelled members of each such
    class are taken. Branches where every touched vertex is already full
    while untouched vertices remain can only give disconnected graphs and
    are cut.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    deg = [0] * n

    def closed_off() -> bool:
        touched = [v for v in range(n) if deg[v] > 0]
        return 0 < len(touched) < n and all(deg[v] == k for v in touched)

    def rec(i: int) -> Iterator[Graph]:
        while i < n and deg[i] == k:
            i += 1
        if i == n:
            yield Graph(adj)
            return
        need = k - deg[i]
        classes: dict[frozenset[int], list[int]] = {}
        for j in range(i + 1, n):
            if deg[j] < k and j not in adj[i]:
                classes.setdefault(frozenset(adj[j]), []).append(j)
        groups = list(classes.values())
        yield from choose(i, groups, 0, need, [])

    def choose(i: int, groups: list[list[int]], gi: int, need: int, chosen: list[int]) -> Iterator[Graph]:
        if need == 0:
            for j in chosen:
                adj[i].add(j)
                adj[j].add(i)
                deg[j] += 1
            deg[i] += len(chosen)
            if not closed_off():
                yield from rec(i + 1)
            for j in chosen:
                adj[i].discard(j)
                adj[j].discard(i)
                deg[j] -= 1
            deg[i] -= len(chosen)
            return
        if gi == len(groups):
            return
        group = groups[gi]
        for t in range(min(need, len(group)), -1, -1):
            yield from choose(i, groups, gi + 1, need - t, chosen + group[:t])

    if n == 0:
        return
    yield from rec(0)


def enumerate_regular(n: int, k: int) -> Iterator[Graph]:
    """Every connected k-regular graph on n vertices, once per isomorphism class.

    Graphs are yielded in their canonical labelling, sorted by canonical
    graph6 string. Infeasible parameters (``n*k`` odd or ``k >= n``, apart
    from the single vertex) yield nothing.
    """
    if n <= 0 or k < 0 or (n * k) % 2 or (k >= n and not (n == 1 and k == 0)):
        log.info("no connected %d-regular graphs on %d vertices", k, n)
        return
    seen: dict[str, Graph] = {}
    for g in _labeled_regular(n, k):
        if not is_connected(g):
            continue
        perm = canonical_labeling(g)
        cg = g.relabel(perm)
        key = to_graph6(cg)
        if key not in seen:
            seen[key] = cg
    for key in sorted(seen):
        yield seen[key]


# --------------------------------------------------------------------------
# Cospectral scan
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CospectralClass:
    char_poly: CharPoly
    members: tuple[str, ...]
    pm_flags: tuple[bool, ...]

    @property
    def mixed(self) -> bool:
        return len(set(self.pm_flags)) > 1

    def to_json(self) -> dict:
        return {
            "char_poly": self.char_poly.to_json(),
            "members": list(self.members),
            "pm_flags": list(self.pm_flags),
        }


def cospectral_classes(graphs: Iterable[Graph]) -> list[CospectralClass]:
    """Group pairwise non-isomorphic graphs by characteristic polynomial.

    Isomorphic duplicates are dropped. Only classes with at least two
    members are returned, ordered by their first member.
    """
    buckets: dict[tuple[int, ...], dict[str, Graph]] = defaultdict(dict)
    for g in graphs:
        buckets[char_poly(g).coeffs].setdefault(canonical_form(g), g)
    classes = []
    for coeffs, members in buckets.items():
        if len(members) < 2:
            continue
        keys = sorted(members)
        classes.append(CospectralClass(
            char_poly=CharPoly(coeffs),
            members=tuple(keys),
            pm_flags=tuple(has_perfect_matching(members[s]) for s in keys),
        ))
    return sorted(classes, key=lambda c: c.members)


def recheck_class(cls: CospectralClass) -> bool:
    """Re-verify a class from its graph6 strings alone."""
    graphs = [from_graph6(s) for s in cls.members]
    polys = {char_poly(g) for g in graphs}
    flags = tuple(has_perfect_matching(g) for g in graphs)
    return polys == {cls.char_poly} and flags == cls.pm_flags and len(set(cls.members)) == len(graphs)


@dataclass
class SearchReport:
    k: int
    n_max: int
    graph_counts: dict[int, int]
    class_counts: dict[int, int]
    discrepant: list[CospectralClass]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "connected_only": True,
            "per_n": {
                str(n): {"graphs": self.graph_counts[n], "cospectral_classes": self.class_counts[n]}
                for n in sorted(self.graph_counts)
            },
            "total_graphs": sum(self.graph_counts.values()),
            "cospectral_class_count": sum(self.class_counts.values()),
            "discrepant_classes": [c.to_json() for c in self.discrepant],
        }


def scan_cospectral_pm(k: int, n_max: int) -> SearchReport:
    """Scan connected k-regular graphs on at most ``n_max`` vertices for
    cospectral classes with mixed perfect-matching status."""
    counts: dict[int, int] = {}
    class_counts: dict[int, int] = {}
    discrepant: list[CospectralClass] = []
    for n in range(k + 1, n_max + 1):
        if (n * k) % 2:
            continue
        graphs = list(enumerate_regular(n, k))
        assert all(is_regular(g, k) for g in graphs)
        classes = cospectral_classes(graphs)
        counts[n] = len(graphs)
        class_counts[n] = len(classes)
        discrepant.extend(c for c in classes if c.mixed)
        log.info("n=%d: %d graphs, %d cospectral classes", n, len(graphs), len(classes))
    return SearchReport(k=k, n_max=n_max, graph_counts=counts, class_counts=class_counts, discrepant=discrepant)
