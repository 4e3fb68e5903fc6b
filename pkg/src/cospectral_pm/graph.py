"""Simple undirected graphs on vertices ``0..n-1`` plus graph6 and DOT codecs.

Graphs are immutable values. Every "mutating" operation returns a new graph,
so instances can be shared freely between callers and threads.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence


class Graph:
    """Undirected simple graph with neighbor sets."""

    __slots__ = ("_adj", "_hash")

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        n = len(adj)
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of vertex {u} out of range 0..{n - 1}")
                if v == u:
                    raise ValueError(f"loop at vertex {u}")
                if u not in adj[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self._adj = adj
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_pair(n, u, v)
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u in range(n):
            adj[perm[u]] = {perm[w] for w in self._adj[u]}
        return Graph(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
    if u == v:
        raise ValueError(f"loop at vertex {u} not allowed")


# --------------------------------------------------------------------------
# Elementary constructions
# --------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph([() for _ in range(n)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g.n, u, v)
    if g.has_edge(u, v):
        return g
    adj = [set(a) for a in g.adjacency]
    adj[u].add(v)
    adj[v].add(u)
    return Graph(adj)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(g.n, [*g.edges(), *edges])


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g.n, u, v)
    adj = [set(a) for a in g.adjacency]
    adj[u].discard(v)
    adj[v].discard(u)
    return Graph(adj)


def complement(g: Graph) -> Graph:
    n = g.n
    everyone = frozenset(range(n))
    return Graph([everyone - g.neighbors(v) - {v} for v in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with the vertices of each later graph shifted past the earlier ones."""
    adj: list[set[int]] = []
    for g in graphs:
        offset = len(adj)
        adj.extend({w + offset for w in g.neighbors(v)} for v in range(g.n))
    return Graph(adj)


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    """Path with ``k`` vertices (and ``k - 1`` edges)."""
    if k < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    if k < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph([[j for j in range(k) if j != i] for i in range(k)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center labeled 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices outside ``s``.

    Returns the subgraph and the order-preserving map old label -> new label.
    """
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    keep = [v for v in range(g.n) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    adj = [{index[w] for w in g.neighbors(v) if w in index} for v in keep]
    return Graph(adj), index


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = set(vertices)
    return delete_vertices(g, [v for v in range(g.n) if v not in vs])[0]


# --------------------------------------------------------------------------
# Connectivity and degrees
# --------------------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def odd_component_count(g: Graph) -> int:
    return sum(1 for c in components(g) if len(c) % 2 == 1)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted in nonincreasing order."""
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def is_regular(g: Graph, k: int | None = None) -> bool:
    degs = {g.degree(v) for v in range(g.n)}
    if k is None:
        return len(degs) <= 1
    return degs <= {k}


def is_bipartite(g: Graph) -> bool:
    """Breadth-first 2-coloring test."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------

def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    n = g.n
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for p in range(0, len(bits), 6):
        chunk = bits[p:p + 6]
        val = 0
        for bit in chunk:
            val = (val << 1) | bit
        body.append(chr(val + 63))
    return _encode_size(n) + "".join(body)


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 string. Accepts an optional ``>>graph6<<`` header."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ValueError("graph6 string contains characters outside '?'..'~'")
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise ValueError("truncated graph6 size field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    else:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise ValueError(f"graph6 body has {len(rest)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[pos // 6] >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# DOT
# --------------------------------------------------------------------------

def to_dot(g: Graph, labels: Mapping[int, str] | None = None, name: str = "G") -> str:
    """Undirected DOT text with each edge listed once.

    ``labels`` maps vertices to display labels (e.g. their block names).
    """
    lines = [f"graph {name} {{"]
    if labels:
        for v in range(g.n):
            if v in labels:
                lines.append(f'  {v} [label="{labels[v]}"];')
    else:
        lines.extend(f"  {v};" for v in range(g.n) if g.degree(v) == 0)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
