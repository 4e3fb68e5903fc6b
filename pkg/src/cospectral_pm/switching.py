"""Godsil-McKay switching: validate a switching set and apply the switch."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .graph import Graph


class InvalidSwitchingSet(ValueError):
    """Raised when a partition fails the switching-set conditions."""

    def __init__(self, report: SwitchingReport):
        self.report = report
        super().__init__(report.describe())


@dataclass(frozen=True)
class SwitchingPartition:
    """Vertex bipartition ``{X, Y}`` of a graph on ``n`` vertices; ``Y`` is implied."""

    x: frozenset[int]
    n: int

    def __init__(self, x: Iterable[int], n: int):
        xs = list(x)
        if len(set(xs)) != len(xs):
            raise ValueError("X lists a vertex more than once")
        bad = [v for v in xs if not 0 <= v < n]
        if bad:
            raise ValueError(f"X contains vertices out of range 0..{n - 1}: {sorted(bad)}")
        if len(xs) < 2 or len(xs) % 2:
            raise ValueError(f"|X| must be even and at least 2, got {len(xs)}")
        object.__setattr__(self, "x", frozenset(xs))
        object.__setattr__(self, "n", n)

    @property
    def y(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.x

    def to_json(self) -> dict:
        return {"X": sorted(self.x)}

    @classmethod
    def from_json(cls, data: dict, n: int) -> SwitchingPartition:
        return cls(data["X"], n)


@dataclass(frozen=True)
class SwitchingReport:
    valid: bool
    x_induced_degree: int | None
    offenders: list[tuple[int, int]] = field(default_factory=list)
    halves: list[int] = field(default_factory=list)

    def describe(self) -> str:
        if self.valid:
            return f"valid switching set; X induces a {self.x_induced_degree}-regular graph"
        parts = []
        if self.x_induced_degree is None:
            parts.append("X does not induce a regular subgraph")
        if self.offenders:
            shown = ", ".join(f"vertex {y} has {c} neighbors in X" for y, c in self.offenders[:10])
            parts.append(f"outside vertices with a forbidden count: {shown}")
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "x_induced_degree": self.x_induced_degree,
            "offenders": [list(o) for o in self.offenders],
        }


def validate_switching_set(g: Graph, p: SwitchingPartition) -> SwitchingReport:
    """Check both switching hypotheses: ``X`` induces a regular subgraph and
    every outside vertex sees 0, ``|X|/2`` or all of ``X``."""
    if p.n != g.n:
        raise ValueError(f"partition is for {p.n} vertices, graph has {g.n}")
    x = p.x
    inner = {len(g.neighbors(v) & x) for v in x}
    x_deg = inner.pop() if len(inner) == 1 else None
    half = len(x) // 2
    offenders = []
    halves = []
    for y in sorted(p.y):
        c = len(g.neighbors(y) & x)
        if c == half:
            halves.append(y)
        elif c not in (0, len(x)):
            offenders.append((y, c))
    return SwitchingReport(
        valid=x_deg is not None and not offenders,
        x_induced_degree=x_deg,
        offenders=offenders,
        halves=halves,
    )


def apply_switch(g: Graph, p: SwitchingPartition) -> Graph:
    """Complement, within ``X``, the neighborhood of every outside vertex
    adjacent to exactly half of ``X``. Refuses invalid partitions."""
    report = validate_switching_set(g, p)
    if not report.valid:
        raise InvalidSwitchingSet(report)
    adj = [set(a) for a in g.adjacency]
    x = p.x
    for y in report.halves:
        old = adj[y] & x
        new = x - old
        for v in old:
            adj[v].discard(y)
        for v in new:
            adj[v].add(y)
        adj[y] = (adj[y] - old) | new
    return Graph(adj)
