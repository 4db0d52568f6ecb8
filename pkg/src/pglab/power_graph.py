"""Undirected graphs on group elements, stored as Python-int bitsets.

`build_power_graph` joins u ~ v whenever one lies in the cyclic subgroup
generated by the other; with proper=True the identity vertex is removed
(vertex i of the proper graph is group element i+1).

`twin_reduction` shrinks a graph by interchangeability classes (vertices with
identical closed neighborhoods — adjacent twins — or identical open
neighborhoods — non-adjacent twins), keeping up to `keep` representatives per
class.  Pattern searches on the reduced graph are equivalent to searches on
the original for every pattern that uses at most `keep` mutually
interchangeable vertices, and witnesses translate straight back because
representatives are original vertex ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .group_kernel import Group


class Graph:
    """Immutable-by-convention undirected graph; adj[v] is a bitmask."""

    def __init__(self, adjacency: list[int], labels: list[str] | None = None) -> None:
        self.adj: list[int] = adjacency
        self.n: int = len(adjacency)
        self.labels: list[str] = labels if labels is not None else [str(i) for i in range(self.n)]
        if len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def neighbors(self, v: int) -> list[int]:
        out = []
        mask = self.adj[v]
        u = 0
        while mask:
            if mask & 1:
                out.append(u)
            mask >>= 1
            u += 1
        return out

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph([(full & ~self.adj[v]) & ~(1 << v) for v in range(self.n)],
                     list(self.labels))

    def induced(self, vertices: list[int]) -> "Graph":
        """Induced subgraph; vertex k of the result is vertices[k]."""
        pos = {v: k for k, v in enumerate(vertices)}
        keep_mask = 0
        for v in vertices:
            keep_mask |= 1 << v
        adj = [0] * len(vertices)
        for k, v in enumerate(vertices):
            mask = self.adj[v] & keep_mask
            while mask:
                low = mask & -mask
                adj[k] |= 1 << pos[low.bit_length() - 1]
                mask ^= low
        return Graph(adj, [self.labels[v] for v in vertices])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            mask = frontier
            while mask:
                low = mask & -mask
                nxt |= self.adj[low.bit_length() - 1]
                mask ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def build_power_graph(group: Group, proper: bool = False) -> Graph:
    """Undirected power graph of a group: u ~ v iff u in <v> or v in <u>.

    Vertices follow the group's element numbering; labels are rendered
    elements.  With proper=True vertex 0 (the identity) is dropped and the
    remaining vertices shift down by one.
    """
    n = group.order
    adj = [0] * n
    for u in range(1, n):
        bits = 0
        x = u
        while x != 0:
            bits |= 1 << x
            x = group.compose(x, u)
        # <u> contains the identity and u itself; u ~ every other member.
        bits |= 1
        bits &= ~(1 << u)
        adj[u] |= bits
        mask = bits
        while mask:
            low = mask & -mask
            adj[low.bit_length() - 1] |= 1 << u
            mask ^= low
    labels = [group.render(i) for i in range(n)]
    if not proper:
        return Graph(adj, labels)
    return Graph([row >> 1 for row in adj[1:]], labels[1:])


@dataclass
class TwinReducedGraph:
    """Result of twin reduction over interchangeability classes."""

    original: Graph
    classes: list[list[int]]        # sorted members, classes sorted by min member
    class_of: list[int]             # vertex -> class index
    retained: list[int]             # representative original-vertex ids, sorted
    graph: Graph = field(repr=False)  # induced on retained, search-ready

    @property
    def class_count(self) -> int:
        return len(self.classes)


def twin_reduce(graph: Graph, cap: int = 5) -> TwinReducedGraph:
    """Group vertices with equal closed or equal open neighborhoods.

    A vertex pair cannot be both (that would force u = v), so the two
    relations merge into one partition.  Up to `cap` members of each class
    are retained (the smallest ids), and the search graph is the subgraph the
    retained vertices induce in the original.  Patterns on up to `cap`
    vertices and induced cycles of any length survive the reduction.
    """
    if cap < 1:
        raise ValueError(f"retention cap must be >= 1, got {cap}")
    closed: dict[int, list[int]] = {}
    opened: dict[int, list[int]] = {}
    for v in range(graph.n):
        closed.setdefault(graph.adj[v] | (1 << v), []).append(v)
        opened.setdefault(graph.adj[v], []).append(v)

    parent = list(range(graph.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for members in list(closed.values()) + list(opened.values()):
        for other in members[1:]:
            union(members[0], other)

    groups: dict[int, list[int]] = {}
    for v in range(graph.n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted((sorted(ms) for ms in groups.values()), key=lambda ms: ms[0])
    class_of = [0] * graph.n
    for ci, ms in enumerate(classes):
        for v in ms:
            class_of[v] = ci
    retained = sorted(v for ms in classes for v in ms[:cap])
    return TwinReducedGraph(
        original=graph,
        classes=classes,
        class_of=class_of,
        retained=retained,
        graph=graph.induced(retained),
    )


@dataclass
class PrimeGraph:
    """Graph on the prime divisors of |G|; p ~ q iff some element has order pq."""

    primes: tuple[int, ...]
    graph: Graph

    @property
    def is_null(self) -> bool:
        return all(row == 0 for row in self.graph.adj)


def build_prime_graph(group: Group) -> PrimeGraph:
    orders = set(group.element_orders())
    primes = sorted({p for o in orders for p in _prime_divisors(o)})
    pos = {p: i for i, p in enumerate(primes)}
    adj = [0] * len(primes)
    for o in orders:
        divs = _prime_divisors(o)
        for i, p in enumerate(divs):
            for q in divs[i + 1:]:
                adj[pos[p]] |= 1 << pos[q]
                adj[pos[q]] |= 1 << pos[p]
    return PrimeGraph(tuple(primes), Graph(adj, [str(p) for p in primes]))


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def export_graph(graph: Graph, fmt: str) -> str:
    """Serialize a graph: 'json' (n, edges, labels) or 'dot' (undirected)."""
    if fmt == "json":
        return json.dumps(
            {"n": graph.n,
             "edges": [[u, v] for u, v in graph.edges()],
             "labels": list(graph.labels)},
            separators=(",", ":"))
    if fmt == "dot":
        lines = ["graph {"]
        for v in range(graph.n):
            lines.append(f'  {v} [label="{_dot_escape(graph.labels[v])}"];')
        for u, v in graph.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def _dot_escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')
