"""Induced-subgraph pattern detection on small graphs.

The catalog covers the patterns the classification checks need: paths (P4,
P5), their complements, small cycles, the two-edge matching 2K2, the diamond
and co-diamond, and the path unions P2+P3 / complement.  All searches are for
*induced* copies, run on the twin-reduced search graph (which preserves every
catalog pattern and all holes), and return witnesses as original vertex ids
plus labels.  Search order is deterministic, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .power_graph import Graph, TwinReducedGraph, twin_reduce


@dataclass(frozen=True)
class Pattern:
    name: str
    size: int
    edges: tuple[tuple[int, int], ...]
    adj_masks: tuple[int, ...]
    degrees: tuple[int, ...]


def _make_pattern(name: str, size: int, edges: tuple[tuple[int, int], ...]) -> Pattern:
    masks = [0] * size
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    degrees = tuple(bin(m).count("1") for m in masks)
    return Pattern(name, size, edges, tuple(masks), degrees)


PATTERNS: dict[str, Pattern] = {
    p.name: p for p in (
        _make_pattern("P4", 4, ((0, 1), (1, 2), (2, 3))),
        _make_pattern("P5", 5, ((0, 1), (1, 2), (2, 3), (3, 4))),
        _make_pattern("P5bar", 5, ((0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4))),
        _make_pattern("C3", 3, ((0, 1), (1, 2), (0, 2))),
        _make_pattern("C4", 4, ((0, 1), (1, 2), (2, 3), (0, 3))),
        _make_pattern("C5", 5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
        _make_pattern("2K2", 4, ((0, 1), (2, 3))),
        _make_pattern("diamond", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))),
        _make_pattern("co-diamond", 4, ((2, 3),)),
        _make_pattern("P2uP3", 5, ((0, 1), (2, 3), (3, 4))),
        _make_pattern("P2uP3bar", 5,
                      ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4))),
    )
}


@dataclass(frozen=True)
class Witness:
    """An induced copy: original-graph vertex ids in pattern-vertex order."""

    pattern: str
    vertices: tuple[int, ...]
    labels: tuple[str, ...]


def _as_reduction(g: Graph | TwinReducedGraph) -> TwinReducedGraph:
    return g if isinstance(g, TwinReducedGraph) else twin_reduce(g)


def verify_witness(graph: Graph, pattern: Pattern | str, vertices: tuple[int, ...]) -> bool:
    """Check that `vertices` induce exactly `pattern` in `graph`."""
    if isinstance(pattern, str):
        pattern = PATTERNS[pattern]
    if len(vertices) != pattern.size or len(set(vertices)) != pattern.size:
        return False
    for i in range(pattern.size):
        for j in range(i + 1, pattern.size):
            want = bool(pattern.adj_masks[i] >> j & 1)
            if graph.has_edge(vertices[i], vertices[j]) != want:
                return False
    return True


def find_induced_pattern(g: Graph | TwinReducedGraph,
                         pattern: Pattern | str) -> Witness | None:
    """First induced copy of `pattern`, or None.

    Deterministic backtracking on the twin-reduced graph: pattern vertices are
    tried in decreasing-degree order, graph candidates in ascending id order.
    """
    if isinstance(pattern, str):
        pattern = PATTERNS[pattern]
    red = _as_reduction(g)
    s = red.graph
    if s.n < pattern.size:
        return None

    order = sorted(range(pattern.size), key=lambda v: (-pattern.degrees[v], v))
    full = (1 << s.n) - 1
    degs = [s.degree(v) for v in range(s.n)]
    assignment = [-1] * pattern.size  # pattern vertex -> search-graph vertex

    def backtrack(step: int, used: int) -> bool:
        if step == len(order):
            return True
        pv = order[step]
        cand = full & ~used
        for prev in order[:step]:
            gv = assignment[prev]
            if pattern.adj_masks[prev] >> pv & 1:
                cand &= s.adj[gv]
            else:
                cand &= ~s.adj[gv]
        need = pattern.degrees[pv]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if degs[v] < need:
                continue
            assignment[pv] = v
            if backtrack(step + 1, used | low):
                return True
            assignment[pv] = -1
        return False

    if not backtrack(0, 0):
        return None
    original = tuple(red.retained[assignment[i]] for i in range(pattern.size))
    witness = Witness(pattern.name, original,
                      tuple(red.original.labels[v] for v in original))
    if not verify_witness(red.original, pattern, original):  # pragma: no cover
        raise RuntimeError(f"search produced an invalid {pattern.name} witness")
    return witness


def is_free(g: Graph | TwinReducedGraph,
            patterns: list[str] | None = None) -> dict[str, Witness | None]:
    """Map pattern name -> first witness (None = free), in catalog order."""
    red = _as_reduction(g)
    names = list(PATTERNS) if patterns is None else list(patterns)
    return {name: find_induced_pattern(red, name) for name in names}


def is_cograph(g: Graph | TwinReducedGraph) -> tuple[bool, Witness | None]:
    w = find_induced_pattern(g, "P4")
    return (w is None, w)


def is_chain_graph(g: Graph | TwinReducedGraph) -> tuple[bool, Witness | None]:
    """Chain graphs are exactly the {C3, C5, 2K2}-free graphs."""
    red = _as_reduction(g)
    for name in ("C3", "C5", "2K2"):
        w = find_induced_pattern(red, name)
        if w is not None:
            return (False, w)
    return (True, None)


def is_chordal(g: Graph | TwinReducedGraph) -> tuple[bool, Witness | None]:
    """Maximum-cardinality search + elimination-order verification.

    Twin reduction preserves holes in both directions (an induced cycle of
    length >= 4 meets each closed class at most once and each open class at
    most twice), so checking the reduced graph is equivalent.  On failure the
    witness is an induced cycle of length >= 4 from find_hole.
    """
    red = _as_reduction(g)
    s = red.graph
    if _mcs_is_chordal(s):
        return (True, None)
    w = find_hole(red, parity="any", min_len=4)
    if w is None:  # pragma: no cover
        raise RuntimeError("chordality check failed but no hole was found")
    return (False, w)


def _mcs_is_chordal(s: Graph) -> bool:
    n = s.n
    if n == 0:
        return True
    weights = [0] * n
    visited = 0
    visit_pos = [-1] * n
    snapshot = [0] * n  # visited-mask at the time each vertex is visited
    alpha: list[int] = []
    for step in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not (visited >> v & 1) and weights[v] > best_w:
                best, best_w = v, weights[v]
        snapshot[best] = visited
        visit_pos[best] = step
        visited |= 1 << best
        alpha.append(best)
        mask = s.adj[best] & ~visited
        while mask:
            low = mask & -mask
            weights[low.bit_length() - 1] += 1
            mask ^= low
    for v in alpha:
        earlier = s.adj[v] & snapshot[v]
        if earlier == 0:
            continue
        # Most recently visited earlier neighbor must dominate the others.
        parent = max((visit_pos[u], u) for u in _bits(earlier))[1]
        rest = earlier & ~(1 << parent)
        if rest & ~s.adj[parent]:
            return False
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_hole(g: Graph | TwinReducedGraph, parity: str = "any",
              min_len: int = 4, max_len: int | None = None) -> Witness | None:
    """First induced cycle with length >= min_len matching the parity filter.

    parity: 'any', 'even', or 'odd'.  The witness pattern name is C<length>
    and its vertices are in cycle order.  Deterministic: the cycle found has
    the smallest possible minimum vertex, then follows ascending-id DFS.
    """
    if parity not in ("any", "even", "odd"):
        raise ValueError(f"parity must be any/even/odd, got {parity!r}")
    if min_len < 3:
        raise ValueError(f"cycle length is at least 3, got min_len={min_len}")
    red = _as_reduction(g)
    s = red.graph
    cap = s.n if max_len is None else min(max_len, s.n)

    def parity_ok(length: int) -> bool:
        if parity == "even":
            return length % 2 == 0
        if parity == "odd":
            return length % 2 == 1
        return True

    # Search for cycles whose minimum vertex is start; path = [start, v1, ..., vk],
    # each vi > start, consecutive adjacent, non-consecutive non-adjacent.
    for start in range(s.n):
        above = ~((1 << (start + 1)) - 1)
        first_cands = s.adj[start] & above
        for v1 in _bits(first_cands):
            found = _hole_dfs(s, start, v1, above, cap, min_len, parity_ok)
            if found is not None:
                original = tuple(red.retained[v] for v in found)
                return Witness(f"C{len(found)}", original,
                               tuple(red.original.labels[v] for v in original))
    return None


def _hole_dfs(s: Graph, start: int, v1: int, above: int, cap: int,
              min_len: int, parity_ok) -> list[int] | None:
    path = [start, v1]

    def dfs(path_mask: int, blocked: int) -> list[int] | None:
        """blocked = union of neighborhoods of interior vertices v1..v_{k-1}."""
        vk = path[-1]
        if min_len <= len(path) + 1 <= cap:
            close = s.adj[vk] & s.adj[start] & above & ~blocked & ~path_mask
            for w in _bits(close):
                if w > v1 and parity_ok(len(path) + 1):
                    return path + [w]
        if len(path) + 1 >= cap:
            return None
        ext = s.adj[vk] & above & ~s.adj[start] & ~blocked & ~path_mask
        for w in _bits(ext):
            path.append(w)
            got = dfs(path_mask | (1 << w), blocked | s.adj[vk])
            path.pop()
            if got is not None:
                return got
        return None

    return dfs((1 << start) | (1 << v1), 0)
