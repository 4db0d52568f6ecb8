import random

import pytest

from pglab import (
    PATTERNS,
    Graph,
    build_group,
    build_power_graph,
    find_hole,
    find_induced_pattern,
    is_chain_graph,
    is_chordal,
    is_cograph,
    is_free,
    twin_reduce,
    verify_witness,
)
from pglab.patterns import _mcs_is_chordal
from naive_oracle import naive_hole_lengths, naive_pattern_presence

# -- catalog shape -----------------------------------------------------------------


def test_catalog_contents():
    sizes = {name: p.size for name, p in PATTERNS.items()}
    assert sizes == {
        "P4": 4, "P5": 5, "P5bar": 5, "C3": 3, "C4": 4, "C5": 5,
        "2K2": 4, "diamond": 4, "co-diamond": 4, "P2uP3": 5, "P2uP3bar": 5,
    }
    edge_counts = {name: len(p.edges) for name, p in PATTERNS.items()}
    assert edge_counts == {
        "P4": 3, "P5": 4, "P5bar": 6, "C3": 3, "C4": 4, "C5": 5,
        "2K2": 2, "diamond": 5, "co-diamond": 1, "P2uP3": 3, "P2uP3bar": 7,
    }


def test_patterns_are_consistent():
    for name, p in PATTERNS.items():
        assert p.name == name
        for i, mask in enumerate(p.adj_masks):
            assert not mask >> i & 1  # no self-loop
            assert p.degrees[i] == bin(mask).count("1")
        for u, v in p.edges:
            assert p.adj_masks[u] >> v & 1
            assert p.adj_masks[v] >> u & 1


# -- witness verification ------------------------------------------------------------


def test_verify_witness_exactness():
    g = build_power_graph(build_group("C6"))
    assert verify_witness(g, "diamond", (1, 5, 2, 3))
    assert verify_witness(g, PATTERNS["diamond"], (1, 5, 2, 3))
    # g^2 and g^4 generate the same subgroup, hence are adjacent: not a diamond
    assert not verify_witness(g, "diamond", (1, 5, 2, 4))
    assert not verify_witness(g, "diamond", (1, 5, 2))  # wrong arity
    assert not verify_witness(g, "diamond", (1, 5, 2, 2))  # repeated vertex
    assert not verify_witness(g, "C3", (0, 2, 3))  # g^2 !~ g^3


def test_find_returns_original_vertices_and_labels():
    graph = build_power_graph(build_group("C36"))
    w = find_induced_pattern(graph, "P5")
    assert w is not None
    assert w.pattern == "P5"
    assert verify_witness(graph, "P5", w.vertices)
    assert list(w.labels) == [graph.labels[v] for v in w.vertices]


def test_find_accepts_graph_or_reduction():
    graph = build_power_graph(build_group("C12"))
    red = twin_reduce(graph)
    a = find_induced_pattern(graph, "P4")
    b = find_induced_pattern(red, "P4")
    assert a == b  # same deterministic search over the same reduction


def test_find_is_deterministic():
    graph = build_power_graph(build_group("C36"))
    assert find_induced_pattern(graph, "P5") == find_induced_pattern(graph, "P5")


def test_injected_path_in_c36():
    """g^9 ~ g^18 ~ g^6 ~ g^12 ~ g^4 is an induced P5 (orders 4,2,6,3,9)."""
    group = build_group("C36")
    graph = build_power_graph(group)
    vertices = (9, 18, 6, 12, 4)
    assert [group.element_order(v) for v in vertices] == [4, 2, 6, 3, 9]
    assert verify_witness(graph, "P5", vertices)


def test_unknown_pattern_raises():
    graph = build_power_graph(build_group("C6"))
    with pytest.raises(KeyError):
        find_induced_pattern(graph, "P6")


# -- detection on known power graphs ---------------------------------------------------


def test_p4_in_c12_has_expected_orders():
    group = build_group("C12")
    w = find_induced_pattern(build_power_graph(group), "P4")
    assert w is not None
    assert sorted(group.element_order(v) for v in w.vertices) == [2, 3, 4, 6]


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("C6", True), ("C8", True), ("C15", True), ("C12", False),
        ("C36", False), ("Q8", True), ("A4", True), ("S4", True),
        ("C2xC6", False),
    ],
)
def test_is_cograph(spec, expected):
    free, witness = is_cograph(build_power_graph(build_group(spec)))
    assert free is expected
    if not free:
        assert witness.pattern == "P4"


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("C3", True), ("E2^3", True), ("S3", True), ("C2", True),
        ("C6", False), ("C9", False), ("A4", False), ("C12", False),
    ],
)
def test_is_chain_graph_on_proper_graphs(spec, expected):
    graph = build_power_graph(build_group(spec), proper=True)
    free, witness = is_chain_graph(graph)
    assert free is expected
    if not free:
        assert witness.pattern in ("C3", "C5", "2K2")
        assert verify_witness(graph, witness.pattern, witness.vertices)


@pytest.mark.parametrize(
    "spec,expected",
    [("C12", True), ("C36", False), ("C100", False), ("C2xC6", True), ("Q16", True)],
)
def test_is_chordal(spec, expected):
    graph = build_power_graph(build_group(spec))
    verdict, witness = is_chordal(graph)
    assert verdict is expected
    if not verdict:
        assert witness.pattern.startswith("C")
        assert len(witness.vertices) >= 4


def test_is_free_reports_catalog_order():
    graph = build_power_graph(build_group("C6"))
    result = is_free(graph)
    assert list(result) == list(PATTERNS)
    assert result["P5"] is None
    assert result["diamond"] is not None
    subset = is_free(graph, ["diamond", "P4"])
    assert list(subset) == ["diamond", "P4"]


# -- complement duality ------------------------------------------------------------------


@pytest.mark.parametrize(
    "name,partner",
    [
        ("P5", "P5bar"), ("diamond", "co-diamond"), ("P2uP3", "P2uP3bar"),
        ("P4", "P4"), ("C5", "C5"), ("C4", "2K2"),
    ],
)
@pytest.mark.parametrize("spec", ["C30", "C12", "S4", "Q8"])
def test_complement_duality(name, partner, spec):
    graph = build_power_graph(build_group(spec))
    comp = graph.complement()
    assert (find_induced_pattern(graph, name) is None) == (
        find_induced_pattern(comp, partner) is None
    )
    assert (find_induced_pattern(graph, partner) is None) == (
        find_induced_pattern(comp, name) is None
    )


# -- hole search --------------------------------------------------------------------------


def _ring(n):
    adj = [0] * n
    for v in range(n):
        adj[v] = (1 << ((v + 1) % n)) | (1 << ((v - 1) % n))
    return Graph(adj)


def test_find_hole_on_rings():
    c6 = _ring(6)
    w = find_hole(c6)
    assert w is not None and w.pattern == "C6" and len(w.vertices) == 6
    assert find_hole(c6, parity="even") is not None
    assert find_hole(c6, parity="odd") is None
    assert find_hole(c6, min_len=7) is None

    c7 = _ring(7)
    assert find_hole(c7, parity="odd").pattern == "C7"
    assert find_hole(c7, parity="even") is None


def test_find_hole_respects_bounds_and_validates():
    c5 = _ring(5)
    assert find_hole(c5, max_len=4) is None
    assert find_hole(c5, min_len=5).pattern == "C5"
    with pytest.raises(ValueError):
        find_hole(c5, parity="prime")
    with pytest.raises(ValueError):
        find_hole(c5, min_len=2)


def test_find_hole_witness_is_cycle_order():
    graph = build_power_graph(build_group("C36"))
    w = find_hole(graph)
    assert w is not None
    k = len(w.vertices)
    for i in range(k):
        assert graph.has_edge(w.vertices[i], w.vertices[(i + 1) % k])
    for i in range(k):
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1):
                assert not graph.has_edge(w.vertices[i], w.vertices[j])


def test_triangle_free_square():
    c4 = _ring(4)
    assert find_hole(c4, min_len=3).pattern == "C4"
    assert find_induced_pattern(c4, "C3") is None


def test_hole_search_against_naive_enumeration():
    rng = random.Random(20260815)
    for trial in range(40):
        n = rng.randrange(5, 11)
        p = rng.choice((0.2, 0.35, 0.5, 0.65))
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(adj)
        lengths = naive_hole_lengths(g)
        assert (find_hole(g) is None) == (not lengths), (trial, adj)
        evens = [k for k in lengths if k % 2 == 0]
        odds = [k for k in lengths if k % 2 == 1]
        assert (find_hole(g, parity="even") is None) == (not evens), (trial, adj)
        assert (find_hole(g, parity="odd") is None) == (not odds), (trial, adj)
        assert _mcs_is_chordal(g) == (not lengths), (trial, adj)
        verdict, witness = is_chordal(g)
        assert verdict == (not lengths)
        if witness is not None:
            assert len(witness.vertices) in lengths


def test_pattern_presence_against_naive_enumeration():
    """Backtracking search vs direct subset enumeration on random graphs."""
    rng = random.Random(987654321)
    for trial in range(25):
        n = rng.randrange(5, 10)
        p = rng.choice((0.25, 0.5, 0.75))
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(adj)
        naive = naive_pattern_presence(g)
        for name, found in is_free(g).items():
            assert (found is not None) == naive[name], (trial, name, adj)
