import itertools
import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srgborsuk import graph as gc
from srgborsuk.errors import (
    DataVerificationError,
    Graph6Error,
    InvalidGeneratorArgument,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBitSection,
    VertexOutOfRange,
)
from srgborsuk.params import SrgParams, check_feasible, slice_counts


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_srg(g):
    a = g.to_numpy()
    a2 = a @ a
    off = ~np.eye(g.n, dtype=bool)
    lam = set(a2[(a == 1)].tolist())
    mu = set(a2[(a == 0) & off].tolist())
    deg = set(a.sum(1).tolist())
    if len(deg) == 1 and len(lam) == 1 and len(mu) == 1:
        return SrgParams(g.n, deg.pop(), lam.pop(), mu.pop())
    return None


# --- graph6 -----------------------------------------------------------------

def test_parse_k2_and_k1():
    k2 = gc.parse_graph6("A_")
    assert k2.n == 2 and k2.edges() == [(0, 1)]
    k1 = gc.parse_graph6(b"@")
    assert k1.n == 1 and k1.num_edges() == 0


def test_write_k2():
    assert gc.write_graph6(gc.Graph.from_edges(2, [(0, 1)])) == b"A_"


def test_header_prefix_accepted():
    assert gc.parse_graph6(b">>graph6<<A_").num_edges() == 1


def test_errors():
    with pytest.raises(MalformedHeader):
        gc.parse_graph6(b"")
    with pytest.raises(MalformedHeader):
        gc.parse_graph6(b" A")
    with pytest.raises(MalformedHeader):
        gc.parse_graph6(b"~?")
    with pytest.raises(TruncatedBitSection):
        gc.parse_graph6(b"D")
    with pytest.raises(TrailingGarbage):
        gc.parse_graph6(b"A_?")
    with pytest.raises(Graph6Error):
        gc.parse_graph6(b"A`")  # padding bit set


def test_large_size_header_round_trip():
    g = gc.Graph.from_edges(70, [(0, 69), (5, 6)])
    data = gc.write_graph6(g)
    assert data[0] == 126
    assert gc.parse_graph6(data) == g
    assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_round_trip_corpus_matches_networkx(corpus, g24):
    for name, g in list(corpus.items()) + [("g24", g24)]:
        data = gc.write_graph6(g)
        assert gc.parse_graph6(data) == g, name
        assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip(), name
        assert gc.parse_graph6(gc.write_graph6(gc.complement(g))) == gc.complement(g), name


@settings(max_examples=60)
@given(st.integers(1, 80).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=200))))
def test_round_trip_random(data):
    n, pairs = data
    g = gc.Graph.from_edges(n, [(a, b) for a, b in pairs if a != b])
    assert gc.parse_graph6(gc.write_graph6(g)) == g
    assert gc.parse_graph6(nx.to_graph6_bytes(to_nx(g), header=False).strip()) == g


def test_file_round_trip(tmp_path):
    p = tmp_path / "pet.g6"
    gc.write_graph6_file(p, gc.petersen())
    assert gc.read_graph6_file(p) == gc.petersen()


# --- Graph invariants -------------------------------------------------------

def test_graph_rejects_asymmetric_or_loops():
    with pytest.raises(ValueError):
        gc.Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        gc.Graph(1, [1])


def test_complement_involution(corpus):
    for g in corpus.values():
        assert gc.complement(gc.complement(g)) == g


# --- verify_srg ---------------------------------------------------------------

def test_verify_petersen():
    assert gc.verify_srg(gc.petersen()).params == SrgParams(10, 3, 0, 1)


def test_verify_path_graph_not_srg():
    res = gc.verify_srg(gc.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert res.params is None and not res.is_regular and res.witness is not None


def test_verify_regular_non_srg_gives_witness():
    cycle6 = gc.Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    res = gc.verify_srg(cycle6)
    assert res.is_regular and res.params is None
    i, j = res.witness
    assert 0 <= i < j < 6


def test_verify_corpus_against_matrix_oracle(corpus):
    for name, g in corpus.items():
        found = gc.verify_srg(g).params
        assert found == brute_srg(g), name
        assert check_feasible(found).ok, name


def test_generator_parameters():
    for m in range(4, 9):
        assert gc.verify_srg(gc.triangular(m)).params == SrgParams(m * (m - 1) // 2, 2 * (m - 2), m - 2, 4)
    for m in range(2, 7):
        assert gc.verify_srg(gc.lattice(m)).params == SrgParams(m * m, 2 * (m - 1), m - 2, 2)
    for p in (5, 13, 17, 29, 37, 41):
        assert gc.verify_srg(gc.paley(p)).params == SrgParams(p, (p - 1) // 2, (p - 5) // 4, (p - 1) // 4)
    assert gc.verify_srg(gc.lattice(3)).params == SrgParams(9, 4, 1, 2)
    assert gc.verify_srg(gc.paley(13)).params == SrgParams(13, 6, 2, 3)


def test_generator_arguments():
    for bad in (lambda: gc.triangular(3), lambda: gc.lattice(1), lambda: gc.paley(7), lambda: gc.paley(9)):
        with pytest.raises(InvalidGeneratorArgument):
            bad()


def test_triangular5_is_complement_of_petersen():
    assert gc.triangular(5) == gc.complement(gc.petersen())
    assert nx.is_isomorphic(to_nx(gc.petersen()), nx.petersen_graph())


def test_local_subgraph_degree_sums(corpus):
    for name, g in corpus.items():
        prm = gc.verify_srg(g).params
        for u in range(g.n):
            loc = gc.local_subgraph(g, u)
            assert loc.n == prm.k
            assert sum(loc.degrees()) == prm.k * prm.lam, name
            assert set(loc.degrees()) == {prm.lam}, name


def test_local_subgraph_relabelling():
    g = gc.petersen()
    loc = gc.local_subgraph(g, 0)
    assert loc.n == 3 and loc.num_edges() == 0
    nbrs = g.neighbors(0)
    assert nbrs == sorted(nbrs)
    with pytest.raises(VertexOutOfRange):
        gc.local_subgraph(g, 10)


def test_common_sets_petersen():
    g = gc.petersen()
    assert len(gc.common_nonneighbor_set(g, [0])) == 6
    u, v = g.edges()[0]
    assert gc.common_neighbor_count(g, [u, v]) == 0
    with pytest.raises(VertexOutOfRange):
        gc.common_neighbor_count(g, [0, 11])
    with pytest.raises(ValueError):
        gc.common_nonneighbor_set(g, [])


def test_triangle_free():
    assert gc.is_triangle_free(gc.petersen())
    assert not gc.is_triangle_free(gc.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    for name, g in gc.srg_corpus().items():
        has_triangle = any(len(c) >= 3 for c in nx.find_cliques(to_nx(g)))
        assert gc.is_triangle_free(g) == (not has_triangle), name


# --- the bundled G2(4) graph ---------------------------------------------------

def test_g24_parameters(g24):
    assert g24.n == 416
    assert brute_srg(g24) == SrgParams(416, 100, 36, 20)


def test_g24_subconstituent_chain(g24):
    rng = random.Random(7)
    u = rng.randrange(416)
    hj = gc.local_subgraph(g24, u)
    assert gc.verify_srg(hj).params == SrgParams(100, 36, 14, 12)
    u3 = gc.local_subgraph(hj, rng.randrange(100))
    assert gc.verify_srg(u3).params == SrgParams(36, 14, 4, 6)
    leaf = gc.local_subgraph(u3, rng.randrange(36))
    assert leaf.n == 14 and set(leaf.degrees()) == {4}
    assert gc.is_triangle_free(leaf)
    assert nx.is_bipartite(to_nx(leaf))


def test_g24_common_counts(g24):
    u, v = g24.edges()[0]
    assert gc.common_neighbor_count(g24, [u, v]) == 36
    w = gc.common_neighbors(g24, [u, v])[0]
    assert gc.common_neighbor_count(g24, [u, v, w]) == 14
    counts = slice_counts(SrgParams(416, 100, 36, 20), 14)
    assert len(gc.common_nonneighbor_set(g24, [u])) == counts.n1 == 315
    assert len(gc.common_nonneighbor_set(g24, [u, v])) == counts.n2
    assert len(gc.common_nonneighbor_set(g24, [u, v, w])) == counts.n3


def test_loader_refuses_wrong_graph(tmp_path, monkeypatch):
    gc.write_graph6_file(tmp_path / gc.G2_4_FILE, gc.petersen())
    monkeypatch.setenv(gc.DATA_ENV, str(tmp_path))
    assert gc.g2_4_path() == tmp_path / gc.G2_4_FILE
    with pytest.raises(DataVerificationError):
        gc.load_g2_4()


def test_loader_detects_flipped_edge(tmp_path, g24):
    rows = list(g24.rows)
    u, v = g24.edges()[0]
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    bad = tmp_path / "bad.g6"
    gc.write_graph6_file(bad, gc.Graph(416, rows))
    with pytest.raises(DataVerificationError):
        gc.load_g2_4(bad)
