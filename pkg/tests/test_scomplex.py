"""Complex construction, generators, induced subcomplexes, and parsing."""

import json
import random
from itertools import combinations

import pytest

from uberdh.errors import (CycleTooSmall, GhostVertex, UberdhError,
                           VertexOutOfRange)
from uberdh.scomplex import (EMPTY, Graph, SimplicialComplex, all_faces,
                             antistar, bits_of, boundary_simplex, cycle,
                             faces_of_dim, flag_complex, from_facets,
                             from_json_obj, icosahedron, induced, is_connected,
                             is_simplex, one_skeleton, parse_input, parse_text,
                             simplex, to_json_obj, vertices_of)


def f_vector(K):
    return [len(lvl) for lvl in all_faces(K)]


def test_bits_roundtrip():
    assert vertices_of(bits_of([0, 3, 5])) == (0, 3, 5)
    assert bits_of(()) == 0 and vertices_of(0) == ()


def test_from_facets_drops_non_maximal():
    K = from_facets(3, [[0, 1, 2], [0, 1], [2]])
    assert K.sorted_facets() == [(0, 1, 2)]
    assert K.dim == 2 and K.m == 3


def test_from_facets_errors():
    with pytest.raises(VertexOutOfRange):
        from_facets(2, [[0, 2]])
    with pytest.raises(GhostVertex):
        from_facets(3, [[0, 1]])  # vertex 2 in no facet
    with pytest.raises(UberdhError):
        from_facets(63, [list(range(63))])


def test_empty_complex():
    assert EMPTY.is_empty and EMPTY.dim == -1 and EMPTY.m == 0
    assert from_facets(0, []) is EMPTY
    assert not EMPTY.has_face(0)


def test_generators_f_vectors():
    assert f_vector(simplex(3)) == [3, 3, 1]
    assert f_vector(boundary_simplex(4)) == [4, 6, 4]
    assert f_vector(cycle(5)) == [5, 5]
    assert f_vector(icosahedron()) == [12, 30, 20]
    with pytest.raises(UberdhError):
        boundary_simplex(1)
    with pytest.raises(CycleTooSmall):
        cycle(2)


def test_simplex_and_connectivity_predicates():
    assert is_simplex(simplex(4))
    assert not is_simplex(boundary_simplex(3))
    assert not is_simplex(EMPTY)
    assert is_connected(cycle(6))
    assert is_connected(EMPTY) and is_connected(simplex(1))
    assert not is_connected(boundary_simplex(2))  # two isolated points


def test_faces_are_lexicographic():
    K = boundary_simplex(4)
    assert faces_of_dim(K, 1) == sorted(combinations(range(4), 2))
    assert faces_of_dim(K, 0) == [(v,) for v in range(4)]


def test_induced_subcomplex_and_antistar():
    K = cycle(5)
    sub = induced(K, [0, 1, 2])
    assert sub.sorted_facets() == [(0, 1), (1, 2)]
    assert sub.vertex_map == (0, 1, 2)
    assert induced(K, 0) is EMPTY
    anti = antistar(K, 0)
    # a path on vertices 1..4, reindexed to 0..3
    assert anti.m == 4 and anti.dim == 1 and len(anti.facets) == 3
    with pytest.raises(VertexOutOfRange):
        antistar(K, 5)
    with pytest.raises(VertexOutOfRange):
        induced(K, 1 << 5)


def test_one_skeleton_and_graph():
    G = one_skeleton(boundary_simplex(3))
    assert sorted(G.edges) == [(0, 1), (0, 2), (1, 2)]
    assert G.is_connected()
    assert not Graph.from_edges(4, [(0, 1), (2, 3)]).is_connected()
    with pytest.raises(UberdhError):
        Graph.from_edges(2, [(0, 0)])


def test_flag_complex_matches_brute_force_cliques():
    rng = random.Random(41)
    for _ in range(20):
        n = rng.randint(2, 7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        covered = set(v for e in edges for v in e)
        if covered != set(range(n)):
            continue
        G = Graph.from_edges(n, edges)
        K = flag_complex(G)
        adj = G.adj
        for d in range(n):
            found = set(faces_of_dim(K, d)) if d < len(all_faces(K)) else set()
            expect = set()
            for c in combinations(range(n), d + 1):
                if all(adj[u] >> v & 1 for u, v in combinations(c, 2)):
                    expect.add(c)
            assert found == expect


def test_json_and_text_round_trips():
    K = cycle(4)
    obj = to_json_obj(K)
    assert obj["schema"] == 1
    assert from_json_obj(obj) == K
    assert from_json_obj(json.loads(json.dumps(obj))) == K

    text = "0 1\n1 2\n2 3\n0 3\n"
    assert parse_text(text) == K
    assert parse_input(json.dumps(obj)) == K
    assert parse_input(text) == K
    with pytest.raises(UberdhError):
        parse_text("")
    with pytest.raises(UberdhError):
        from_json_obj({"m": 2})


def test_facets_are_incomparable_invariant():
    rng = random.Random(7)
    for _ in range(20):
        m = rng.randint(1, 6)
        raw = [[v for v in range(m) if rng.random() < 0.6] or [rng.randrange(m)]
               for _ in range(rng.randint(1, 5))]
        for v in range(m):
            if not any(v in f for f in raw):
                raw.append([v])
        K = from_facets(m, raw)
        for a in K.facets:
            for b in K.facets:
                if a != b:
                    assert a & ~b != 0 and b & ~a != 0
