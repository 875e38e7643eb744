"""Seeded generators of complexes and graphs for the property suites.

Everything takes an explicit random.Random so suites are reproducible from a
single seed; nothing here touches the global RNG state.
"""

from __future__ import annotations

import random
from itertools import combinations

from .scomplex import (Graph, SimplicialComplex, flag_complex, from_facets,
                       is_connected, is_simplex, popcount, vertices_of)


def random_complex(rng: random.Random, m: int, require_connected=True,
                   allow_simplex=False, max_facets=8) -> SimplicialComplex:
    """Random complex on exactly m vertices, no ghost vertices."""
    while True:
        nf = rng.randint(2, max_facets)
        facets = []
        for _ in range(nf):
            size = rng.randint(1, m)
            facets.append(rng.sample(range(m), size))
        if {v for f in facets for v in f} != set(range(m)):
            continue
        K = from_facets(m, facets)
        if require_connected and not is_connected(K):
            continue
        if not allow_simplex and is_simplex(K):
            continue
        return K


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform-attachment random tree on n >= 1 vertices."""
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def random_chordal_graph(rng: random.Random, n: int,
                         allow_complete=False) -> Graph:
    """Connected chordal graph built by attaching each new vertex to a clique."""
    while True:
        adj = [0] * n
        for v in range(1, n):
            anchor = rng.randrange(v)
            clique = {anchor}
            candidates = [u for u in range(v) if adj[anchor] >> u & 1]
            rng.shuffle(candidates)
            for u in candidates:
                if all(adj[u] >> w & 1 for w in clique):
                    if rng.random() < 0.6:
                        clique.add(u)
            for u in clique:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
        G = Graph(n, tuple(adj))
        if not allow_complete and all(bin(a).count("1") == n - 1 for a in adj):
            continue
        return G


def random_flag_of_chordal(rng: random.Random, n: int) -> SimplicialComplex:
    return flag_complex(random_chordal_graph(rng, n))


def all_complexes(m: int, require_cover=True):
    """Every complex on exactly m vertices (facet antichains; no ghost
    vertices when require_cover).  Practical for m <= 4."""
    masks = list(range(1, 1 << m))
    out = []
    full = (1 << m) - 1

    def extend(idx, chosen, covered):
        if idx == len(masks):
            if chosen and (not require_cover or covered == full):
                out.append(SimplicialComplex(m, frozenset(chosen)))
            return
        extend(idx + 1, chosen, covered)
        cand = masks[idx]
        for f in chosen:
            if f & cand == cand or f & cand == f:
                return  # comparable with an earlier (smaller) mask; prune branch
        extend(idx + 1, chosen + [cand], covered | cand)

    extend(0, [], 0)
    return out


def permute_complex(K: SimplicialComplex, perm) -> SimplicialComplex:
    """Relabel vertices by perm (a list with perm[old] = new)."""
    facets = [[perm[v] for v in vertices_of(f)] for f in K.facets]
    return from_facets(K.m, facets)
