"""Finite simplicial complexes on at most 62 vertices.

A complex is stored by its maximal faces (facets), each a bitmask over vertex
indices 0..m-1.  The vertex order of the input is canonical: every sign
convention downstream derives from it.  The empty complex is the distinguished
value EMPTY; it never comes from user input, only from induced(K, 0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import CycleTooSmall, GhostVertex, UberdhError, VertexOutOfRange

MAX_VERTICES = 62


def bits_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def popcount(bits: int) -> int:
    return bin(bits).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple graph with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise UberdhError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(max(u, v), n)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def edges(self):
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.adj[u] >> v & 1]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= self.adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1


@dataclass(frozen=True)
class SimplicialComplex:
    m: int
    facets: frozenset  # of int bitmasks, pairwise inclusion-incomparable

    @property
    def is_empty(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 by convention for the empty complex."""
        if self.is_empty:
            return -1
        return max(popcount(f) for f in self.facets) - 1

    def has_face(self, bits: int) -> bool:
        if bits == 0:
            return not self.is_empty
        return any(bits & ~f == 0 for f in self.facets)

    def sorted_facets(self):
        return sorted(vertices_of(f) for f in self.facets)

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, facets={self.sorted_facets()})"


EMPTY = SimplicialComplex(0, frozenset())


def _reduce_to_maximal(masks):
    masks = sorted(set(masks), key=popcount, reverse=True)
    out = []
    for f in masks:
        if not any(f & ~g == 0 for g in out):
            out.append(f)
    return frozenset(out)


def from_facets(m: int, facets) -> SimplicialComplex:
    """Build a complex from facet vertex lists; drops non-maximal faces."""
    if m > MAX_VERTICES:
        raise UberdhError(f"at most {MAX_VERTICES} vertices supported, got {m}")
    masks = []
    for f in facets:
        for v in f:
            if not (0 <= v < m):
                raise VertexOutOfRange(v, m)
        if f:
            masks.append(bits_of(f))
    if not masks:
        if m == 0:
            return EMPTY
        raise GhostVertex(0)
    covered = 0
    for f in masks:
        covered |= f
    if covered != (1 << m) - 1:
        raise GhostVertex(next(v for v in range(m) if not covered >> v & 1))
    return SimplicialComplex(m, _reduce_to_maximal(masks))


def induced(K: SimplicialComplex, subset) -> SimplicialComplex:
    """Subcomplex induced by a vertex subset, reindexed over its vertices.

    ``subset`` is a bitmask or an iterable of vertices.  The original index of
    local vertex i is recorded in the returned complex's ``vertex_map``.
    """
    bits = subset if isinstance(subset, int) else bits_of(subset)
    if bits >> K.m:
        raise VertexOutOfRange(bits.bit_length() - 1, K.m)
    if bits == 0:
        return EMPTY
    verts = vertices_of(bits)
    local = {v: i for i, v in enumerate(verts)}
    masks = []
    for f in K.facets:
        g = f & bits
        if g:
            masks.append(bits_of(local[v] for v in vertices_of(g)))
    if not masks:
        return EMPTY
    sub = SimplicialComplex(len(verts), _reduce_to_maximal(masks))
    object.__setattr__(sub, "vertex_map", verts)
    return sub


def antistar(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Induced subcomplex on all vertices except v."""
    if not (0 <= v < K.m):
        raise VertexOutOfRange(v, K.m)
    return induced(K, ((1 << K.m) - 1) & ~(1 << v))


def faces_of_dim(K: SimplicialComplex, d: int):
    """All d-faces as increasing vertex tuples, in lexicographic order.

    This order is the basis order for every boundary matrix downstream.
    """
    assert d >= 0
    seen = set()
    for f in K.facets:
        verts = vertices_of(f)
        if len(verts) > d:
            seen.update(combinations(verts, d + 1))
    return sorted(seen)


def all_faces(K: SimplicialComplex):
    """Faces grouped by dimension: list indexed by d of lexicographic d-face lists."""
    out = []
    d = 0
    while True:
        faces = faces_of_dim(K, d)
        if not faces:
            break
        out.append(faces)
        d += 1
    return out


def one_skeleton(K: SimplicialComplex) -> Graph:
    return Graph.from_edges(K.m, faces_of_dim(K, 1))


def is_simplex(K: SimplicialComplex) -> bool:
    return K.facets == frozenset({(1 << K.m) - 1}) and K.m > 0


def is_connected(K: SimplicialComplex) -> bool:
    """Connectivity of the 1-skeleton; EMPTY and a point count as connected."""
    if K.is_empty or K.m == 1:
        return True
    return one_skeleton(K).is_connected()


# ---------------------------------------------------------------------------
# standard generators


def simplex(m: int) -> SimplicialComplex:
    return from_facets(m, [list(range(m))])


def boundary_simplex(m: int) -> SimplicialComplex:
    """Boundary of the (m-1)-simplex: all (m-1)-subsets of the vertex set."""
    if m < 2:
        raise UberdhError("boundary_simplex needs m >= 2")
    return from_facets(m, [list(c) for c in combinations(range(m), m - 1)])


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise CycleTooSmall(n)
    return from_facets(n, [[i, (i + 1) % n] for i in range(n)])


def icosahedron() -> SimplicialComplex:
    """The standard 12-vertex triangulation of S^2 (f-vector 12, 30, 20).

    Vertex 0 is the north pole, 1..5 the upper pentagon, 6..10 the lower
    pentagon, 11 the south pole.
    """
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    tris = []
    for i in range(5):
        j = (i + 1) % 5
        tris.append([0, up[i], up[j]])
        tris.append([11, lo[i], lo[j]])
        tris.append([up[i], up[j], lo[i]])
        tris.append([up[j], lo[i], lo[j]])
    return from_facets(12, tris)


def flag_complex(G: Graph) -> SimplicialComplex:
    """Clique complex of a graph: facets are the maximal cliques."""
    cliques = []

    def bron_kerbosch(r, p, x):
        if not p and not x:
            cliques.append(r)
            return
        pivot_pool = p | x
        u = (pivot_pool & -pivot_pool).bit_length() - 1
        cand = p & ~G.adj[u]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            bron_kerbosch(r | low, p & G.adj[v], x & G.adj[v])
            p &= ~low
            x |= low
            cand ^= low
    if G.n == 0:
        raise UberdhError("flag complex of the empty graph is not supported")
    bron_kerbosch(0, (1 << G.n) - 1, 0)
    return from_facets(G.n, [vertices_of(c) for c in cliques])


# ---------------------------------------------------------------------------
# ingestion formats


def from_json_obj(obj) -> SimplicialComplex:
    if not isinstance(obj, dict) or "m" not in obj or "facets" not in obj:
        raise UberdhError('expected {"m": <int>, "facets": [[...], ...]}')
    return from_facets(int(obj["m"]), obj["facets"])


def to_json_obj(K: SimplicialComplex) -> dict:
    return {"schema": 1, "m": K.m, "facets": [list(f) for f in K.sorted_facets()]}


def parse_text(text: str, vertices: int | None = None) -> SimplicialComplex:
    """One facet per line, whitespace-separated vertex indices."""
    facets = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            facets.append([int(tok) for tok in line.split()])
    if not facets:
        raise UberdhError("no facets in input")
    m = vertices if vertices is not None else max(max(f) for f in facets) + 1
    return from_facets(m, facets)


def parse_input(text: str, vertices: int | None = None) -> SimplicialComplex:
    text = text.strip()
    if text.startswith("{"):
        return from_json_obj(json.loads(text))
    return parse_text(text, vertices)
