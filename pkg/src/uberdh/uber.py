"""Bicolourings, horizontal homology, and the triply graded cube homology.

A colouring is a bitmask over the vertices (bit set = colour 1 = black).  The
weight-preserving part of the simplicial differential deletes black vertices
only; its homology sits on the vertices of the Boolean cube, and the cube
edges carry the weight-preserving parts of identity maps.  Taking homology of
the resulting level-graded complex yields the triply graded theory; its
weight-zero slice admits a fast path through the table of unreduced subset
homologies.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .cubediff import cube_sign, subsets_by_size
from .errors import NotCubeEdge
from .exactla import Coeffs
from .homology import (_mat_from_entries, _mat_zeros, face_index, homology_of_pair,
                       subset_homology_table)
from .scomplex import SimplicialComplex, is_connected, popcount


def weight(face, eps: int) -> int:
    """Number of 0-coloured vertices of a face (tuple of vertices or bitmask)."""
    bits = face
    if not isinstance(face, int):
        bits = 0
        for v in face:
            bits |= 1 << v
    return popcount(bits & ~eps)


def colouring_level(eps: int) -> int:
    return popcount(eps)


@dataclass
class HorizontalComplex:
    """Faces graded by (dimension, weight) with the black-deletion differential."""

    eps: int
    basis: dict      # (i, k) -> list of global face ids, in lexicographic order
    boundary: dict   # (i, k) -> matrix to (i-1, k)
    coeffs: Coeffs

    def dim_at(self, i, k):
        return len(self.basis.get((i, k), ()))

    def boundary_or_zero(self, i, k):
        if (i, k) in self.boundary:
            return self.boundary[(i, k)]
        return _mat_zeros(self.coeffs, self.dim_at(i - 1, k), self.dim_at(i, k))


def horizontal_complex(K: SimplicialComplex, eps: int, coeffs: Coeffs) -> HorizontalComplex:
    faces, masks, tmpl = face_index(K)
    basis = {}
    index = {}
    for i, lvl in enumerate(masks):
        for fid, b in enumerate(lvl):
            key = (i, popcount(b & ~eps))
            index.setdefault(key, {})[fid] = len(basis.setdefault(key, []))
            basis[key].append(fid)
    boundary = {}
    for (i, k), ids in basis.items():
        if i == 0 or (i - 1, k) not in basis:
            continue
        lower = index[(i - 1, k)]
        entries = []
        for col, fid in enumerate(ids):
            for sub, sign, v in tmpl[i][fid]:
                if eps >> v & 1:  # deleting a black vertex preserves the weight
                    entries.append((lower[sub], col, sign))
        boundary[(i, k)] = _mat_from_entries(coeffs, len(basis[(i - 1, k)]), len(ids), entries)
    hc = HorizontalComplex(eps, basis, boundary, coeffs)
    for (i, k), mat in boundary.items():
        if (i - 1, k) in boundary:
            assert boundary[(i - 1, k)].mul(mat).is_zero(), "horizontal d.d != 0"
    return hc


def horizontal_homology(K: SimplicialComplex, eps: int, coeffs: Coeffs, with_basis=False):
    """(i, k) -> (GroupClass, reps, proj); zero bidegrees dropped."""
    hc = horizontal_complex(K, eps, coeffs)
    out = {}
    for (i, k) in hc.basis:
        d_out = hc.boundary_or_zero(i, k)
        d_in = hc.boundary_or_zero(i + 1, k)
        cls, reps, proj = homology_of_pair(coeffs, d_in, d_out, with_basis)
        if not cls.is_zero:
            out[(i, k)] = (cls, reps, proj)
    return hc, out


def uber_edge_sign(eps: int, eps2: int) -> int:
    """Sign of the cube edge from eps to eps2 (one 0-bit flipped to 1)."""
    diff = eps ^ eps2
    if eps2 != eps | diff or popcount(diff) != 1 or eps & diff:
        raise NotCubeEdge(f"{eps:b} -> {eps2:b}")
    return cube_sign(eps, diff.bit_length() - 1)


def _edge_chain_matrix(coeffs, src: HorizontalComplex, tgt: HorizontalComplex,
                       masks, i, k, v, sign):
    """Chain-level edge map at bidegree (i, k): sign on faces avoiding v, else 0."""
    s_ids = src.basis.get((i, k), [])
    t_index = {fid: r for r, fid in enumerate(tgt.basis.get((i, k), []))}
    entries = []
    for col, fid in enumerate(s_ids):
        if not masks[i][fid] >> v & 1:
            entries.append((t_index[fid], col, sign))
    return _mat_from_entries(coeffs, len(t_index), len(s_ids), entries)


def uber_edge_map(K: SimplicialComplex, eps: int, eps2: int, coeffs: Coeffs):
    """Induced maps on horizontal homology along a cube edge, per bidegree."""
    sign = uber_edge_sign(eps, eps2)
    v = (eps ^ eps2).bit_length() - 1
    faces, masks, _tmpl = face_index(K)
    s_hc, s_hom = horizontal_homology(K, eps, coeffs, with_basis=True)
    t_hc, t_hom = horizontal_homology(K, eps2, coeffs, with_basis=True)
    out = {}
    for (i, k), (s_cls, s_reps, _) in s_hom.items():
        if (i, k) not in t_hom:
            continue
        t_cls, _, t_proj = t_hom[(i, k)]
        chain = _edge_chain_matrix(coeffs, s_hc, t_hc, masks, i, k, v, sign)
        out[(i, k)] = t_proj.mul(chain.mul(s_reps))
    return out


def _level_graded_homology(coeffs, level_members, dims, build_block):
    """Homology of a cochain complex graded by cube level.

    ``level_members[j]`` lists the cube vertices at level j (numeric order),
    ``dims[eps]`` the local module dimension, and ``build_block(eps, eps2)``
    the edge block.  Returns {j: GroupClass}, zero groups dropped.
    """
    m = len(level_members) - 1
    offsets = []
    for members in level_members:
        off, pos = {}, 0
        for eps in members:
            off[eps] = pos
            pos += dims[eps]
        offsets.append((off, pos))
    diffs = []
    for j in range(m):
        src_off, ncols = offsets[j]
        tgt_off, nrows = offsets[j + 1]
        D = _mat_zeros(coeffs, nrows, ncols)
        for eps in level_members[j]:
            if dims[eps] == 0:
                continue
            white = ~eps
            for v in range(m):
                if not white >> v & 1:
                    continue
                eps2 = eps | 1 << v
                if dims[eps2] == 0:
                    continue
                block = build_block(eps, eps2)
                D.paste(tgt_off[eps2], src_off[eps], block)
        diffs.append(D)
    for j in range(m - 1):
        assert diffs[j + 1].mul(diffs[j]).is_zero(), "cube differential squared != 0"
    out = {}
    for j in range(m + 1):
        d_in = diffs[j - 1] if j > 0 else _mat_zeros(coeffs, offsets[j][1], 0)
        d_out = diffs[j] if j < m else _mat_zeros(coeffs, 0, offsets[j][1])
        cls, _, _ = homology_of_pair(coeffs, d_in, d_out)
        if not cls.is_zero:
            out[j] = cls
    return out


def uberhomology(K: SimplicialComplex, coeffs: Coeffs):
    """Full triply graded homology: (j, k, i) -> GroupClass."""
    if not is_connected(K):
        warnings.warn("input complex is disconnected; the chain-level "
                      "construction still applies", stacklevel=2)
    m = K.m
    faces, masks, _ = face_index(K)
    data = []
    for eps in range(1 << m):
        hc, hom = horizontal_homology(K, eps, coeffs, with_basis=True)
        data.append((hc, hom))
    bidegrees = sorted({bd for _, hom in data for bd in hom})
    levels = subsets_by_size(m)
    result = {}
    for (i, k) in bidegrees:
        dims = [data[eps][1][(i, k)][0].rank if (i, k) in data[eps][1] else 0
                for eps in range(1 << m)]

        def block(eps, eps2, _bd=(i, k)):
            s_hc, s_hom = data[eps]
            t_hc, t_hom = data[eps2]
            sign = uber_edge_sign(eps, eps2)
            v = (eps ^ eps2).bit_length() - 1
            chain = _edge_chain_matrix(coeffs, s_hc, t_hc, masks, _bd[0], _bd[1], v, sign)
            return t_hom[_bd][2].mul(chain.mul(s_hom[_bd][1]))

        for j, cls in _level_graded_homology(coeffs, levels, dims, block).items():
            result[(j, k, i)] = cls
    return result


def uber_B(K: SimplicialComplex, coeffs: Coeffs, table=None, workers=None):
    """Degree-zero (weight-zero) cube homology, (j, i) -> GroupClass.

    Computed without horizontal homology: cube vertex eps carries the unreduced
    homology of the subcomplex induced by its black vertices, edges carry the
    signed inclusion-induced maps.
    """
    if table is None:
        table = subset_homology_table(K, reduced=False, coeffs=coeffs, workers=workers)
    assert not table.reduced
    m = K.m
    levels = subsets_by_size(m)
    result = {}
    for i in range(0, max(K.dim, 0) + 1):
        table.check_no_torsion(i)
        dims = [table.rank(bits, i) for bits in range(1 << m)]

        def block(bits, bits2, _deg=i):
            j = (bits ^ bits2).bit_length() - 1
            blk = table.inclusion_map(bits, j, _deg)
            if cube_sign(bits, j) == 1:
                return blk
            neg = _mat_zeros(coeffs, blk.nrows, blk.ncols)
            neg.paste(0, 0, blk, -1)
            return neg

        for j, cls in _level_graded_homology(coeffs, levels, dims, block).items():
            result[(j, i)] = cls
    return result
