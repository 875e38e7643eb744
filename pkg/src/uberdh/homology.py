"""Simplicial chain complexes and the table of homologies of induced subcomplexes.

Subcomplexes are kept in the ambient complex's global vertex coordinates, so a
face of K[I] is literally a face of K[I + j] and subset-inclusion chain maps
are 0/1 basis inclusions.  Each homology group is stored with a deterministic
basis (cycle representatives plus a coordinate projection), which is what the
cube differentials of the downstream theories consume.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import scomplex
from .errors import SizeCap, TorsionObstruction, UberdhError
from .exactla import Coeffs, GroupClass, IntMatrix, fieldmat, z_homology
from .scomplex import SimplicialComplex, popcount

DEFAULT_VERTEX_CAP = 20

AUG = -1  # sentinel face id for the degree -1 augmentation generator


@lru_cache(maxsize=64)
def face_index(K: SimplicialComplex):
    """Per-dimension face lists, face bitmasks, and boundary templates for K.

    boundary[d][i] lists, for the i-th d-face, one triple per vertex deletion:
    (index of the resulting (d-1)-face, (-1)^r, deleted vertex).
    """
    faces = scomplex.all_faces(K)
    bitmasks = [[scomplex.bits_of(f) for f in lvl] for lvl in faces]
    boundary = []
    for d, lvl in enumerate(faces):
        if d == 0:
            boundary.append([[] for _ in lvl])
            continue
        lower = {f: i for i, f in enumerate(faces[d - 1])}
        tmpl = []
        for f in lvl:
            tmpl.append([(lower[f[:r] + f[r + 1:]], -1 if r % 2 else 1, f[r])
                         for r in range(len(f))])
        boundary.append(tmpl)
    return faces, bitmasks, boundary


def _mat_zeros(coeffs, r, c):
    return IntMatrix.zeros(r, c) if not coeffs.is_field else fieldmat.zeros(coeffs, r, c)


def _mat_from_entries(coeffs, r, c, entries):
    if coeffs.is_field:
        return fieldmat.from_entries(coeffs, r, c, entries)
    return IntMatrix.from_entries(r, c, entries)


def homology_of_pair(coeffs, d_in, d_out, with_basis=False):
    """(GroupClass, reps, proj) for ker(d_out)/im(d_in) over the chosen coefficients."""
    if coeffs.is_field:
        h = fieldmat.field_homology(coeffs, d_in, d_out, with_basis=with_basis)
        return GroupClass(h.dim, (), coeffs.tag), h.reps, h.proj
    zh = z_homology(d_in, d_out, with_basis=with_basis)
    return zh.cls, zh.reps, zh.proj


@dataclass
class ChainComplex:
    """Chain data of one induced subcomplex, in global face coordinates."""

    coeffs: Coeffs
    reduced: bool
    basis: dict  # degree -> list of face ids (AUG sentinel in degree -1)
    boundary: dict  # degree d -> matrix C_d -> C_{d-1}

    def degrees(self):
        return sorted(self.basis)

    def dim_at(self, d):
        return len(self.basis.get(d, ()))

    def boundary_or_zero(self, d):
        """The boundary map leaving degree d, as a matrix (possibly empty)."""
        if d in self.boundary:
            return self.boundary[d]
        return _mat_zeros(self.coeffs, self.dim_at(d - 1), self.dim_at(d))


def subset_chain(K: SimplicialComplex, bits: int, reduced: bool, coeffs: Coeffs) -> ChainComplex:
    """Chain complex of K[bits] (reduced adds the augmentation in degree -1)."""
    faces, masks, tmpl = face_index(K)
    basis = {}
    index_of = []
    for d in range(len(faces)):
        ids = [i for i, b in enumerate(masks[d]) if b & ~bits == 0]
        if not ids:
            break
        basis[d] = ids
        index_of.append({fid: r for r, fid in enumerate(ids)})
    if reduced:
        basis[-1] = [AUG]
    boundary = {}
    for d in sorted(basis):
        if d <= 0 or (d - 1) not in basis:
            continue
        lower = index_of[d - 1]
        entries = []
        for col, fid in enumerate(basis[d]):
            for sub, sign, _v in tmpl[d][fid]:
                entries.append((lower[sub], col, sign))
        boundary[d] = _mat_from_entries(coeffs, len(basis[d - 1]), len(basis[d]), entries)
    if reduced and 0 in basis:
        boundary[0] = _mat_from_entries(
            coeffs, 1, len(basis[0]), [(0, c, 1) for c in range(len(basis[0]))])
    for d in boundary:
        if d - 1 in boundary:
            assert boundary[d - 1].mul(boundary[d]).is_zero(), "d.d != 0"
    return ChainComplex(coeffs, reduced, basis, boundary)


def chain_complex(K: SimplicialComplex, reduced: bool, coeffs: Coeffs) -> ChainComplex:
    return subset_chain(K, (1 << K.m) - 1, reduced, coeffs)


def graded_homology(chain: ChainComplex, with_basis=False):
    """degree -> (GroupClass, reps, proj); zero groups are dropped."""
    out = {}
    for d in chain.degrees():
        d_out = chain.boundary_or_zero(d)
        d_in = chain.boundary_or_zero(d + 1)
        cls, reps, proj = homology_of_pair(chain.coeffs, d_in, d_out, with_basis)
        if not cls.is_zero:
            out[d] = (cls, reps, proj)
    return out


def homology(K: SimplicialComplex, reduced: bool, coeffs: Coeffs):
    """Graded homology of K as a sparse degree -> GroupClass map."""
    chain = chain_complex(K, reduced, coeffs)
    return {d: cls for d, (cls, _, _) in graded_homology(chain).items()}


# ---------------------------------------------------------------------------
# the table over all 2^m subsets


_WORKER_STATE = {}


def _worker_init(K, reduced, coeffs):
    _WORKER_STATE["args"] = (K, reduced, coeffs)


def _worker_chunk(bits_list):
    K, reduced, coeffs = _WORKER_STATE["args"]
    out = {}
    for bits in bits_list:
        chain = subset_chain(K, bits, reduced, coeffs)
        out[bits] = {d: cls for d, (cls, _, _) in graded_homology(chain).items()}
    return out


class SubsetHomologyTable:
    """Homology of K[I] for every I, with lazily cached homology bases."""

    def __init__(self, K, reduced, coeffs, groups):
        self.K = K
        self.reduced = reduced
        self.coeffs = coeffs
        self.groups = groups  # bits -> {degree -> GroupClass}
        self._chains = {}
        self._bases = {}

    def group(self, bits, deg) -> GroupClass:
        zero = GroupClass(0, (), self.coeffs.tag)
        return self.groups.get(bits, {}).get(deg, zero)

    def rank(self, bits, deg) -> int:
        return self.group(bits, deg).rank

    def check_no_torsion(self, deg):
        """Integer-mode cube assemblies treat each vertex group as free of the
        stored rank, which silently discards torsion summands; refuse instead."""
        if self.coeffs.is_field:
            return
        for bits, by_deg in self.groups.items():
            cls = by_deg.get(deg)
            if cls is not None and cls.torsion:
                raise TorsionObstruction(
                    f"subset {bits:#x} has torsion {cls.torsion} in degree {deg}; "
                    f"use q or f2/fp coefficients")

    def chain(self, bits) -> ChainComplex:
        if bits not in self._chains:
            self._chains[bits] = subset_chain(self.K, bits, self.reduced, self.coeffs)
        return self._chains[bits]

    def basis(self, bits, deg):
        """(reps, proj) for the homology of K[bits] in the given degree."""
        key = (bits, deg)
        if key not in self._bases:
            chain = self.chain(bits)
            d_out = chain.boundary_or_zero(deg)
            d_in = chain.boundary_or_zero(deg + 1)
            cls, reps, proj = homology_of_pair(self.coeffs, d_in, d_out, with_basis=True)
            assert cls == self.group(bits, deg)
            self._bases[key] = (reps, proj)
        return self._bases[key]

    def inclusion_map(self, bits, j, deg):
        """Matrix of H_deg(K[I]) -> H_deg(K[I + j]) in the stored bases."""
        assert not bits >> j & 1, "vertex already present"
        target_bits = bits | 1 << j
        src = self.group(bits, deg)
        tgt = self.group(target_bits, deg)
        if src.rank == 0 or tgt.rank == 0:
            return _mat_zeros(self.coeffs, tgt.rank, src.rank)
        s_chain, t_chain = self.chain(bits), self.chain(target_bits)
        rows = {fid: r for r, fid in enumerate(t_chain.basis.get(deg, ()))}
        entries = [(rows[fid], c, 1) for c, fid in enumerate(s_chain.basis.get(deg, ()))]
        incl = _mat_from_entries(self.coeffs, t_chain.dim_at(deg), s_chain.dim_at(deg), entries)
        s_reps, _ = self.basis(bits, deg)
        _, t_proj = self.basis(target_bits, deg)
        return t_proj.mul(incl.mul(s_reps))


def _table_hash(K, reduced, coeffs):
    payload = f"{K.m}|{K.sorted_facets()}|{int(reduced)}|{coeffs}"
    return hashlib.sha256(payload.encode()).hexdigest()


def save_table_cache(table: SubsetHomologyTable, path):
    lines = [f"# uberdh-table 1 {_table_hash(table.K, table.reduced, table.coeffs)}"]
    for bits in sorted(table.groups):
        for deg in sorted(table.groups[bits]):
            cls = table.groups[bits][deg]
            tors = ",".join(str(d) for d in cls.torsion)
            lines.append(f"{bits:x} {deg} {cls.rank} {tors}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_table_cache(K, reduced, coeffs, path):
    """Returns the cached groups map, or None on any mismatch."""
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != f"# uberdh-table 1 {_table_hash(K, reduced, coeffs)}":
        return None
    groups = {bits: {} for bits in range(1 << K.m)}
    for line in lines[1:]:
        if not line.strip():
            continue
        hexbits, deg, rank, tors = (line.split(" ") + [""])[:4]
        torsion = tuple(int(t) for t in tors.split(",") if t)
        groups[int(hexbits, 16)][int(deg)] = GroupClass(int(rank), torsion, coeffs.tag)
    return groups


def subset_homology_table(K: SimplicialComplex, reduced: bool, coeffs: Coeffs,
                          workers: int | None = None, vertex_cap: int = DEFAULT_VERTEX_CAP,
                          cache_path=None) -> SubsetHomologyTable:
    """Homology of every induced subcomplex of K; parallel over subsets."""
    if K.m > vertex_cap:
        raise SizeCap(f"2^{K.m} subsets exceed the configured cap (m <= {vertex_cap})")
    if cache_path:
        cached = load_table_cache(K, reduced, coeffs, cache_path)
        if cached is not None:
            return SubsetHomologyTable(K, reduced, coeffs, cached)
    if workers is None:
        workers = int(os.environ.get("UBERDH_WORKERS", "1"))
    subsets = list(range(1 << K.m))
    groups = {}
    if workers > 1 and len(subsets) >= 64:
        chunks = [subsets[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers, initializer=_worker_init,
                                 initargs=(K, reduced, coeffs)) as pool:
            for part in pool.map(_worker_chunk, chunks):
                groups.update(part)
    else:
        _worker_init(K, reduced, coeffs)
        groups.update(_worker_chunk(subsets))
    table = SubsetHomologyTable(K, reduced, coeffs, groups)
    if cache_path:
        save_table_cache(table, cache_path)
    return table
