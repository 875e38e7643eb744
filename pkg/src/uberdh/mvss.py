"""Augmented Mayer-Vietoris spectral sequence for the anti-star cover.

The cover sets are the anti-stars of the vertices; an intersection over a
nerve simplex sigma is the induced subcomplex on I = V minus sigma, so pages
are indexed here by the complement subsets: the entry at (p, q) aggregates
the subsets I with |I| = m - p - 1.  Column p = -1 is the augmentation by the
homology of K itself; in the reduced variant the empty subset contributes the
(-1)-degree class at (p, q) = (m-1, -1).  First-page differentials are the
same signed inclusion maps that drive double homology, so the second-page
comparison against it is a literal table equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubediff import cube_sign, eq4_sign, level_map, subsets_by_size
from .errors import IsSimplex, NotAComplex
from .exactla import Coeffs, GroupClass, IntMatrix, Z, direct_sum, snf_full
from .homology import (SubsetHomologyTable, _mat_zeros, homology_of_pair,
                       subset_chain, subset_homology_table)
from .scomplex import SimplicialComplex, is_simplex, popcount

UNREDUCED = "unreduced-augmented"
REDUCED = "reduced-augmented"
VARIANTS = (UNREDUCED, REDUCED)


@dataclass
class SpectralPage:
    variant: str
    page: int  # 1 or 2
    coeffs: Coeffs
    entries: dict  # (p, q) -> GroupClass
    diffs: dict | None = None  # page 1 only: (p, q) -> matrix to (p-1, q)

    def group(self, p, q) -> GroupClass:
        return self.entries.get((p, q), GroupClass(0, (), self.coeffs.tag))

    def rows(self):
        return sorted({q for _, q in self.entries})

    def to_records(self):
        return {"variant": self.variant, "page": self.page,
                "entries": [{"p": p, "q": q, "rank": cls.rank,
                             "torsion": list(cls.torsion)}
                            for (p, q), cls in sorted(self.entries.items())]}


def _variant_table(K, variant, coeffs, table, workers):
    assert variant in VARIANTS
    if table is None:
        table = subset_homology_table(K, reduced=(variant == REDUCED),
                                      coeffs=coeffs, workers=workers)
    assert table.reduced == (variant == REDUCED) and table.coeffs == coeffs
    return table


def e1_page(K: SimplicialComplex, variant: str, coeffs: Coeffs,
            table: SubsetHomologyTable | None = None, workers=None,
            with_diffs: bool = True) -> SpectralPage:
    table = _variant_table(K, variant, coeffs, table, workers)
    m = K.m
    entries = {}
    acc = {}
    for bits, by_deg in table.groups.items():
        p = m - popcount(bits) - 1
        for q, cls in by_deg.items():
            acc.setdefault((p, q), []).append(cls)
    for key, classes in acc.items():
        total = direct_sum(classes)
        if not total.is_zero:
            entries[key] = total
    diffs = None
    if with_diffs:
        diffs = {(p, q): level_map(table, q, m - p - 1, eq4_sign(q))
                 for (p, q) in entries if p >= 0}
        for (p, q), D in diffs.items():
            nxt = diffs.get((p - 1, q))
            if nxt is not None:
                assert nxt.mul(D).is_zero(), "first-page differential squared != 0"
    return SpectralPage(variant, 1, coeffs, entries, diffs)


def e2_page(K: SimplicialComplex, variant: str, coeffs: Coeffs,
            table: SubsetHomologyTable | None = None, workers=None) -> SpectralPage:
    table = _variant_table(K, variant, coeffs, table, workers)
    m = K.m
    levels = subsets_by_size(m)
    degrees = sorted({q for by_deg in table.groups.values() for q in by_deg})
    entries = {}
    for q in degrees:
        dims = [sum(table.rank(bits, q) for bits in levels[l]) for l in range(m + 1)]
        diffs = [level_map(table, q, l, eq4_sign(q)) for l in range(m)]
        for l in range(m + 1):
            d_in = diffs[l - 1] if l > 0 else _mat_zeros(coeffs, dims[0], 0)
            d_out = diffs[l] if l < m else _mat_zeros(coeffs, 0, dims[m])
            cls, _, _ = homology_of_pair(coeffs, d_in, d_out)
            if not cls.is_zero:
                entries[(m - l - 1, q)] = cls
    return SpectralPage(variant, 2, coeffs, entries)


def euler_row0(K: SimplicialComplex, variant: str, coeffs: Coeffs,
               table: SubsetHomologyTable | None = None, workers=None) -> int:
    """Alternating sum over p of the free ranks in row q = 0 of the first page."""
    page = e1_page(K, variant, coeffs, table=table, workers=workers, with_diffs=False)
    total = 0
    for (p, q), cls in page.entries.items():
        if q == 0:
            total += cls.rank if p % 2 == 0 else -cls.rank
    return total


# ---------------------------------------------------------------------------
# chain-level total complex of the augmented double complex


def total_acyclicity_check(K: SimplicialComplex) -> bool:
    """Whether the total complex of the chain-level augmented double complex
    is acyclic over the integers.

    Columns are the reduced chain complexes of every K[I] (the full subset
    gives the augmentation column, the empty subset the (-1)-row class);
    horizontal maps are signed chain inclusions, vertical maps the boundary
    operators with a (-1)^p twist so the total differential squares to zero.
    """
    if is_simplex(K):
        raise IsSimplex("the total complex of a simplex cone is not in scope")
    m = K.m
    chains = {bits: subset_chain(K, bits, reduced=True, coeffs=Z)
              for bits in range(1 << m)}
    # global positions: degree n -> list of (bits, q, local index)
    layout = {}
    for bits, chain in chains.items():
        p = m - popcount(bits) - 1
        for q in chain.basis:
            lot = layout.setdefault(p + q, [])
            for loc in range(chain.dim_at(q)):
                lot.append((bits, q, loc))
    degrees = sorted(layout)
    pos = {n: {(b, q, loc): i for i, (b, q, loc) in enumerate(layout[n])}
           for n in degrees}

    def build_diff(n):
        """Total differential T_n -> T_{n-1}."""
        src = layout.get(n, [])
        tgt_pos = pos.get(n - 1, {})
        D = IntMatrix.zeros(len(tgt_pos), len(src))
        for col, (bits, q, loc) in enumerate(src):
            chain = chains[bits]
            p = m - popcount(bits) - 1
            # vertical: boundary within K[bits], twisted by (-1)^p
            bd = chain.boundary.get(q)
            if bd is not None:
                vsign = 1 if p % 2 == 0 else -1
                for r in range(bd.nrows):
                    v = bd.rows[r][loc]
                    if v:
                        D.rows[tgt_pos[(bits, q - 1, r)]][col] += vsign * v
            # horizontal: signed inclusion into every K[bits + j]
            fid = chain.basis[q][loc]
            for j in range(m):
                if bits >> j & 1:
                    continue
                target = bits | 1 << j
                t_chain = chains[target]
                r = t_chain.basis[q].index(fid)
                D.rows[tgt_pos[(target, q, r)]][col] += cube_sign(bits, j)
        return D

    snfs = {}
    prev = None
    for n in degrees:
        D = build_diff(n)
        if prev is not None and not prev.mul(D).is_zero():
            raise NotAComplex("total differential squared != 0")
        snfs[n] = snf_full(D)
        prev = D
    for n in degrees:
        dim = len(layout[n])
        r_out = len(snfs[n].divisors)
        r_in = len(snfs[n + 1].divisors) if (n + 1) in snfs else 0
        if r_out + r_in != dim:
            return False
        if (n + 1) in snfs and any(d != 1 for d in snfs[n + 1].divisors):
            return False
    return True
