"""The bigraded homology table of the moment-angle complex and its double homology.

The homology of the moment-angle complex attached to K splits as a double sum
over vertex subsets: the group in bidegree (-k, 2l) is the direct sum of the
reduced homologies H~_{l-k-1}(K[I]) over all l-subsets I.  A signed
subset-inclusion differential raises both k and l by one at constant reduced
degree p = l - k - 1; double homology is the homology of the table under it.

Entries are stored by the plain pair (k, l); the (-k, 2l) display convention
is applied only when formatting output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubediff import eq4_sign, level_map, subsets_by_size
from .exactla import Coeffs, GroupClass, direct_sum
from .homology import (SubsetHomologyTable, _mat_zeros, homology_of_pair,
                       subset_homology_table)
from .scomplex import SimplicialComplex


@dataclass
class DoubleHomologyTable:
    """Sparse bigraded table keyed by (k, l); absent entries are zero."""

    kind: str  # "hochster" (pre-differential) or "double"
    coeffs: Coeffs
    entries: dict  # (k, l) -> GroupClass

    def group(self, k, l) -> GroupClass:
        return self.entries.get((k, l), GroupClass(0, (), self.coeffs.tag))

    def total_rank(self):
        return sum(cls.rank for cls in self.entries.values())

    def to_records(self):
        recs = []
        for (k, l) in sorted(self.entries):
            cls = self.entries[(k, l)]
            recs.append({"k": k, "l": l, "display": [-k, 2 * l],
                         "rank": cls.rank, "torsion": list(cls.torsion)})
        return recs


def _reduced_table(K, coeffs, table, workers):
    if table is None:
        table = subset_homology_table(K, reduced=True, coeffs=coeffs, workers=workers)
    assert table.reduced and table.coeffs == coeffs
    return table


def hochster_table(K: SimplicialComplex, coeffs: Coeffs,
                   table: SubsetHomologyTable | None = None,
                   workers=None) -> DoubleHomologyTable:
    """Pre-differential table: (k, l) -> sum over l-subsets I of H~_{l-k-1}(K[I])."""
    table = _reduced_table(K, coeffs, table, workers)
    entries = {}
    acc = {}  # (k, l) -> list of GroupClass
    for bits, by_deg in table.groups.items():
        l = bin(bits).count("1")
        for p, cls in by_deg.items():
            acc.setdefault((l - p - 1, l), []).append(cls)
    for key, classes in acc.items():
        total = direct_sum(classes)
        if not total.is_zero:
            entries[key] = total
    return DoubleHomologyTable("hochster", coeffs, entries)


def double_differential(K: SimplicialComplex, k: int, l: int, coeffs: Coeffs,
                        table: SubsetHomologyTable | None = None, workers=None):
    """Matrix of the signed inclusion differential (k, l) -> (k+1, l+1)."""
    table = _reduced_table(K, coeffs, table, workers)
    p = l - k - 1
    return level_map(table, p, l, eq4_sign(p))


def double_homology(K: SimplicialComplex, coeffs: Coeffs,
                    table: SubsetHomologyTable | None = None,
                    workers=None) -> DoubleHomologyTable:
    table = _reduced_table(K, coeffs, table, workers)
    m = K.m
    entries = {}
    degrees = sorted({p for by_deg in table.groups.values() for p in by_deg})
    levels = subsets_by_size(m)
    for p in degrees:
        dims = [sum(table.rank(bits, p) for bits in levels[l]) for l in range(m + 1)]
        diffs = [level_map(table, p, l, eq4_sign(p)) for l in range(m)]
        for l in range(m - 1):
            assert diffs[l + 1].mul(diffs[l]).is_zero(), "double differential squared != 0"
        for l in range(m + 1):
            d_in = diffs[l - 1] if l > 0 else _mat_zeros(coeffs, dims[0], 0)
            d_out = diffs[l] if l < m else _mat_zeros(coeffs, 0, dims[m])
            cls, _, _ = homology_of_pair(coeffs, d_in, d_out)
            if not cls.is_zero:
                k = l - p - 1
                assert k >= 0
                entries[(k, l)] = cls
    return DoubleHomologyTable("double", coeffs, entries)


def diagonal_euler(K: SimplicialComplex, coeffs: Coeffs,
                   dh: DoubleHomologyTable | None = None) -> int:
    """Alternating sum over k of the free ranks on the line l = k + 1."""
    if dh is None:
        dh = double_homology(K, coeffs)
    assert dh.kind == "double"
    total = 0
    for (k, l), cls in dh.entries.items():
        if l == k + 1:
            total += cls.rank if k % 2 == 0 else -cls.rank
    return total
