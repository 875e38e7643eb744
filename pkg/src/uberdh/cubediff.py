"""Assembly of Boolean-cube differentials from subset-inclusion maps.

The same block structure underlies the degree-zero cube homology, the
subset-inclusion differential on the Hochster table, and the first-page
differential of the anti-star spectral sequences; only the sign assignment
differs, and any sign assignment yields isomorphic homology.
"""

from __future__ import annotations

from functools import lru_cache

from .exactla import IntMatrix, fieldmat
from .scomplex import popcount


@lru_cache(maxsize=32)
def subsets_by_size(m: int):
    """subsets_by_size(m)[l] lists all l-subsets of {0..m-1} in numeric order."""
    out = [[] for _ in range(m + 1)]
    for bits in range(1 << m):
        out[popcount(bits)].append(bits)
    return out


def cube_sign(bits: int, j: int) -> int:
    """Sign of the cube edge I -> I + j: parity of the members of I below j."""
    return -1 if popcount(bits & ((1 << j) - 1)) % 2 else 1


def eq4_sign(deg: int):
    """Sign function for the subset-inclusion differential on homology in
    degree ``deg``: a global (-1)^(deg+1) times the cube edge sign."""
    glob = -1 if (deg + 1) % 2 else 1

    def sign(bits, j):
        return glob * cube_sign(bits, j)
    return sign


def level_map(table, deg: int, l: int, sign_fn=cube_sign):
    """Block matrix of the signed inclusion maps
    sum_{|I|=l} H_deg(K[I]) -> sum_{|I|=l+1} H_deg(K[I]),
    with subsets ordered numerically and blocks taken from the table's bases.
    """
    table.check_no_torsion(deg)
    m = table.K.m
    sizes = subsets_by_size(m)
    src = sizes[l] if 0 <= l <= m else []
    tgt = sizes[l + 1] if 0 <= l + 1 <= m else []
    src_off, pos = {}, 0
    for bits in src:
        src_off[bits] = pos
        pos += table.rank(bits, deg)
    ncols = pos
    tgt_off, pos = {}, 0
    for bits in tgt:
        tgt_off[bits] = pos
        pos += table.rank(bits, deg)
    nrows = pos
    if table.coeffs.is_field:
        out = fieldmat.zeros(table.coeffs, nrows, ncols)
    else:
        out = IntMatrix.zeros(nrows, ncols)
    for bits in src:
        if table.rank(bits, deg) == 0:
            continue
        for j in range(m):
            if bits >> j & 1:
                continue
            target = bits | 1 << j
            if table.rank(target, deg) == 0:
                continue
            block = table.inclusion_map(bits, j, deg)
            out.paste(tgt_off[target], src_off[bits], block, sign_fn(bits, j))
    return out
