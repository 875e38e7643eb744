"""Exact matrices over Q and F_p, with rank/kernel/homology and induced maps.

Two representations share one interface: dense rows of exact field elements
(Fractions for Q, ints in [0, p) for odd p), and bitmask rows for F_2, which
carries the large mod-2 eliminations (thousands of columns) at tolerable cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotAComplex, NotChainMap
from .groups import Coeffs, GroupClass


# ---------------------------------------------------------------------------
# matrix classes


class DenseMat:
    """Row-major matrix over Q or F_p (p odd)."""

    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, p, nrows, ncols, rows):
        self.p = p  # None for Q
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def zeros(cls, p, nrows, ncols):
        zero = 0 if p else Fraction(0)
        return cls(p, nrows, ncols, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, p, n):
        m = cls.zeros(p, n, n)
        one = 1 if p else Fraction(1)
        for i in range(n):
            m.rows[i][i] = one
        return m

    def set_int(self, i, j, v):
        self.rows[i][j] = (v % self.p) if self.p else Fraction(v)

    def entry_nonzero(self, i, j):
        return bool(self.rows[i][j])

    def copy(self):
        return DenseMat(self.p, self.nrows, self.ncols, [r[:] for r in self.rows])

    def mul(self, other):
        assert self.ncols == other.nrows
        out = DenseMat.zeros(self.p, self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in enumerate(row):
                if a:
                    orow = other.rows[k]
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
            if self.p:
                out.rows[i] = [v % self.p for v in acc]
        return out

    def hstack(self, other):
        assert self.nrows == other.nrows
        return DenseMat(self.p, self.nrows, self.ncols + other.ncols,
                        [a + b for a, b in zip(self.rows, other.rows)])

    def col_select(self, idxs):
        return DenseMat(self.p, self.nrows, len(idxs),
                        [[r[j] for j in idxs] for r in self.rows])

    def row_slice(self, start, stop):
        return DenseMat(self.p, stop - start, self.ncols,
                        [r[:] for r in self.rows[start:stop]])

    def is_zero(self):
        return all(not v for r in self.rows for v in r)

    def paste(self, r0, c0, block, sign=1):
        for i, row in enumerate(block.rows):
            dest = self.rows[r0 + i]
            for j, v in enumerate(row):
                if v:
                    dest[c0 + j] = (sign * v) % self.p if self.p else sign * v

    def rref(self):
        """Reduced row echelon form.  Returns (R, pivots, T) with R = T @ self."""
        p = self.p
        R = [r[:] for r in self.rows]
        T = DenseMat.identity(p, self.nrows).rows
        pivots = []
        r = 0
        for j in range(self.ncols):
            if r == self.nrows:
                break
            piv = next((i for i in range(r, self.nrows) if R[i][j]), None)
            if piv is None:
                continue
            R[r], R[piv] = R[piv], R[r]
            T[r], T[piv] = T[piv], T[r]
            inv = pow(R[r][j], -1, p) if p else 1 / R[r][j]
            if p:
                R[r] = [v * inv % p for v in R[r]]
                T[r] = [v * inv % p for v in T[r]]
            else:
                R[r] = [v * inv for v in R[r]]
                T[r] = [v * inv for v in T[r]]
            prow, trow = R[r], T[r]
            for i in range(self.nrows):
                if i != r and R[i][j]:
                    f = R[i][j]
                    if p:
                        R[i] = [(a - f * b) % p for a, b in zip(R[i], prow)]
                        T[i] = [(a - f * b) % p for a, b in zip(T[i], trow)]
                    else:
                        R[i] = [a - f * b for a, b in zip(R[i], prow)]
                        T[i] = [a - f * b for a, b in zip(T[i], trow)]
            pivots.append(j)
            r += 1
        return (DenseMat(p, self.nrows, self.ncols, R), pivots,
                DenseMat(p, self.nrows, self.nrows, T))

    def to_int_rows(self):
        return [[int(v) for v in r] for r in self.rows]


class BitMat:
    """Matrix over F_2; each row is an int whose bit j is the (i, j) entry."""

    __slots__ = ("nrows", "ncols", "rows")
    p = 2

    def __init__(self, nrows, ncols, rows):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def zeros(cls, p, nrows, ncols):
        return cls(nrows, ncols, [0] * nrows)

    @classmethod
    def identity(cls, p, n):
        return cls(n, n, [1 << i for i in range(n)])

    def set_int(self, i, j, v):
        if v % 2:
            self.rows[i] |= 1 << j
        else:
            self.rows[i] &= ~(1 << j)

    def entry_nonzero(self, i, j):
        return bool(self.rows[i] >> j & 1)

    def copy(self):
        return BitMat(self.nrows, self.ncols, self.rows[:])

    def mul(self, other):
        assert self.ncols == other.nrows
        orows = other.rows
        out = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= orows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BitMat(self.nrows, other.ncols, out)

    def hstack(self, other):
        assert self.nrows == other.nrows
        return BitMat(self.nrows, self.ncols + other.ncols,
                      [a | (b << self.ncols) for a, b in zip(self.rows, other.rows)])

    def col_select(self, idxs):
        out = []
        for r in self.rows:
            v = 0
            for k, j in enumerate(idxs):
                v |= (r >> j & 1) << k
            out.append(v)
        return BitMat(self.nrows, len(idxs), out)

    def row_slice(self, start, stop):
        return BitMat(stop - start, self.ncols, self.rows[start:stop])

    def is_zero(self):
        return not any(self.rows)

    def paste(self, r0, c0, block, sign=1):
        for i, brow in enumerate(block.rows):
            self.rows[r0 + i] |= brow << c0

    def rref(self):
        R = self.rows[:]
        T = [1 << i for i in range(self.nrows)]
        pivots = []
        r = 0
        for j in range(self.ncols):
            if r == self.nrows:
                break
            bit = 1 << j
            piv = next((i for i in range(r, self.nrows) if R[i] & bit), None)
            if piv is None:
                continue
            R[r], R[piv] = R[piv], R[r]
            T[r], T[piv] = T[piv], T[r]
            for i in range(self.nrows):
                if i != r and R[i] & bit:
                    R[i] ^= R[r]
                    T[i] ^= T[r]
            pivots.append(j)
            r += 1
        return (BitMat(self.nrows, self.ncols, R), pivots,
                BitMat(self.nrows, self.nrows, T))

    def to_int_rows(self):
        return [[r >> j & 1 for j in range(self.ncols)] for r in self.rows]


# ---------------------------------------------------------------------------
# constructors dispatching on the coefficient field


def _cls(coeffs: Coeffs):
    assert coeffs.is_field
    return BitMat if coeffs.p == 2 else DenseMat


def _p(coeffs: Coeffs):
    return coeffs.p if coeffs.kind == "Fp" else None


def zeros(coeffs, nrows, ncols):
    return _cls(coeffs).zeros(_p(coeffs), nrows, ncols)


def identity(coeffs, n):
    return _cls(coeffs).identity(_p(coeffs), n)


def from_entries(coeffs, nrows, ncols, entries):
    """Matrix from (row, col, int value) triples; values reduced into the field."""
    m = zeros(coeffs, nrows, ncols)
    for i, j, v in entries:
        m.set_int(i, j, v)
    return m


def from_int_rows(coeffs, rows, ncols=None):
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    m = zeros(coeffs, len(rows), ncols)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                m.set_int(i, j, v)
    return m


# ---------------------------------------------------------------------------
# elimination-based primitives


def rank(M):
    return len(M.rref()[1])


def nullspace(M):
    """Columns form a basis of ker(M); free columns taken in increasing order."""
    R, pivots, _ = M.rref()
    pivset = set(pivots)
    free = [j for j in range(M.ncols) if j not in pivset]
    out = type(M).zeros(getattr(M, "p", None), M.ncols, len(free))
    for k, j in enumerate(free):
        out.set_int(j, k, 1)
        for r, pj in enumerate(pivots):
            if R.entry_nonzero(r, j):
                if isinstance(M, BitMat):
                    out.set_int(pj, k, 1)
                else:
                    out.rows[pj][k] = -R.rows[r][j] % M.p if M.p else -R.rows[r][j]
    return out


def left_inverse(M):
    """Left inverse of a full-column-rank matrix."""
    _, pivots, T = M.rref()
    assert len(pivots) == M.ncols, "matrix does not have full column rank"
    return T.row_slice(0, M.ncols)


@dataclass
class FieldHomology:
    """Homology of a two-step complex over a field, with a chosen basis.

    ``reps`` columns are cycle representatives; ``proj`` reads off homology
    coordinates of any cycle (proj @ reps = I, proj @ d_in = 0).
    """

    dim: int
    reps: object
    proj: object


def field_homology(coeffs, d_in, d_out, with_basis=False):
    if d_out.ncols != d_in.nrows:
        raise NotAComplex(f"shape mismatch: {d_out.ncols} vs {d_in.nrows}")
    if not d_out.mul(d_in).is_zero():
        raise NotAComplex("d_out . d_in != 0")
    n = d_out.ncols
    Z = nullspace(d_out)            # n x r
    r = Z.ncols
    if r == 0:
        return FieldHomology(0, Z, zeros(coeffs, 0, n))
    L = left_inverse(Z)             # r x n
    X = L.mul(d_in)                 # boundaries in cycle coordinates
    _, xpiv, _ = X.rref()
    t = len(xpiv)
    dim = r - t
    if not with_basis:
        return FieldHomology(dim, None, None)
    # complete im(X) to a basis of the cycle space by standard vectors, in order
    aug = X.hstack(identity(coeffs, r))
    _, apiv, _ = aug.rref()
    sel = [j - X.ncols for j in apiv if j >= X.ncols]
    assert len(sel) == dim
    reps = Z.col_select(sel)
    A = X.col_select(xpiv).hstack(identity(coeffs, r).col_select(sel))  # r x r
    _, apv, Ainv = A.rref()
    assert len(apv) == r
    proj = Ainv.row_slice(t, r).mul(L)
    return FieldHomology(dim, reps, proj)


def homology_dim(coeffs, d_in, d_out):
    """dim ker(d_out)/im(d_in) = middle dim - rank(d_out) - rank(d_in)."""
    if not d_out.mul(d_in).is_zero():
        raise NotAComplex("d_out . d_in != 0")
    return d_out.ncols - rank(d_out) - rank(d_in)


def induced_map_on_homology(coeffs, f, source, target):
    """Matrix of the map induced by chain map f between two-step complexes.

    ``source`` and ``target`` are (d_in, d_out) pairs at the degree of f.
    Raises NotChainMap if f fails to map cycles to cycles or boundaries to
    boundaries.
    """
    s_hom = field_homology(coeffs, source[0], source[1], with_basis=True)
    t_hom = field_homology(coeffs, target[0], target[1], with_basis=True)
    Zs = nullspace(source[1])
    if not target[1].mul(f.mul(Zs)).is_zero():
        raise NotChainMap("cycles are not sent to cycles")
    fb = f.mul(source[0])
    stacked = target[0].hstack(fb)
    if rank(stacked) != rank(target[0]):
        raise NotChainMap("boundaries are not sent to boundaries")
    return t_hom.proj.mul(f.mul(s_hom.reps))


def group_class(coeffs, dim) -> GroupClass:
    return GroupClass(dim, (), coeffs.tag)
