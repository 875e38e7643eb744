"""Dense integer matrices, Smith normal form, and homology of a two-step complex.

Entries are arbitrary-precision Python ints; there is no floating point
anywhere.  Matrices are small (a few hundred rows at most), so the dense
representation and the classical SNF algorithm are adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotAComplex, TorsionObstruction
from .groups import GroupClass


@dataclass
class IntMatrix:
    nrows: int
    ncols: int
    rows: list  # list of lists of int

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols, [[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.rows[i][i] = 1
        return m

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        assert all(len(r) == ncols for r in rows)
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        m = cls.zeros(nrows, ncols)
        for i, j, v in entries:
            m.rows[i][j] += v
        return m

    def copy(self):
        return IntMatrix(self.nrows, self.ncols, [r[:] for r in self.rows])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        assert self.ncols == other.nrows, (self.ncols, other.nrows)
        out = IntMatrix.zeros(self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in enumerate(row):
                if a:
                    orow = other.rows[k]
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
        return out

    def is_zero(self):
        return all(all(v == 0 for v in row) for row in self.rows)

    def paste(self, r0, c0, block, sign=1):
        for i, row in enumerate(block.rows):
            dest = self.rows[r0 + i]
            for j, v in enumerate(row):
                if v:
                    dest[c0 + j] = sign * v

    def col_slice(self, start, stop):
        return IntMatrix(self.nrows, stop - start, [r[start:stop] for r in self.rows])

    def row_slice(self, start, stop):
        return IntMatrix(stop - start, self.ncols, [r[:] for r in self.rows[start:stop]])

    def transpose(self):
        return IntMatrix(self.ncols, self.nrows,
                         [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])


@dataclass
class SnfResult:
    """U @ M @ V = diag(divisors), with U, V unimodular."""

    divisors: list
    U: IntMatrix
    Uinv: IntMatrix
    V: IntMatrix
    Vinv: IntMatrix

    @property
    def rank(self):
        return len(self.divisors)


def smith_normal_form(M: IntMatrix):
    """Elementary divisors of M (nonzero SNF diagonal, divisibility chain)."""
    return snf_full(M).divisors


def snf_full(M: IntMatrix) -> SnfResult:
    A = M.copy()
    n, c = A.nrows, A.ncols
    U, Uinv = IntMatrix.identity(n), IntMatrix.identity(n)
    V, Vinv = IntMatrix.identity(c), IntMatrix.identity(c)

    def row_axpy(i, t, q):
        # row_i -= q * row_t  (on A and U); Uinv gets the inverse column op
        Ar, At = A.rows[i], A.rows[t]
        for j in range(c):
            Ar[j] -= q * At[j]
        Ur, Ut = U.rows[i], U.rows[t]
        for j in range(n):
            Ur[j] -= q * Ut[j]
        for r in range(n):
            Uinv.rows[r][t] += q * Uinv.rows[r][i]

    def col_axpy(j, t, q):
        # col_j -= q * col_t  (on A and V); Vinv gets the inverse row op
        for r in range(n):
            A.rows[r][j] -= q * A.rows[r][t]
        for r in range(c):
            V.rows[r][j] -= q * V.rows[r][t]
        Vt, Vj = Vinv.rows[t], Vinv.rows[j]
        for k in range(c):
            Vt[k] += q * Vj[k]

    def row_swap(i, t):
        A.rows[i], A.rows[t] = A.rows[t], A.rows[i]
        U.rows[i], U.rows[t] = U.rows[t], U.rows[i]
        for r in range(n):
            Uinv.rows[r][i], Uinv.rows[r][t] = Uinv.rows[r][t], Uinv.rows[r][i]

    def col_swap(j, t):
        for r in range(n):
            A.rows[r][j], A.rows[r][t] = A.rows[r][t], A.rows[r][j]
        for r in range(c):
            V.rows[r][j], V.rows[r][t] = V.rows[r][t], V.rows[r][j]
        Vinv.rows[j], Vinv.rows[t] = Vinv.rows[t], Vinv.rows[j]

    def row_negate(i):
        A.rows[i] = [-v for v in A.rows[i]]
        U.rows[i] = [-v for v in U.rows[i]]
        for r in range(n):
            Uinv.rows[r][i] = -Uinv.rows[r][i]

    divisors = []
    t = 0
    while True:
        # locate a pivot of minimal absolute value in the trailing block
        pivot = None
        best = None
        for i in range(t, n):
            for j in range(t, c):
                v = abs(A.rows[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
                    if v == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_swap(pi, t)
        if pj != t:
            col_swap(pj, t)
        if A.rows[t][t] < 0:
            row_negate(t)

        while True:
            # clear the pivot column with division steps
            restart = False
            for i in range(t + 1, n):
                v = A.rows[i][t]
                if v:
                    q = v // A.rows[t][t]
                    row_axpy(i, t, q)
                    if A.rows[i][t]:
                        row_swap(i, t)  # strictly smaller remainder becomes pivot
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, c):
                v = A.rows[t][j]
                if v:
                    q = v // A.rows[t][t]
                    col_axpy(j, t, q)
                    if A.rows[t][j]:
                        col_swap(j, t)
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the remaining block for the divisor chain
            offender = None
            d = A.rows[t][t]
            for i in range(t + 1, n):
                for j in range(t + 1, c):
                    if A.rows[i][j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_axpy(t, offender, -1)  # fold the offending row into the pivot row
        divisors.append(A.rows[t][t])
        t += 1

    return SnfResult(divisors, U, Uinv, V, Vinv)


def rank_q(M: IntMatrix) -> int:
    """Rank over Q via exact fraction elimination (independent of SNF)."""
    rows = [[Fraction(v) for v in r] for r in M.rows]
    rank = 0
    for j in range(M.ncols):
        piv = next((i for i in range(rank, M.nrows) if rows[i][j]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[j]
        rows[rank] = prow = [v * inv for v in prow]
        for i in range(M.nrows):
            if i != rank and rows[i][j]:
                f = rows[i][j]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == M.nrows:
            break
    return rank


@dataclass
class ZHomology:
    """One homology group of a two-step integer complex, with integral data.

    ``reps`` columns are chain vectors forming a basis of the free part;
    ``proj`` extracts free-part coordinates of any cycle (proj @ reps = I).
    Both are only available when the group is torsion-free.
    """

    cls: GroupClass
    reps: IntMatrix | None
    proj: IntMatrix | None


def _kernel_data(d_out: IntMatrix):
    """Lattice basis K of ker(d_out) and an integral left inverse of K."""
    s = snf_full(d_out)
    r = s.rank
    K = s.V.col_slice(r, d_out.ncols)
    L = s.Vinv.row_slice(r, d_out.ncols)
    return K, L


def z_homology(d_in: IntMatrix, d_out: IntMatrix, with_basis=False) -> ZHomology:
    """ker(d_out)/im(d_in) over Z.  d_in feeds the middle group, d_out leaves it."""
    if d_out.ncols != d_in.nrows:
        raise NotAComplex(f"shape mismatch: {d_out.ncols} vs {d_in.nrows}")
    if not d_out.mul(d_in).is_zero():
        raise NotAComplex("d_out . d_in != 0")
    K, L = _kernel_data(d_out)
    X = L.mul(d_in)  # boundaries in kernel coordinates; integral by saturation
    assert K.mul(X).rows == d_in.rows, "image not contained in kernel lattice"
    sx = snf_full(X)
    torsion = tuple(d for d in sx.divisors if d > 1)
    cls = GroupClass(K.ncols - sx.rank, torsion)
    if not with_basis:
        return ZHomology(cls, None, None)
    if torsion:
        raise TorsionObstruction(
            f"torsion {torsion} blocks integral homology bases; use q or f2/fp")
    reps = K.mul(sx.Uinv.col_slice(sx.rank, K.ncols))
    proj = sx.U.mul(L).row_slice(sx.rank, K.ncols)
    return ZHomology(cls, reps, proj)
