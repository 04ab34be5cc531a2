"""Dense exact linear algebra over GF(p).

Matrices are sequences of rows of ints in ``[0, p-1]``.  Matrices here are
tiny (at most ``m x p*m`` with ``m`` around 15), so plain lists beat numpy.
"""

from dataclasses import dataclass

from .exceptions import RankDeficientError


@dataclass(frozen=True)
class PLUFactors:
    """``A = P L U`` for an ``m x r`` matrix ``A`` of full column rank.

    ``perm[k]`` is the row of ``A`` that ended up in position ``k``, i.e.
    row ``perm[k]`` of ``A`` equals row ``k`` of ``L U``.  ``L`` is ``m x m``
    unit lower triangular, ``U`` is ``m x r`` with zeros below the diagonal.
    """

    p: int
    perm: tuple
    L: tuple
    U: tuple

    @property
    def m(self):
        return len(self.perm)

    @property
    def r(self):
        return len(self.U[0]) if self.U else 0

    def permutation_matrix(self):
        P = [[0] * self.m for _ in range(self.m)]
        for k, row in enumerate(self.perm):
            P[row][k] = 1
        return tuple(tuple(row) for row in P)


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(m):
    return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))


def matmul(A, B, p):
    if A and len(A[0]) != len(B):
        raise ValueError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0]) if B else 0}")
    cols = list(zip(*B)) if B else []
    width = len(B[0]) if B else 0
    if not cols:
        return tuple(tuple([0] * width) for _ in A)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols) for row in A)


def matvec(A, x, p):
    return tuple(sum(a * b for a, b in zip(row, x)) % p for row in A)


def transpose(A):
    return tuple(zip(*A))


def apply_perm(perm, A):
    """Rows of ``P @ A``: row ``k`` of ``A`` goes to position ``perm[k]``."""
    out = [None] * len(perm)
    for k, row in enumerate(perm):
        out[row] = tuple(A[k])
    return tuple(out)


def plu_decompose(A, p):
    """Rectangular PLU with first-nonzero (top-down) pivoting.

    Raises :class:`RankDeficientError` if some column has no pivot.
    """
    m = len(A)
    r = len(A[0]) if m else 0
    if r > m:
        raise ValueError(f"{m}x{r} matrix has more columns than rows")
    work = [list(row) for row in A]
    perm = list(range(m))
    L = [[int(i == j) for j in range(m)] for i in range(m)]
    for j in range(r):
        piv = next((k for k in range(j, m) if work[k][j]), None)
        if piv is None:
            raise RankDeficientError(f"column {j} has no pivot")
        if piv != j:
            work[j], work[piv] = work[piv], work[j]
            perm[j], perm[piv] = perm[piv], perm[j]
            L[j][:j], L[piv][:j] = L[piv][:j], L[j][:j]
        pivot_row = work[j]
        inv = pow(pivot_row[j], -1, p)
        for i in range(j + 1, m):
            row = work[i]
            if row[j]:
                f = row[j] * inv % p
                L[i][j] = f
                for c in range(j, r):
                    row[c] = (row[c] - f * pivot_row[c]) % p
    return PLUFactors(
        p=p,
        perm=tuple(perm),
        L=tuple(tuple(row) for row in L),
        U=tuple(tuple(row) for row in work),
    )


def plu_solve(f, b):
    """Solve ``A c = b`` given ``f = plu_decompose(A)``.

    Returns the unique solution as a tuple, or None when ``b`` is not in the
    column space of ``A``.
    """
    m, r, p = f.m, f.r, f.p
    if len(b) != m:
        raise ValueError(f"right-hand side of length {len(b)} for {m} rows")
    L, U = f.L, f.U
    y = [b[row] % p for row in f.perm]
    for i in range(1, m):
        Li = L[i]
        s = y[i]
        for k in range(i):
            if Li[k]:
                s -= Li[k] * y[k]
        y[i] = s % p
    if any(y[r:]):
        return None
    c = [0] * r
    for i in range(r - 1, -1, -1):
        Ui = U[i]
        s = y[i]
        for k in range(i + 1, r):
            s -= Ui[k] * c[k]
        d = Ui[i]
        assert d, "zero on the diagonal of U; matrix is not full column rank"
        c[i] = s * pow(d, -1, p) % p
    return tuple(c)


def row_echelon_pivots(A, p):
    """Row echelon form of ``A`` and the indices of its pivot columns."""
    U = [list(row) for row in A]
    m = len(U)
    cols = len(U[0]) if m else 0
    pivots = []
    rank = 0
    for j in range(cols):
        if rank == m:
            break
        piv = next((k for k in range(rank, m) if U[k][j]), None)
        if piv is None:
            continue
        U[rank], U[piv] = U[piv], U[rank]
        top = U[rank]
        inv = pow(top[j], -1, p)
        for i in range(rank + 1, m):
            row = U[i]
            if row[j]:
                f = row[j] * inv % p
                U[i] = [(a - f * b) % p for a, b in zip(row, top)]
        pivots.append(j)
        rank += 1
    return tuple(tuple(row) for row in U), tuple(pivots)


def rank(A, p):
    return len(row_echelon_pivots(A, p)[1])
