"""Buchberger-Moeller baseline.

Enumerates monomials smallest-first, reducing each evaluation vector against
those of the standard monomials accepted so far.  Every accepted monomial
enqueues its products with all ``n`` variables, which is what makes the
method quadratic in ``n``.  Kept independent of the PLU code in
:mod:`essgb.linalg` so it can serve as a test oracle.
"""

import heapq

from .core import GBResult
from .monomials import Monomial, Polynomial, as_order


class _Reducer:
    """Incremental echelon basis of evaluation vectors.

    Each stored row is ``(pivot, vector, combo)`` where ``vector`` equals the
    evaluation of ``sum(combo[k] * sm[k])``, normalized to 1 at ``pivot``.
    """

    def __init__(self, p):
        self.p = p
        self.rows = []

    def reduce(self, v):
        """Reduce ``v``; return (remainder, combo) with ``v = remainder + sum(combo_k * sm_k)``
        expressed over the standard monomials accepted so far."""
        p = self.p
        v = list(v)
        combo = {}
        for pivot, row, rc in self.rows:
            f = v[pivot]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, row)]
                for k, c in rc.items():
                    combo[k] = (combo.get(k, 0) + f * c) % p
        return v, combo

    def add(self, remainder, combo, index):
        """Store a nonzero remainder belonging to standard monomial ``index``."""
        p = self.p
        pivot = next(k for k, a in enumerate(remainder) if a)
        inv = pow(remainder[pivot], -1, p)
        row = [a * inv % p for a in remainder]
        # remainder = sm[index] - sum(combo)
        rc = {k: -c * inv % p for k, c in combo.items()}
        rc[index] = inv
        self.rows.append((pivot, row, rc))


def _separators(sm, V, order):
    """Invert the square evaluation matrix by Gauss-Jordan elimination."""
    p, m, n = V.p, V.m, V.n
    aug = [[mono.evaluate(pt, p) for mono in sm] + [int(t == s) for s in range(m)] for t, pt in enumerate(V.rows)]
    for col in range(m):
        piv = next(r for r in range(col, m) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [a * inv % p for a in aug[col]]
        for r in range(m):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    # column t of A^-1 holds the coefficients of the separator of point t
    return [
        Polynomial(n, p, order, [(sm[j], aug[j][m + t]) for j in range(m) if aug[j][m + t]])
        for t in range(m)
    ]


def bm_gb(V, order):
    """Reduced Groebner basis of I(V) by Buchberger-Moeller enumeration."""
    order = as_order(order)
    p, n = V.p, V.n
    key = order.key
    sm = []
    leading = []
    basis = []
    reducer = _Reducer(p)
    one = Monomial.one(n)
    queue = [(key(one), 0, one)]
    queued = {one}
    tiebreak = 1
    while queue:
        _, _, mono = heapq.heappop(queue)
        if any(lt.divides(mono) for lt in leading):
            continue
        remainder, combo = reducer.reduce(mono.evaluate(pt, p) for pt in V.rows)
        if any(remainder):
            reducer.add(remainder, combo, len(sm))
            sm.append(mono)
            for i in range(n):
                nxt = mono * Monomial.variable(i, n)
                if nxt not in queued:
                    queued.add(nxt)
                    heapq.heappush(queue, (key(nxt), tiebreak, nxt))
                    tiebreak += 1
        else:
            terms = [(mono, 1)] + [(sm[k], -c) for k, c in combo.items() if c]
            leading.append(mono)
            basis.append(Polynomial(n, p, order, terms))
    if len(sm) != V.m:
        raise AssertionError(f"found {len(sm)} standard monomials for {V.m} points")
    basis.sort(key=lambda g: key(g.leading_monomial), reverse=True)
    essential = sorted({i for mono in sm for i in mono.support()})
    return GBResult(
        basis=tuple(basis),
        sm=tuple(sm),
        separators=tuple(_separators(sm, V, order)),
        essential_vars=tuple(essential),
        essential_events=len(essential),
    )
