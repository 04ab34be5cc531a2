"""Reduced Groebner bases of ideals of points via essential variables.

The main loop walks the variables from smallest to largest and tries to
express each one as a combination of the current standard monomials,
reusing one PLU factorization until a variable turns out to be essential.
Only essential variables (at most ``m - 1`` of them) trigger a rebuild, so
the cost is linear in the number of variables.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DuplicatePointError
from .field import PrimeField
from .linalg import plu_decompose, plu_solve, row_echelon_pivots
from .monomials import Monomial, Polynomial, as_order

log = logging.getLogger(__name__)


class PointSet:
    """``m`` distinct points of GF(p)^n, stored row-wise and column-wise."""

    def __init__(self, points, p):
        self.field = PrimeField(p)
        self.p = self.field.p
        rows = np.asarray(points, dtype=object)
        if rows.ndim != 2 or rows.shape[0] == 0 or rows.shape[1] == 0:
            raise ValueError(f"expected a non-empty 2-d array of points, got shape {rows.shape}")
        rows = [tuple(int(v) for v in row) for row in rows]
        for t, row in enumerate(rows):
            for i, v in enumerate(row):
                if not 0 <= v < self.p:
                    raise ValueError(f"entry {v} at row {t + 1}, column {i + 1} is outside [0, {self.p - 1}]")
        seen = {}
        for t, row in enumerate(rows):
            if row in seen:
                raise DuplicatePointError(seen[row], t)
            seen[row] = t
        self.rows = tuple(rows)
        self.columns = tuple(zip(*rows))

    @property
    def m(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.columns)

    def __len__(self):
        return self.m

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self):
        return f"PointSet(m={self.m}, n={self.n}, p={self.p})"


@dataclass(frozen=True)
class GBResult:
    """Reduced Groebner basis (sorted by decreasing leading term), standard
    monomials (increasing) and one reduced separator per input point."""

    basis: tuple
    sm: tuple
    separators: tuple
    essential_vars: tuple = ()
    essential_events: int = field(default=0, compare=False)

    @property
    def leading_monomials(self):
        return tuple(g.leading_monomial for g in self.basis)


def build_eval_matrix(monos, V):
    """``A[t][j]`` = value of ``monos[j]`` at point ``t``."""
    p = V.p
    return tuple(tuple(mono.evaluate(pt, p) for mono in monos) for pt in V.rows)


class _State:
    """Standard monomials found so far and the factorization of their evaluations."""

    def __init__(self, sm, V):
        self.sm = sm
        self.A = build_eval_matrix(sm, V)
        self.plu = plu_decompose(self.A, V.p)


def try_express(i, state, b, order):
    """Try to write variable ``i`` as a combination of ``state.sm`` on V.

    Returns the coefficient vector, or None if ``x_i`` is essential (no
    solution, or the unique solution uses a monomial larger than ``x_i``).
    """
    c = plu_solve(state.plu, b)
    if c is None:
        return None
    key = order.key
    xi = key(Monomial.variable(i, state.sm[0].n))
    for cj, mono in zip(c, state.sm):
        if cj and key(mono) > xi:
            return None
    return c


def sm_a(i, sm_prev, V, order, columns=None):
    """Standard monomials of I(V) restricted to the previous essential variables
    plus the new essential variable ``i``.

    ``columns`` may carry the evaluation columns of ``sm_prev`` to skip
    re-evaluating them.
    """
    p = V.p
    n = V.n
    if columns is None:
        columns = [tuple(mono.evaluate(pt, p) for pt in V.rows) for mono in sm_prev]
    xi = V.columns[i]
    candidates = []
    for mono, col in zip(sm_prev, columns):
        if mono.exponent(i):
            raise ValueError(f"x{i + 1} already occurs in standard monomial {mono}")
        values = tuple(col)
        for q in range(p):
            candidates.append((mono * Monomial.variable(i, n, q), values))
            values = tuple(a * b % p for a, b in zip(values, xi))
    candidates.sort(key=lambda mc: order.key(mc[0]))
    A = list(zip(*(col for _, col in candidates)))
    _, pivots = row_echelon_pivots(A, p)
    return [candidates[j][0] for j in pivots]


def lt_a(sm, essential, n):
    """Minimal generators of the leading term ideal.

    ``sm`` must be sorted increasing and ``essential`` hold the indices of the
    essential variables.  Follows the table-driven scheme: for each essential
    variable, products ``x_i * s`` that fall outside ``sm`` are kept unless an
    earlier kept product in the same row divides them.
    """
    sm_set = set(sm)
    ess = sorted(essential)
    lt = []
    seen = set()
    for i in ess:
        xi = Monomial.variable(i, n)
        keep = [False] * len(sm)
        for j, s in enumerate(sm):
            if xi * s in sm_set:
                continue
            keep[j] = not any(keep[k] and sm[k].divides(s) for k in range(j))
        for j, s in enumerate(sm):
            if keep[j]:
                mono = xi * s
                if mono not in seen:
                    seen.add(mono)
                    lt.append(mono)
    ess_set = set(ess)
    lt.extend(Monomial.variable(i, n) for i in range(n) if i not in ess_set)
    return lt


def gb_from_lt(lt, sm, plu, V, order):
    """One monic basis element ``d - sum(c_l * s_l)`` per leading monomial ``d``."""
    p, n = V.p, V.n
    basis = []
    for d in lt:
        if len(d.items) == 1 and d.items[0][1] == 1:
            b = V.columns[d.items[0][0]]
        else:
            b = [d.evaluate(pt, p) for pt in V.rows]
        c = plu_solve(plu, b)
        if c is None:
            raise AssertionError(f"evaluation vector of {d} is not spanned by the standard monomials")
        terms = [(d, 1)]
        terms.extend((s, -cl) for cl, s in zip(c, sm) if cl)
        g = Polynomial(n, p, order, terms)
        if g.leading_monomial != d:
            raise AssertionError(f"{d} is not the leading term of {g}")
        basis.append(g)
    return basis


def sp_a(sm, plu, V, order):
    """Reduced separators: ``s_t`` is 1 at point ``t`` and 0 at the others."""
    p, n, m = V.p, V.n, V.m
    separators = []
    for t in range(m):
        e = [0] * m
        e[t] = 1
        c = plu_solve(plu, e)
        if c is None:
            raise AssertionError("evaluation matrix of the standard monomials is singular")
        separators.append(Polynomial(n, p, order, [(s, cj) for cj, s in zip(c, sm) if cj]))
    return separators


def ess_gb(V, order):
    """Reduced Groebner basis, standard monomials and separators of I(V).

    ``V`` is a :class:`PointSet`; ``order`` a :class:`TermOrder` or one of
    ``"lex"``, ``"grevlex"``.
    """
    order = as_order(order)
    n = V.n
    state = _State([Monomial.one(n)], V)
    essential = []
    for i in range(n):
        if try_express(i, state, V.columns[i], order) is not None:
            continue
        essential.append(i)
        columns = list(zip(*state.A)) if state.A else None
        sm = sm_a(i, state.sm, V, order, columns)
        log.debug("x%d essential; %d standard monomials", i + 1, len(sm))
        state = _State(sm, V)
    if len(state.sm) != V.m:
        raise AssertionError(f"found {len(state.sm)} standard monomials for {V.m} points")
    lt = lt_a(state.sm, essential, n)
    basis = gb_from_lt(lt, state.sm, state.plu, V, order)
    basis.sort(key=lambda g: order.key(g.leading_monomial), reverse=True)
    separators = sp_a(state.sm, state.plu, V, order)
    return GBResult(
        basis=tuple(basis),
        sm=tuple(state.sm),
        separators=tuple(separators),
        essential_vars=tuple(essential),
        essential_events=len(essential),
    )
