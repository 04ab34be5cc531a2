import itertools
import random

import pytest
import sympy

from essgb.core import PointSet
from essgb.monomials import Monomial, TermOrder

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_points(rng, p, n, m):
    pts = []
    seen = set()
    while len(pts) < m:
        pt = tuple(rng.randrange(p) for _ in range(n))
        if pt not in seen:
            seen.add(pt)
            pts.append(pt)
    return pts


def random_instance(rng, primes=(2, 3, 5, 7, 11), max_n=10, max_m=10):
    p = rng.choice(primes)
    n = rng.randint(1, max_n)
    m = min(rng.randint(1, max_m), p**n)
    return PointSet(random_points(rng, p, n, m), p)


def corpus(size, seed, **kw):
    rng = random.Random(seed)
    return [random_instance(rng, **kw) for _ in range(size)]


def rank_mod_p(vectors, p):
    """Rank by straightforward elimination on a copy (test-local helper)."""
    rows = [list(v) for v in vectors]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        for k in range(len(rows)):
            if k != r and rows[k][c] % p:
                f = rows[k][c] * inv
                rows[k] = [(a - f * b) % p for a, b in zip(rows[k], rows[r])]
        r += 1
    return r


def brute_force_standard_monomials(V, order):
    """A monomial with all exponents < p is standard iff its evaluation vector is
    independent of those of all smaller such monomials; larger exponents are
    never standard since x^p - x vanishes everywhere."""
    order = TermOrder(order) if isinstance(order, str) else order
    p, n = V.p, V.n
    monos = [Monomial.from_exponents(e) for e in itertools.product(range(p), repeat=n)]
    monos.sort(key=order.key)
    chosen, vectors = [], []
    for mono in monos:
        v = [mono.evaluate(pt, p) for pt in V.rows]
        if rank_mod_p(vectors + [v], p) > len(vectors):
            chosen.append(mono)
            vectors.append(v)
            if len(chosen) == V.m:
                break
    return chosen


def sympy_gens(n):
    # sympy treats the first generator as largest; ours has x_n largest
    syms = sympy.symbols(f"x1:{n + 1}")
    return syms, tuple(reversed(syms))


def to_sympy(poly_text, syms):
    return sympy.sympify(poly_text.replace("^", "**"), locals={str(s): s for s in syms})


def sympy_reduced_gb(polys_text, n, p, order):
    syms, gens = sympy_gens(n)
    exprs = [to_sympy(t, syms) for t in polys_text]
    G = sympy.groebner(exprs, *gens, modulus=p, order=order)
    return {sympy.Poly(g, *gens, modulus=p) for g in G.exprs}


def as_sympy_polys(polys_text, n, p):
    syms, gens = sympy_gens(n)
    return {sympy.Poly(to_sympy(t, syms), *gens, modulus=p) for t in polys_text}


@pytest.fixture
def worked():
    return PointSet([(0, 0, 0), (1, 2, 0)], 5)


@pytest.fixture
def parabola():
    return PointSet([(0, 0), (1, 1), (2, 4)], 5)
