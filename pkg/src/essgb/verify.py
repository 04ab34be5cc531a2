"""Checks of a computed result that rely only on evaluation and divisibility.

Together, the checks in :func:`check_reduced_gb` characterize the reduced
Groebner basis of I(V): a monic set of vanishing polynomials whose leading
monomials are pairwise non-divisible, whose tails live in a divisor-closed
set of exactly ``m`` monomials, and whose leading monomials cover every
monomial outside that set.
"""

from dataclasses import dataclass, field

from .bm import bm_gb
from .core import ess_gb
from .monomials import Monomial, as_order, format_polynomial


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self):
        return all(passed for _, passed, _ in self.checks)

    def failures(self):
        return [c for c in self.checks if not c[1]]

    def lines(self):
        return [f"CHECK {name} {'PASS' if passed else 'FAIL'} {detail}".rstrip() for name, passed, detail in self.checks]

    def render(self):
        status = "all checks passed" if self.ok else f"{len(self.failures())} of {len(self.checks)} checks failed"
        return "\n".join(self.lines() + [status])

    def __bool__(self):
        return self.ok


def _first(items, limit=3):
    items = list(items)
    shown = "; ".join(items[:limit])
    return shown + (f" (+{len(items) - limit} more)" if len(items) > limit else "")


class _LeadIndex:
    """Divisibility queries against a set of leading monomials.

    Most leading monomials are single variables; those are looked up by
    index so a query costs O(support + number of other leads).
    """

    def __init__(self, leads):
        self.linear = {}
        self.other = []
        for mono in leads:
            if mono.degree == 1:
                self.linear[mono.items[0][0]] = mono
            else:
                self.other.append(mono)

    def divisors(self, mono):
        found = [self.linear[i] for i, _ in mono.items if i in self.linear]
        found.extend(lt for lt in self.other if lt.divides(mono))
        return found


def check_reduced_gb(result, V, order):
    order = as_order(order)
    report = VerificationReport()
    basis, sm = result.basis, tuple(result.sm)
    p = V.p

    bad = [format_polynomial(g) for g in basis if g.is_zero() or g.leading_coefficient != 1]
    report.add("monic", not bad, _first(bad))

    bad = [
        format_polynomial(g)
        for g in basis
        if not g.is_zero() and g.leading_monomial != order.max(g.monomials())
    ]
    report.add("leading_term_first", not bad, _first(bad))

    leads = [g.leading_monomial for g in basis if not g.is_zero()]
    index = _LeadIndex(leads)
    bad = [f"{a} | {b}" for b in leads for a in index.divisors(b) if a != b]
    if len(set(leads)) != len(leads):
        bad.append("repeated leading monomial")
    report.add("leading_terms_minimal", not bad, _first(bad))

    sm_set = set(sm)
    bad = [
        f"{mono} in tail of {format_polynomial(g)}"
        for g in basis
        for mono in g.monomials()[1:]
        if mono not in sm_set
    ]
    report.add("tails_in_sm", not bad, _first(bad))

    bad = [
        f"{format_polynomial(g)} at point {t + 1}"
        for g in basis
        for t, pt in enumerate(V.rows)
        if g.evaluate(pt, p)
    ]
    report.add("vanishing", not bad, _first(bad))

    report.add("sm_count", len(sm) == V.m and len(sm_set) == len(sm), f"|sm|={len(sm)}, m={V.m}")

    bad = []
    for s in sm:
        for i, _ in s.items:
            d = s / Monomial.variable(i, s.n)
            if d not in sm_set:
                bad.append(f"{d} divides {s}")
    report.add("sm_divisor_closed", not bad, _first(bad))

    bad = [f"{lt} | {s}" for s in sm for lt in index.divisors(s)]
    report.add("sm_disjoint_from_lt_ideal", not bad, _first(bad))

    # Every neighbour x_i * s of the staircase is standard or a multiple of a
    # leading monomial; with divisor-closure this covers all monomials.
    n = V.n
    bad = []
    for s in sm:
        for i in range(n):
            mono = s * Monomial.variable(i, n)
            if mono not in sm_set and not index.divisors(mono):
                bad.append(str(mono))
    report.add("lt_ideal_covers_complement", not bad, _first(bad))
    return report


def check_separators(result, V):
    report = VerificationReport()
    p = V.p
    seps = result.separators
    report.add("separator_count", len(seps) == V.m, f"{len(seps)} separators for {V.m} points")
    bad = []
    for t, s in enumerate(seps):
        for ell, pt in enumerate(V.rows):
            want = int(t == ell)
            got = s.evaluate(pt, p)
            if got != want:
                bad.append(f"s{t + 1}(p{ell + 1})={got}, expected {want}")
    report.add("separator_delta", not bad, _first(bad))
    sm_set = set(result.sm)
    bad = [f"{mono} in s{t + 1}" for t, s in enumerate(seps) for mono in s.monomials() if mono not in sm_set]
    report.add("separators_reduced", not bad, _first(bad))
    return report


def verify_result(result, V, order):
    return check_reduced_gb(result, V, order).extend(check_separators(result, V))


def canonical_basis(result):
    return sorted(format_polynomial(g) for g in result.basis)


def cross_check(V, order):
    """Run both algorithms and compare their outputs exactly."""
    order = as_order(order)
    a, b = ess_gb(V, order), bm_gb(V, order)
    report = VerificationReport()
    ga, gb = canonical_basis(a), canonical_basis(b)
    report.add("basis_equal", ga == gb, "" if ga == gb else f"essgb {ga} vs bm {gb}")
    sa, sb = [str(s) for s in a.sm], [str(s) for s in b.sm]
    report.add("sm_equal", sa == sb, "" if sa == sb else f"essgb {sa} vs bm {sb}")
    ta = [format_polynomial(s) for s in a.separators]
    tb = [format_polynomial(s) for s in b.separators]
    report.add("separators_equal", ta == tb, "" if ta == tb else f"essgb {ta} vs bm {tb}")
    return report
