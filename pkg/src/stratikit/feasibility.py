"""Exact feasibility of mixed strict/weak rational linear systems.

Equalities are removed first by Gaussian pivoting; the remaining inequalities
go through Fourier-Motzkin elimination where a derived row is strict iff any
parent row is strict.  Witness points are rebuilt by back-substitution,
taking interval midpoints (or bound +/- 1 on unbounded sides).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InputError

# A row is (coeffs, const, strict) and means  const + coeffs . x  > 0  when
# strict, >= 0 otherwise.  An equality row is (coeffs, const).


class LinearSystem:
    def __init__(self, nvars, equalities=(), inequalities=()):
        self.nvars = int(nvars)
        self.equalities = [
            (tuple(Fraction(c) for c in co), Fraction(k)) for co, k in equalities
        ]
        self.inequalities = [
            (tuple(Fraction(c) for c in co), Fraction(k), bool(s))
            for co, k, s in inequalities
        ]
        for co, _ in self.equalities:
            if len(co) != self.nvars:
                raise InputError("equality coefficient length mismatch")
        for co, _, _ in self.inequalities:
            if len(co) != self.nvars:
                raise InputError("inequality coefficient length mismatch")

    def extended(self, equalities=(), inequalities=()):
        return LinearSystem(
            self.nvars,
            self.equalities + list(equalities),
            self.inequalities + list(inequalities),
        )


def _normalize(coeffs, const):
    """Scale a row by a positive rational to a primitive integer vector."""
    denom = 1
    for c in (*coeffs, const):
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in (*coeffs, const)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1])


def _tidy(rows):
    """Canonicalize rows, drop satisfied constant rows, merge duplicates
    (strict wins).  Returns None on a contradictory constant row."""
    seen = {}
    for coeffs, const, strict in rows:
        if all(c == 0 for c in coeffs):
            if const < 0 or (strict and const == 0):
                return None
            continue
        coeffs, const = _normalize(coeffs, const)
        key = (coeffs, const)
        seen[key] = seen.get(key, False) or strict
    return [(co, k, s) for (co, k), s in seen.items()]


def solve(system):
    """A rational witness satisfying every constraint, or None if infeasible."""
    n = system.nvars

    # Stage 1: pivot away the equalities.
    ineqs = list(system.inequalities)
    pending = list(system.equalities)
    pivots = []  # (var, coeffs, const): var = const + coeffs . x
    pivoted = set()
    while pending:
        coeffs, const = pending.pop(0)
        var = next((j for j, c in enumerate(coeffs) if c != 0), None)
        if var is None:
            if const != 0:
                return None
            continue
        c = coeffs[var]
        expr = tuple(
            -coeffs[j] / c if j != var else Fraction(0) for j in range(n))
        expr_const = -const / c
        pivots.append((var, expr, expr_const))
        pivoted.add(var)

        def subst(row_coeffs, row_const):
            w = row_coeffs[var]
            if w == 0:
                return row_coeffs, row_const
            new = tuple(
                row_coeffs[j] + w * expr[j] if j != var else Fraction(0)
                for j in range(n))
            return new, row_const + w * expr_const

        pending = [subst(co, k) for co, k in pending]
        ineqs = [(*subst(co, k), s) for co, k, s in ineqs]

    # Stage 2: Fourier-Motzkin on the free variables, highest index first.
    free = [v for v in range(n) if v not in pivoted]
    rows = _tidy(ineqs)
    if rows is None:
        return None
    levels = []
    for var in reversed(free):
        levels.append((var, rows))
        lowers = [r for r in rows if r[0][var] > 0]
        uppers = [r for r in rows if r[0][var] < 0]
        others = [r for r in rows if r[0][var] == 0]
        derived = []
        for lco, lk, ls in lowers:
            for uco, uk, us in uppers:
                a, b = -uco[var], lco[var]
                co = tuple(a * lco[j] + b * uco[j] for j in range(n))
                derived.append((co, a * lk + b * uk, ls or us))
        rows = _tidy(others + derived)
        if rows is None:
            return None

    # Stage 3: back-substitute, innermost variable first.
    x = [Fraction(0)] * n
    for var, rows_here in reversed(levels):
        lo = hi = None  # (value, strict)
        for coeffs, const, strict in rows_here:
            c = coeffs[var]
            if c == 0:
                continue
            rest = const + sum(
                coeffs[j] * x[j] for j in range(n) if j != var and coeffs[j] != 0)
            bound = -rest / c
            if c > 0:
                if lo is None or bound > lo[0] or (bound == lo[0] and strict):
                    lo = (bound, strict)
            else:
                if hi is None or bound < hi[0] or (bound == hi[0] and strict):
                    hi = (bound, strict)
        if lo is None and hi is None:
            x[var] = Fraction(0)
        elif lo is None:
            x[var] = hi[0] - 1
        elif hi is None:
            x[var] = lo[0] + 1
        elif lo[0] < hi[0]:
            x[var] = (lo[0] + hi[0]) / 2
        else:
            # Elimination guarantees lo == hi with both bounds weak.
            assert lo[0] == hi[0] and not lo[1] and not hi[1]
            x[var] = lo[0]
    for var, expr, expr_const in reversed(pivots):
        x[var] = expr_const + sum(
            expr[j] * x[j] for j in range(n) if expr[j] != 0)
    return tuple(x)


def feasible(system):
    return solve(system) is not None
