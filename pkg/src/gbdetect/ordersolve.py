"""Realizing leading-term selections as positive weight vectors.

A selection of one support monomial per polynomial is realizable iff the
strict system ``G w > 0, w > 0`` over the difference vectors (target minus
other support monomial) has a solution.  Feasibility is decided exactly by
maximizing a slack t subject to ``G w >= t, w >= t, t <= 1`` with rational
simplex pivoting: the optimum is 1 when the strict system is feasible and 0
otherwise, and clearing denominators of an optimal w yields a positive
integer witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm, prod
from typing import Optional, Sequence

from .poly import PolySystem, WeightOrder, leading_term


@dataclass(frozen=True)
class TargetSelection:
    """One support index per polynomial: the monomial meant to lead."""

    targets: tuple[int, ...]


@dataclass(frozen=True)
class GammaSystem:
    """Integer difference vectors (target - other support monomial)."""

    rows: tuple[tuple[int, ...], ...]


def build_gamma(system: PolySystem, selection: TargetSelection) -> GammaSystem:
    """One row per (polynomial, non-target support monomial) pair.

    Rows are never zero because support monomials are pairwise distinct.
    """
    if len(selection.targets) != len(system.polys):
        raise ValueError("selection length does not match the system")
    rows = []
    for poly, target in zip(system.polys, selection.targets):
        if not 0 <= target < len(poly.terms):
            raise ValueError(f"target index {target} out of range")
        alpha = poly.terms[target].mono
        for k, term in enumerate(poly.terms):
            if k == target:
                continue
            rows.append(tuple(a - b for a, b in zip(alpha, term.mono)))
    return GammaSystem(tuple(rows))


def _simplex_max(A, b, c):
    """Maximize c.x subject to Ax <= b, x >= 0 in exact rational arithmetic.

    Requires b >= 0 so the slack basis is feasible.  Bland's rule prevents
    cycling and makes the result deterministic.  Returns (optimum, x).
    """
    m = len(A)
    nv = len(c)
    tableau = []
    for i in range(m):
        row = list(A[i]) + [Fraction(0)] * m + [b[i]]
        row[nv + i] = Fraction(1)
        tableau.append(row)
    cost = [-x for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(nv, nv + m))
    total = nv + m
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        ratio = None
        leave = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                r = tableau[i][-1] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio = r
                    leave = i
        if leave is None:
            raise RuntimeError("unbounded feasibility LP; this cannot happen with t <= 1")
        pivot = tableau[leave][enter]
        tableau[leave] = [v / pivot for v in tableau[leave]]
        prow = tableau[leave]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                factor = tableau[i][enter]
                tableau[i] = [v - factor * w for v, w in zip(tableau[i], prow)]
        if cost[enter] != 0:
            factor = cost[enter]
            cost = [v - factor * w for v, w in zip(cost, prow)]
        basis[leave] = enter
    x = [Fraction(0)] * total
    for i, bi in enumerate(basis):
        x[bi] = tableau[i][-1]
    return cost[-1], x[:nv]


def _verify_strict_witness(gamma: GammaSystem, witness: Sequence[int]) -> None:
    if any(v < 1 for v in witness):
        raise RuntimeError("witness has an entry below 1")
    for row in gamma.rows:
        if sum(g * v for g, v in zip(row, witness)) < 1:
            raise RuntimeError("witness does not satisfy the strict system")


def solve_strict_system(gamma: GammaSystem, n: int) -> Optional[tuple[int, ...]]:
    """A positive integer w with G w >= 1 componentwise, or None if infeasible.

    Rows that are componentwise <= 0 are infeasible outright; rows that are
    componentwise >= 0 hold for every positive integer vector and are dropped
    before the LP.  The returned witness is the rational optimum scaled by
    the lcm of its denominators, and is re-verified in exact integer
    arithmetic against the full row set.
    """
    for row in gamma.rows:
        if len(row) != n:
            raise ValueError("gamma row dimension mismatch")
    mixed = []
    for row in gamma.rows:
        if all(x <= 0 for x in row):
            return None
        if any(x < 0 for x in row):
            mixed.append(row)
    if not mixed:
        witness = (1,) * n
    else:
        A = []
        b = []
        for row in mixed:
            A.append([Fraction(-x) for x in row] + [Fraction(1)])
            b.append(Fraction(0))
        for j in range(n):
            r = [Fraction(0)] * (n + 1)
            r[j] = Fraction(-1)
            r[n] = Fraction(1)
            A.append(r)
            b.append(Fraction(0))
        A.append([Fraction(0)] * n + [Fraction(1)])
        b.append(Fraction(1))
        c = [Fraction(0)] * n + [Fraction(1)]
        value, x = _simplex_max(A, b, c)
        if value <= 0:
            return None
        scale = lcm(*(f.denominator for f in x[:n]))
        witness = tuple(int(f * scale) for f in x[:n])
    _verify_strict_witness(gamma, witness)
    return witness


def realize_leading_terms(system: PolySystem, selection: TargetSelection) -> Optional[WeightOrder]:
    """A weight order under which every polynomial leads with its target
    monomial, or None when no positive weight vector can do so.

    The witness is post-verified term by term, not just trusted from the LP.
    """
    gamma = build_gamma(system, selection)
    witness = solve_strict_system(gamma, system.n)
    if witness is None:
        return None
    order = WeightOrder(tuple(Fraction(v) for v in witness))
    for poly, target in zip(system.polys, selection.targets):
        if leading_term(order, poly).mono != poly.terms[target].mono:
            raise RuntimeError("LP witness fails to realize the requested leading terms")
    return order


def permutation_prunable(matrix: Sequence[Sequence[int]], sigma: Sequence[int]) -> bool:
    """True iff another permutation has a strictly larger exponent product.

    ``matrix[i][j]`` is the exponent of variable j in the pure-power row i;
    assigning variable sigma(i) to row i cannot be realized by any term order
    when some permutation beats it strictly.  Strict comparison keeps the
    pruning sound under ties; callers must still LP-verify survivors.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square and nonempty")
    if any(e <= 0 for row in matrix for e in row):
        raise ValueError("matrix entries must be positive")
    sig = tuple(sigma)
    if sorted(sig) != list(range(n)):
        raise ValueError("sigma must be a permutation of 0..n-1")
    base = prod(matrix[i][sig[i]] for i in range(n))
    return any(
        prod(matrix[i][p[i]] for i in range(n)) > base
        for p in permutations(range(n))
        if p != sig
    )
