"""S-polynomials, reduction to normal form, the Buchberger basis test,
leading-term coprimality, and the pure-power finiteness certificate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .poly import (
    Polynomial,
    PolySystem,
    Term,
    WeightOrder,
    is_pure_power,
    leading_term,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_quotient,
)

REDUCTION_STRATEGIES = ("max-lt", "first-match")


class ReductionStep(NamedTuple):
    reducer: int
    multiplier: Term


@dataclass(frozen=True)
class ReductionTrace:
    """A reduction chain: subtract multiplier * system[reducer] per step."""

    steps: tuple[ReductionStep, ...]
    remainder: Polynomial


def replay_trace(start: Polynomial, system: PolySystem, trace: ReductionTrace) -> list[Polynomial]:
    """Re-run the recorded steps; returns every intermediate state.

    The last state must equal ``trace.remainder`` exactly.
    """
    states = [start]
    h = start
    for step in trace.steps:
        h = h - system.polys[step.reducer].mul_term(step.multiplier)
        states.append(h)
    return states


def _leading_terms(system: PolySystem, order: WeightOrder) -> list[Term]:
    lts = []
    for i, p in enumerate(system.polys):
        if p.is_zero():
            raise ValueError(f"system member {i} is the zero polynomial")
        lts.append(leading_term(order, p))
    return lts


def s_polynomial(f: Polynomial, g: Polynomial, order: WeightOrder) -> Polynomial:
    """S(f, g) = (lcm/lt(f)) * f - (lcm/lt(g)) * g.

    The lcm of the leading monomials cancels and never occurs in the result.
    """
    lf = leading_term(order, f)
    lg = leading_term(order, g)
    lcm = mono_lcm(lf.mono, lg.mono)
    tf = Term(1 / lf.coeff, mono_quotient(lcm, lf.mono))
    tg = Term(1 / lg.coeff, mono_quotient(lcm, lg.mono))
    return f.mul_term(tf) - g.mul_term(tg)


def reduce_step(f: Polynomial, g: Polynomial, order: WeightOrder) -> Optional[Polynomial]:
    """One reduction step of the head of f by g, or None if lt(g) cannot divide it."""
    lf = leading_term(order, f)
    lg = leading_term(order, g)
    if not mono_divides(lg.mono, lf.mono):
        return None
    t = Term(lf.coeff / lg.coeff, mono_quotient(lf.mono, lg.mono))
    return f - g.mul_term(t)


def _normal_form(f, system, order, lts, strategy) -> ReductionTrace:
    steps = []
    shelf = []
    work = f
    while not work.is_zero():
        head = leading_term(order, work)
        divisors = [i for i, lt in enumerate(lts) if mono_divides(lt.mono, head.mono)]
        if not divisors:
            # irreducible head monomials can never reappear: later steps only
            # introduce strictly smaller monomials
            shelf.append(head)
            work = work.drop_term(work.terms.index(head))
            continue
        if strategy == "first-match":
            j = divisors[0]
        else:
            j = max(divisors, key=lambda i: order.key(lts[i].mono))
        t = Term(head.coeff / lts[j].coeff, mono_quotient(head.mono, lts[j].mono))
        steps.append(ReductionStep(j, t))
        work = work - system.polys[j].mul_term(t)
    remainder = Polynomial.from_terms(f.n, shelf)
    return ReductionTrace(tuple(steps), remainder)


def normal_form(
    f: Polynomial,
    system: PolySystem,
    order: WeightOrder,
    strategy: str = "max-lt",
) -> ReductionTrace:
    """Fully reduce f by the system: no monomial of the remainder is divisible
    by any member's leading monomial.

    The head of the working polynomial strictly decreases at every step,
    which guarantees termination.  ``max-lt`` picks the reducer with the
    largest leading monomial under the order, ``first-match`` the one with
    the smallest system index; ties go to the smaller index.
    """
    if strategy not in REDUCTION_STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    lts = _leading_terms(system, order)
    return _normal_form(f, system, order, lts, strategy)


@dataclass(frozen=True)
class GroebnerReport:
    is_basis: bool
    failing_pair: Optional[tuple[int, int]]
    failing_remainder: Optional[Polynomial]
    pairs_checked: int
    pairs_skipped: int


def is_groebner_basis(
    system: PolySystem,
    order: WeightOrder,
    *,
    skip_coprime: bool = True,
    strategy: str = "max-lt",
) -> GroebnerReport:
    """Buchberger's criterion: every S-pair must reduce to zero over the system.

    Pairs whose leading monomials are coprime reduce to zero by the first
    Buchberger criterion and may be skipped; ``skip_coprime=False`` disables
    the shortcut for oracle cross-checks.  On failure the report carries the
    lexicographically smallest failing pair and its nonzero remainder.
    """
    if strategy not in REDUCTION_STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not system.polys:
        raise ValueError("empty system")
    lts = _leading_terms(system, order)
    const = (0,) * system.n
    checked = 0
    skipped = 0
    for i in range(len(system.polys)):
        for j in range(i + 1, len(system.polys)):
            if skip_coprime and mono_gcd(lts[i].mono, lts[j].mono) == const:
                skipped += 1
                continue
            checked += 1
            s = s_polynomial(system.polys[i], system.polys[j], order)
            if s.is_zero():
                continue
            trace = _normal_form(s, system, order, lts, strategy)
            if not trace.remainder.is_zero():
                return GroebnerReport(False, (i, j), trace.remainder, checked, skipped)
    return GroebnerReport(True, None, None, checked, skipped)


def pairwise_coprime_lt(system: PolySystem, order: WeightOrder) -> bool:
    """True iff the leading monomials are pairwise coprime."""
    lts = _leading_terms(system, order)
    const = (0,) * system.n
    for i in range(len(lts)):
        for j in range(i + 1, len(lts)):
            if mono_gcd(lts[i].mono, lts[j].mono) != const:
                return False
    return True


@dataclass(frozen=True)
class ZeroDimReport:
    """Per-variable pure-power certificate for a finite solution set.

    ``per_variable[i]`` is the index of a member whose leading monomial is a
    pure power of variable i.  A constant leading monomial means the ideal is
    the unit ideal; that case certifies finiteness vacuously and is flagged
    separately.
    """

    is_zero_dimensional: bool
    unit_ideal: bool
    per_variable: tuple[Optional[int], ...]


def is_zero_dimensional_lt(system: PolySystem, order: WeightOrder) -> ZeroDimReport:
    lts = _leading_terms(system, order)
    per_var: list[Optional[int]] = [None] * system.n
    unit = False
    for i, lt in enumerate(lts):
        if not any(lt.mono):
            unit = True
            continue
        v = is_pure_power(lt.mono)
        if v is not None and per_var[v] is None:
            per_var[v] = i
    ok = unit or all(w is not None for w in per_var)
    return ZeroDimReport(ok, unit, tuple(per_var))
