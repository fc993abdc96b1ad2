"""Decision procedures for term-order detection.

``detect_gbd_zero_dim`` enumerates n-subsets of the members that carry pure
powers, assigns variables to members injectively, realizes the forced
pure-power targets by LP, and accepts the first order under which the whole
system is a Groebner basis with pure-power leading terms covering every
variable.  ``detect_sgbd`` searches for pairwise-coprime realizable leading
terms, and ``detect_gbd_bruteforce`` exhausts every target selection as an
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import prod
from typing import Optional

from .gb import is_groebner_basis, is_zero_dimensional_lt, pairwise_coprime_lt
from .ordersolve import TargetSelection, permutation_prunable, realize_leading_terms
from .poly import (
    CapExceededError,
    Monomial,
    Polynomial,
    PolySystem,
    WeightOrder,
    is_pure_power,
    leading_term,
    mono_gcd,
)

DEFAULT_ENUMERATION_CAP = 100_000


@dataclass(frozen=True)
class PureSplit:
    """Terms of a polynomial split by whether their monomial is a pure power."""

    pure: Polynomial
    mixed: Polynomial


def split_pure(f: Polynomial) -> PureSplit:
    if f.is_zero():
        raise ValueError("cannot split the zero polynomial")
    pure = tuple(t for t in f.terms if is_pure_power(t.mono) is not None)
    mixed = tuple(t for t in f.terms if is_pure_power(t.mono) is None)
    return PureSplit(Polynomial(f.n, pure), Polynomial(f.n, mixed))


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of a detection run.

    ``found`` implies the witness order was re-verified by the basis engine
    before being reported.  ``subsets_examined`` counts the candidates the
    search actually evaluated (subset/assignment pairs for the
    zero-dimensional detector, target selections for the others).
    """

    found: bool
    witness: Optional[WeightOrder]
    leading_terms: Optional[tuple[Monomial, ...]]
    zero_dimensional: Optional[bool]
    subsets_examined: int
    diagnostics: str


def _validate(system: PolySystem) -> None:
    if not system.polys:
        raise ValueError("empty system")
    for i, p in enumerate(system.polys):
        if p.is_zero():
            raise ValueError(f"system member {i} is the zero polynomial")


def _all_leading_monomials(system: PolySystem, order: WeightOrder) -> tuple[Monomial, ...]:
    return tuple(leading_term(order, p).mono for p in system.polys)


def detect_gbd_zero_dim(system: PolySystem, *, use_pruning: bool = True) -> DetectionResult:
    """Does some positive weight order make the system a Groebner basis of a
    zero-dimensional ideal?

    Per candidate, the LP constrains only the n chosen polynomials; the
    Groebner and finiteness checks then run on the full system under the
    returned order.  The target inside each chosen polynomial is forced: only
    the highest pure power of the assigned variable can beat the lower ones.
    """
    _validate(system)
    n = system.n
    polys = system.polys

    # A nonzero constant member reduces every S-polynomial to zero and marks
    # the unit ideal, which certifies finiteness vacuously.
    for i, p in enumerate(polys):
        if len(p.terms) == 1 and not any(p.terms[0].mono):
            order = WeightOrder((Fraction(1),) * n)
            gb = is_groebner_basis(system, order)
            zd = is_zero_dimensional_lt(system, order)
            if gb.is_basis and zd.is_zero_dimensional:
                return DetectionResult(
                    True,
                    order,
                    _all_leading_monomials(system, order),
                    True,
                    0,
                    f"unit ideal: member {i} is a nonzero constant",
                )
            break

    splits = [split_pure(p) for p in polys]
    pure_members = [i for i, s in enumerate(splits) if not s.pure.is_zero()]
    # highest pure-power exponent per (member, variable); 0 when absent
    best = {}
    covered = set()
    for i in pure_members:
        exps = [0] * n
        for t in splits[i].pure.terms:
            v = is_pure_power(t.mono)
            exps[v] = max(exps[v], t.mono[v])
        best[i] = exps
        covered.update(v for v in range(n) if exps[v] > 0)
    if len(pure_members) < n or covered != set(range(n)):
        return DetectionResult(
            False,
            None,
            None,
            None,
            0,
            "pure powers in the system cannot cover every variable",
        )

    support_index = [{t.mono: k for k, t in enumerate(p.terms)} for p in polys]
    examined = 0
    for subset in combinations(pure_members, n):
        square = all(all(e > 0 for e in best[m]) for m in subset)
        matrix = [list(best[m]) for m in subset] if square else None
        for perm in permutations(range(n)):
            # variable v is assigned to the member at subset position perm[v]
            if any(best[subset[perm[v]]][v] == 0 for v in range(n)):
                continue
            examined += 1
            sigma = [0] * n  # subset position -> assigned variable
            for v in range(n):
                sigma[perm[v]] = v
            if use_pruning and square and permutation_prunable(matrix, sigma):
                continue
            targets = []
            for pos, member in enumerate(subset):
                v = sigma[pos]
                mono = tuple(best[member][v] if j == v else 0 for j in range(n))
                targets.append(support_index[member][mono])
            subsystem = PolySystem(n, system.var_names, tuple(polys[m] for m in subset))
            order = realize_leading_terms(subsystem, TargetSelection(tuple(targets)))
            if order is None:
                continue
            gb = is_groebner_basis(system, order)
            if not gb.is_basis:
                continue
            zd = is_zero_dimensional_lt(system, order)
            if not zd.is_zero_dimensional:
                continue
            return DetectionResult(
                True,
                order,
                _all_leading_monomials(system, order),
                True,
                examined,
                f"subset {subset} with assignment {tuple(sigma)}",
            )
    return DetectionResult(
        False,
        None,
        None,
        None,
        examined,
        "no candidate subset realizes a zero-dimensional Groebner basis",
    )


def detect_sgbd(system: PolySystem, *, cap: int = DEFAULT_ENUMERATION_CAP) -> DetectionResult:
    """Does some order give pairwise-coprime leading terms?

    Enumerates one support monomial per polynomial, keeps the pairwise
    coprime selections, and accepts the first that a positive weight vector
    realizes.  Exponential in the worst case; meant for desk-scale and
    reduction-sized inputs.
    """
    _validate(system)
    total = prod(len(p.terms) for p in system.polys)
    if total > cap:
        raise CapExceededError(f"{total} target selections exceed the cap of {cap}")
    const = (0,) * system.n
    examined = 0
    for combo in product(*(range(len(p.terms)) for p in system.polys)):
        examined += 1
        monos = [system.polys[i].terms[k].mono for i, k in enumerate(combo)]
        coprime = True
        for i in range(len(monos)):
            for j in range(i + 1, len(monos)):
                if mono_gcd(monos[i], monos[j]) != const:
                    coprime = False
                    break
            if not coprime:
                break
        if not coprime:
            continue
        order = realize_leading_terms(system, TargetSelection(combo))
        if order is None:
            continue
        if not pairwise_coprime_lt(system, order):
            raise RuntimeError("realized order lost coprimality; internal error")
        return DetectionResult(
            True,
            order,
            _all_leading_monomials(system, order),
            None,
            examined,
            "pairwise-coprime selection realized",
        )
    return DetectionResult(
        False,
        None,
        None,
        None,
        examined,
        "no realizable selection has pairwise-coprime leading terms",
    )


def detect_gbd_bruteforce(
    system: PolySystem,
    require_zero_dim: bool,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> DetectionResult:
    """Exhaustive oracle over every target selection.

    The leading-term behavior of any order is exactly one selection per
    polynomial, so exhausting realizable selections decides detection
    completely.  Refuses to run past the cap rather than truncating.
    """
    _validate(system)
    total = prod(len(p.terms) for p in system.polys)
    if total > cap:
        raise CapExceededError(f"{total} target selections exceed the cap of {cap}")
    examined = 0
    for combo in product(*(range(len(p.terms)) for p in system.polys)):
        examined += 1
        order = realize_leading_terms(system, TargetSelection(combo))
        if order is None:
            continue
        if not is_groebner_basis(system, order).is_basis:
            continue
        zd = is_zero_dimensional_lt(system, order)
        if require_zero_dim and not zd.is_zero_dimensional:
            continue
        return DetectionResult(
            True,
            order,
            _all_leading_monomials(system, order),
            zd.is_zero_dimensional,
            examined,
            "exhaustive selection search found a basis",
        )
    suffix = " of a zero-dimensional ideal" if require_zero_dim else ""
    return DetectionResult(
        False,
        None,
        None,
        None,
        examined,
        f"no realizable selection is a Groebner basis{suffix}",
    )
