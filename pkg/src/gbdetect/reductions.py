"""Instance generators for the two hardness reductions.

Set packing encodes into homogeneous polynomials whose structural-basis
status matches the packing answer: each set becomes a squarefree monomial
over the element variables, and each of the c polynomials sums those
monomials padded by a private Y variable up to a fixed total degree.
Degree elevation appends every monomial of degree 2m+1 to a homogeneous
degree-m system, which forces zero-dimensionality order by order without
changing whether the original members form a basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .poly import (
    CapExceededError,
    Monomial,
    ParseError,
    Polynomial,
    PolySystem,
    Term,
    WeightOrder,
    mono_degree,
    mono_gcd,
    monomials_of_degree,
)

DEFAULT_PACKING_CAP = 100_000


@dataclass(frozen=True)
class SetPackingInstance:
    """Universe {1..universe}, a family of subsets, a goal, and a size cap."""

    universe: int
    sets: tuple[frozenset[int], ...]
    goal: int
    size_cap: int

    def __post_init__(self):
        if self.universe < 1:
            raise ValueError("universe size must be positive")
        if self.goal < 1:
            raise ValueError("goal must be positive")
        if self.size_cap < 1:
            raise ValueError("size cap must be positive")
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        for s in self.sets:
            if not s:
                raise ValueError("subsets must be nonempty")
            if any(not 1 <= e <= self.universe for e in s):
                raise ValueError("subset element outside the universe")
            if len(s) > self.size_cap:
                raise ValueError(f"subset {sorted(s)} exceeds the size cap {self.size_cap}")


@dataclass(frozen=True)
class EncodingMap:
    """Variable layout and per-set data of an encoded packing instance.

    Variables are X1..Xnu followed by the Y blocks, one block of num_sets
    variables per polynomial.  ``set_monomials[j]`` is the squarefree product
    of the X variables of set j, and ``y_exponents[j]`` pads it to the target
    degree.
    """

    universe: int
    num_sets: int
    goal: int
    degree: int
    var_names: tuple[str, ...]
    set_monomials: tuple[Monomial, ...]
    y_exponents: tuple[int, ...]

    def x_index(self, element: int) -> int:
        return element - 1

    def y_index(self, block: int, set_idx: int) -> int:
        return self.universe + block * self.num_sets + set_idx

    def encoded_monomial(self, block: int, set_idx: int) -> Monomial:
        exps = list(self.set_monomials[set_idx])
        exps[self.y_index(block, set_idx)] = self.y_exponents[set_idx]
        return tuple(exps)


def encode_set_packing(
    inst: SetPackingInstance, degree: Optional[int] = None
) -> tuple[PolySystem, EncodingMap]:
    """Encode a packing instance as goal-many homogeneous polynomials.

    The target degree defaults to size_cap + 1 and must exceed the size cap,
    so every Y exponent degree - |set| stays positive.
    """
    k = len(inst.sets)
    if k == 0:
        raise ValueError("need at least one set to encode")
    c = inst.goal
    nu = inst.universe
    m = inst.size_cap + 1 if degree is None else degree
    if inst.size_cap >= m:
        raise ValueError(f"size cap {inst.size_cap} must be below the target degree {m}")
    nvars = nu + c * k
    names = [f"X{i}" for i in range(1, nu + 1)]
    for block in range(1, c + 1):
        names.extend(f"Y{block}_{j}" for j in range(1, k + 1))

    set_monos = []
    alphas = []
    for s in inst.sets:
        exps = [0] * nvars
        for e in s:
            exps[e - 1] = 1
        set_monos.append(tuple(exps))
        alphas.append(m - len(s))

    emap = EncodingMap(nu, k, c, m, tuple(names), tuple(set_monos), tuple(alphas))
    polys = []
    for block in range(c):
        terms = [Term(Fraction(1), emap.encoded_monomial(block, j)) for j in range(k)]
        poly = Polynomial.from_terms(nvars, terms)
        if any(mono_degree(t.mono) != m for t in poly.terms):
            raise RuntimeError("encoded polynomial is not homogeneous; internal error")
        polys.append(poly)
    return PolySystem(nvars, tuple(names), tuple(polys)), emap


def packing_witness_order(emap: EncodingMap, chosen) -> WeightOrder:
    """The witness order for a choice of one set per polynomial: weight
    degree+1 on each chosen Y variable and 1 everywhere else.

    The chosen term of each polynomial then outweighs the rest; when the
    chosen sets are pairwise disjoint those leading terms are pairwise
    coprime, which is verified here.
    """
    if len(chosen) != emap.goal:
        raise ValueError("need exactly one chosen set per polynomial")
    nvars = emap.universe + emap.goal * emap.num_sets
    weights = [Fraction(1)] * nvars
    for block, j in enumerate(chosen):
        if not 0 <= j < emap.num_sets:
            raise ValueError(f"set index {j} out of range")
        weights[emap.y_index(block, j)] = Fraction(emap.degree + 1)
    order = WeightOrder(tuple(weights))

    chosen_monos = [emap.encoded_monomial(block, j) for block, j in enumerate(chosen)]
    disjoint = True
    seen: set[int] = set()
    for j in chosen:
        members = {i for i in range(1, emap.universe + 1) if emap.set_monomials[j][i - 1]}
        if seen & members:
            disjoint = False
            break
        seen |= members
    if disjoint:
        const = (0,) * nvars
        for a in range(len(chosen_monos)):
            for b in range(a + 1, len(chosen_monos)):
                if mono_gcd(chosen_monos[a], chosen_monos[b]) != const:
                    raise RuntimeError("disjoint choice produced non-coprime terms; internal error")
    return order


def decode_selection(emap: EncodingMap, lts) -> tuple[int, ...]:
    """Recover the chosen set index per polynomial from its leading monomial."""
    if len(lts) != emap.goal:
        raise ValueError("need one leading monomial per polynomial")
    out = []
    for block, mono in enumerate(lts):
        match = None
        for j in range(emap.num_sets):
            if tuple(mono) == emap.encoded_monomial(block, j):
                match = j
                break
        if match is None:
            raise ValueError(f"leading monomial of polynomial {block} does not match the encoding")
        out.append(match)
    return tuple(out)


def elevate_to_zero_dim(system: PolySystem, degree: int) -> PolySystem:
    """Append every monomial of degree 2*degree+1 as a monic member.

    Requires every input polynomial to be homogeneous of the given degree.
    The added monomials are emitted in descending lex order so the result
    serializes reproducibly.
    """
    for i, p in enumerate(system.polys):
        if p.is_zero() or any(mono_degree(t.mono) != degree for t in p.terms):
            raise ValueError(f"system member {i} is not homogeneous of degree {degree}")
    added = tuple(
        Polynomial(system.n, (Term(Fraction(1), mono),))
        for mono in monomials_of_degree(system.n, 2 * degree + 1)
    )
    return PolySystem(system.n, system.var_names, system.polys + added)


@dataclass(frozen=True)
class PackingResult:
    found: bool
    witness: Optional[tuple[int, ...]]


def solve_set_packing_bruteforce(
    inst: SetPackingInstance, *, cap: int = DEFAULT_PACKING_CAP
) -> PackingResult:
    """Exhaustively search for goal-many pairwise disjoint sets."""
    k = len(inst.sets)
    if comb(k, inst.goal) > cap:
        raise CapExceededError(f"{comb(k, inst.goal)} combinations exceed the cap of {cap}")
    for combo in combinations(range(k), inst.goal):
        union: set[int] = set()
        total = 0
        for idx in combo:
            union |= inst.sets[idx]
            total += len(inst.sets[idx])
        if len(union) == total:
            return PackingResult(True, combo)
    return PackingResult(False, None)


# ---------------------------------------------------------------------------
# set-packing text format
#
#   universe 4
#   1,2
#   3
#   goal 2
#   cap 2
# ---------------------------------------------------------------------------


def parse_set_packing(text: str) -> SetPackingInstance:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((lineno, content))
    if not lines:
        raise ParseError("empty input: expected a 'universe' line", 1, 1)

    def keyword_value(entry, keyword):
        lineno, content = entry
        parts = content.split()
        if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():
            raise ParseError(f"expected '{keyword} <positive integer>'", lineno, 1)
        return int(parts[1])

    universe = keyword_value(lines[0], "universe")
    if len(lines) < 4:
        raise ParseError("expected set lines, a 'goal' line and a 'cap' line", lines[-1][0], 1)
    goal = keyword_value(lines[-2], "goal")
    size_cap = keyword_value(lines[-1], "cap")
    sets = []
    for lineno, content in lines[1:-2]:
        if content.split()[0] in ("goal", "cap", "universe"):
            raise ParseError("set lines must come before 'goal' and 'cap'", lineno, 1)
        elements = []
        for piece in content.split(","):
            piece = piece.strip()
            if not piece.isdigit():
                raise ParseError(f"bad set element {piece!r}", lineno, 1)
            elements.append(int(piece))
        sets.append(frozenset(elements))
    if not sets:
        raise ParseError("expected at least one set line", lines[0][0], 1)
    return SetPackingInstance(universe, tuple(sets), goal, size_cap)
