"""The map phi to classes of S-tables, and greedy pure decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InfeasibleClass, NotInCone, UnsupportedShape
from .tables import (
    ZERO,
    BBettiTable,
    PureTypeB,
    PureTypeS,
    SBettiTable,
    block_sums,
    pure_betti_b,
    pure_betti_s,
)


@dataclass(frozen=True)
class PhiClass:
    """Equivalence class of S-tables.

    Columns 0 and 1 are kept verbatim (S-degrees, all divisible by ``d``).
    Column 2 is only remembered through ``blocks[j] = (s0, s1)``: the plain
    and the ell-weighted sums of ``gamma[2, j*d - ell]`` over ``0 <= ell < d``.
    """

    d: int
    cols01: dict = field(default_factory=dict)
    blocks: dict = field(default_factory=dict)

    @classmethod
    def build(cls, d, cols01, blocks):
        cols01 = {k: v for k, v in cols01.items() if v}
        blocks = {j: (s0, s1) for j, (s0, s1) in blocks.items() if s0 or s1}
        return cls(d, cols01, blocks)

    def __add__(self, other):
        if other.d != self.d:
            raise ValueError("classes over different d")
        cols = dict(self.cols01)
        for k, v in other.cols01.items():
            cols[k] = cols.get(k, ZERO) + v
        blocks = dict(self.blocks)
        for j, (a, b) in other.blocks.items():
            s0, s1 = blocks.get(j, (ZERO, ZERO))
            blocks[j] = (s0 + a, s1 + b)
        return PhiClass.build(self.d, cols, blocks)

    def __mul__(self, c):
        c = Fraction(c)
        return PhiClass.build(
            self.d,
            {k: c * v for k, v in self.cols01.items()},
            {j: (c * a, c * b) for j, (a, b) in self.blocks.items()},
        )

    __rmul__ = __mul__

    def is_feasible(self) -> bool:
        return all(s0 >= 0 and 0 <= s1 <= (self.d - 1) * s0 for s0, s1 in self.blocks.values())


def phi(t: BBettiTable) -> PhiClass:
    d = t.d
    cols = {(i, d * j): v for (i, j), v in t.items() if i <= 1}
    return PhiClass.build(d, cols, block_sums(t))


def s_class(gamma: SBettiTable, d: int) -> PhiClass:
    """Class of an S-table under the relation used to define phi."""
    cols = {}
    for (i, e), v in gamma.items():
        if i <= 1:
            if e % d:
                raise UnsupportedShape(f"entry beta[{i},{e}] sits in a degree not divisible by {d}")
            cols[(i, e)] = v
    blocks = {}
    for e, v in gamma.column(2).items():
        j = -(-e // d)
        ell = j * d - e
        s0, s1 = blocks.get(j, (ZERO, ZERO))
        blocks[j] = (s0 + v, s1 + ell * v)
    return PhiClass.build(d, cols, blocks)


def phi_representative(c: PhiClass) -> SBettiTable:
    """The member of ``c`` whose column 2 uses only ell = 0 and ell = d-1."""
    d = c.d
    entries = dict(c.cols01)
    for j, (s0, s1) in c.blocks.items():
        if s0 < 0 or s1 < 0 or s1 > (d - 1) * s0:
            raise InfeasibleClass(f"degree {j}: (s0, s1) = ({s0}, {s1}) violates 0 <= s1 <= (d-1)*s0")
        if s1:
            top = s1 / (d - 1)
            entries[(2, j * d - (d - 1))] = top
            entries[(2, j * d)] = s0 - top
        else:
            entries[(2, j * d)] = s0
    return SBettiTable(entries)


@dataclass
class Decomposition:
    """Result of a greedy decomposition.

    ``trace[k]`` is the remainder left after subtracting the k-th term.
    """

    d: int
    terms: list
    remainder: BBettiTable
    trace: list = field(default_factory=list)

    def types(self):
        return [p for _, p in self.terms]


def _corner_ratio(rem, pure):
    return min(rem[k] / v for k, v in pure.items())


def greedy_decompose_b(t: BBettiTable) -> Decomposition:
    """Peel off maximal multiples of pure diagrams, smallest type first.

    At each step the candidate types share the minimal degrees of columns
    0..2 and try ell = d-1 before ell = 0.
    """
    d = t.d
    terms, trace = [], []
    if not t.is_nonnegative():
        raise NotInCone("table has negative entries", terms, t)
    rem = t
    ells = [d - 1, 0] if d > 1 else [0]
    while rem:
        degs = [rem.min_degree(i) for i in range(3)]
        if None in degs or not degs[0] < degs[1] < degs[2]:
            raise NotInCone(f"no pure diagram fits the corner degrees {degs}", terms, rem)
        for ell in ells:
            p = PureTypeB(d, degs[0], degs[1], degs[2], ell)
            pure = pure_betti_b(p)
            c = _corner_ratio(rem, pure)
            if c > 0:
                break
        else:
            raise NotInCone(f"no positive multiple of a type with degrees {degs} fits", terms, rem)
        rem = rem - c * pure
        terms.append((c, p))
        trace.append(rem)
    return Decomposition(d, terms, rem, trace)


def greedy_decompose_s(t: SBettiTable) -> list:
    """Greedy decomposition of an S-table into pure diagrams; list of (coefficient, PureTypeS)."""
    terms = []
    if not t.is_nonnegative():
        raise NotInCone("table has negative entries", terms, t)
    rem = t
    while rem:
        degs = [rem.min_degree(i) for i in range(3)]
        if None in degs or not degs[0] < degs[1] < degs[2]:
            raise NotInCone(f"no pure diagram fits the corner degrees {degs}", terms, rem)
        p = PureTypeS(*degs)
        pure = pure_betti_s(p)
        c = _corner_ratio(rem, pure)
        rem = rem - c * pure
        terms.append((c, p))
    return terms


def reconstruct(dec: Decomposition) -> BBettiTable:
    out = dec.remainder
    for c, p in dec.terms:
        out = out + c * pure_betti_b(p)
    return out
