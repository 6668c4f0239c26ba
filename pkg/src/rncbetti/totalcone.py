"""The cone of total Betti vectors (b0, b1, b2, b3) over B."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidType
from .tables import BBettiTable, PureTypeB, pure_betti_b


@dataclass(frozen=True)
class TotalVector:
    b0: Fraction
    b1: Fraction
    b2: Fraction
    b3: Fraction
    d: int

    @classmethod
    def of(cls, values, d):
        return cls(*(Fraction(v) for v in values), d)

    def as_tuple(self):
        return (self.b0, self.b1, self.b2, self.b3)

    def scaled(self, c):
        return TotalVector.of([c * v for v in self.as_tuple()], self.d)


def total_vector(t: BBettiTable) -> TotalVector:
    return TotalVector.of(t.totals(), t.d)


def _need_d(d):
    if d < 2:
        raise InvalidType(f"the total cone is defined for d >= 2, got {d}")


def tot_slacks(v: TotalVector) -> tuple:
    _need_d(v.d)
    d = v.d
    return (
        v.b3,
        v.b2 - v.b3 / (d - 1),
        v.b1 - v.b2 + v.b3 / d,
        v.b0 - v.b1 + v.b2 - v.b3 / d,
    )


def tot_membership(v: TotalVector):
    """``(inside, slacks)``; inside iff every slack is >= 0."""
    slacks = tot_slacks(v)
    return all(s >= 0 for s in slacks), slacks


def tot_rays(d: int) -> list:
    _need_d(d)
    return [TotalVector.of(r, d) for r in ((1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 1, 0), (0, 1, d, d * (d - 1)))]


def limit_type(family: str, t: int, d: int) -> PureTypeB:
    if t < 1:
        raise InvalidType("t must be >= 1")
    _need_d(d)
    family = family.lower()
    if family == "mt":
        return PureTypeB(d, 0, t, t + 1, 0)
    if family == "nt":
        return PureTypeB(d, 0, t * d, t * d + 1, d - 1)
    raise InvalidType(f"unknown family {family!r}; expected 'mt' or 'nt'")


def limit_vector(family: str, t: int, d: int) -> TotalVector:
    """Total vector of M_t or N_t, normalized so that b0 = 1."""
    v = total_vector(pure_betti_b(limit_type(family, t, d)))
    return v.scaled(1 / v.b0)
