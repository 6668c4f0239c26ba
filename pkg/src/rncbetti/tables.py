"""Betti tables over S = k[x,y] and over B, the Veronese subring of S.

Scalars are :class:`fractions.Fraction` throughout.  A B-table stores the
columns 0..3 only; every later column is forced by the rule
``beta[i, j] = (d-1) * beta[i-1, j-1]`` for ``i >= 4`` and is produced on
demand by :func:`tail_expand`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import DegreeMismatch, InvalidType, NotFiniteLength

ZERO = Fraction(0)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class _Table:
    """Finitely supported map (i, j) -> Fraction; absent keys read as zero."""

    ncols = 0
    __slots__ = ("_entries", "_hash")

    def _init_entries(self, entries):
        if isinstance(entries, Mapping):
            entries = entries.items()
        store = {}
        for key, value in entries:
            i, j = key
            if not (isinstance(i, int) and isinstance(j, int)):
                raise InvalidType(f"table index {key!r} is not a pair of integers")
            if not 0 <= i < self.ncols:
                raise InvalidType(f"column {i} outside 0..{self.ncols - 1}")
            value = store.get((i, j), ZERO) + as_fraction(value)
            if value:
                store[(i, j)] = value
            else:
                store.pop((i, j), None)
        self._entries = store
        self._hash = None

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(key, ZERO)

    def __contains__(self, key):
        return key in self._entries

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def items(self):
        return sorted(self._entries.items())

    def keys(self):
        return sorted(self._entries)

    def as_dict(self) -> dict:
        return dict(self._entries)

    def column(self, i: int) -> dict:
        return {j: v for (c, j), v in self._entries.items() if c == i}

    def min_degree(self, i: int):
        degs = [j for (c, j) in self._entries if c == i]
        return min(degs) if degs else None

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._entries.values())

    def totals(self) -> list:
        out = [ZERO] * self.ncols
        for (i, _), v in self._entries.items():
            out[i] += v
        return out

    def _same_kind(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def _like(self, entries):
        raise NotImplementedError

    def __add__(self, other):
        self._same_kind(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, ZERO) + v
        return self._like(out)

    def __neg__(self):
        return self._like({k: -v for k, v in self._entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        c = as_fraction(scalar)
        return self._like({k: c * v for k, v in self._entries.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / as_fraction(scalar))

    def _eq_key(self):
        return frozenset(self._entries.items())

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._eq_key() == other._eq_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._eq_key()))
        return self._hash


class SBettiTable(_Table):
    """Betti table over S = k[x,y]: columns 0, 1, 2."""

    ncols = 3
    __slots__ = ()

    def __init__(self, entries=()):
        self._init_entries(entries)

    def _like(self, entries):
        return SBettiTable(entries)

    def __repr__(self):
        return f"SBettiTable({dict(self.items())!r})"


class BBettiTable(_Table):
    """Betti table over B for the rational normal curve of degree ``d``.

    Only columns 0..3 are stored.
    """

    ncols = 4
    __slots__ = ("d",)

    def __init__(self, d: int, entries=()):
        if not isinstance(d, int) or d < 1:
            raise InvalidType(f"d must be a positive integer, got {d!r}")
        self.d = d
        self._init_entries(entries)

    def _like(self, entries):
        return BBettiTable(self.d, entries)

    def _same_kind(self, other):
        super()._same_kind(other)
        if other.d != self.d:
            raise DegreeMismatch(f"tables over different rings: d={self.d} and d={other.d}")

    def _eq_key(self):
        return (self.d, super()._eq_key())

    def tail(self, max_col: int) -> list:
        return tail_expand(self, max_col)

    def __getitem__(self, key):
        i, j = key
        if i >= 4:
            # geometric tail
            if self.d == 1:
                return ZERO
            return (self.d - 1) ** (i - 3) * self._entries.get((3, j - (i - 3)), ZERO)
        return self._entries.get(key, ZERO)

    def __repr__(self):
        return f"BBettiTable({self.d}, {dict(self.items())!r})"


@dataclass(frozen=True, order=True)
class PureTypeB:
    """Degree sequence (d0, d1, d2; ell) of a pure resolution over B."""

    d: int
    d0: int
    d1: int
    d2: int
    ell: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidType(f"d must be >= 1, got {self.d}")
        if not self.d0 < self.d1 < self.d2:
            raise InvalidType(f"degrees must increase strictly: {self.d0}, {self.d1}, {self.d2}")
        if not 0 <= self.ell < self.d:
            raise InvalidType(f"ell must lie in 0..{self.d - 1}, got {self.ell}")

    def key(self):
        return (self.d0, self.d1, self.d2, self.ell)

    @property
    def weight(self) -> int:
        # third coordinate of the partial order
        return self.d * self.d2 - self.ell

    def __str__(self):
        return f"({self.d0},{self.d1},{self.d2};{self.ell})"


@dataclass(frozen=True, order=True)
class PureTypeS:
    e0: int
    e1: int
    e2: int

    def __post_init__(self):
        if not self.e0 < self.e1 < self.e2:
            raise InvalidType(f"degrees must increase strictly: {self.e0}, {self.e1}, {self.e2}")

    def key(self):
        return (self.e0, self.e1, self.e2)

    def __str__(self):
        return f"({self.e0},{self.e1},{self.e2})"


def pure_betti_b(p: PureTypeB) -> BBettiTable:
    """Canonical Betti table of a pure B-resolution of type ``p``.

    Columns 0..2 are ``(d(d2-d1) - ell, d(d2-d0) - ell, d(d1-d0)(ell+1))``;
    column 3 holds ``beta2 * d * ell / (ell+1)`` in degree ``d2 + 1``.
    """
    d = p.d
    b0 = d * (p.d2 - p.d1) - p.ell
    b1 = d * (p.d2 - p.d0) - p.ell
    b2 = d * (p.d1 - p.d0) * (p.ell + 1)
    b3 = Fraction(b2 * d * p.ell, p.ell + 1)
    return BBettiTable(d, {(0, p.d0): b0, (1, p.d1): b1, (2, p.d2): b2, (3, p.d2 + 1): b3})


def pure_betti_s(p: PureTypeS) -> SBettiTable:
    """Primitive integer Betti table of a pure S-resolution of type ``p``."""
    e0, e1, e2 = p.key()
    b = (e2 - e1, e2 - e0, e1 - e0)
    g = gcd(*b)
    return SBettiTable({(0, e0): b[0] // g, (1, e1): b[1] // g, (2, e2): b[2] // g})


def tail_expand(t: BBettiTable, max_col: int) -> list:
    """Entries ``(i, j, value)`` of the implied columns ``4 <= i <= max_col``."""
    if t.d == 1:
        return []
    out = []
    col3 = sorted(t.column(3).items())
    for i in range(4, max_col + 1):
        factor = (t.d - 1) ** (i - 3)
        for j, v in col3:
            out.append((i, j + i - 3, factor * v))
    return out


class UniPoly:
    """Laurent polynomial in t with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Mapping):
            coeffs = coeffs.items()
        store = {}
        for k, v in coeffs:
            v = store.get(k, ZERO) + as_fraction(v)
            if v:
                store[k] = v
            else:
                store.pop(k, None)
        self.coeffs = store

    @classmethod
    def from_list(cls, values, start=0):
        return cls((start + k, v) for k, v in enumerate(values))

    def __getitem__(self, k):
        return self.coeffs.get(k, ZERO)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        return UniPoly(list(self.coeffs.items()) + list(other.coeffs.items()))

    def __sub__(self, other):
        return UniPoly(list(self.coeffs.items()) + [(k, -v) for k, v in other.coeffs.items()])

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = as_fraction(other)
            return UniPoly({k: c * v for k, v in self.coeffs.items()})
        out = {}
        for a, u in self.coeffs.items():
            for b, w in other.coeffs.items():
                out[a + b] = out.get(a + b, ZERO) + u * w
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        x = as_fraction(x)
        return sum((v * x**k for k, v in self.coeffs.items()), ZERO)

    def derivative(self):
        return UniPoly({k - 1: k * v for k, v in self.coeffs.items()})

    @property
    def low(self):
        return min(self.coeffs, default=0)

    @property
    def high(self):
        return max(self.coeffs, default=0)

    def divmod_one_minus_t_squared(self):
        """Return ``(q, r)`` with ``self = (1-t)^2 q + r`` and ``r`` of width < 2."""
        if not self.coeffs:
            return UniPoly(), UniPoly()
        lo = self.low
        a = [self[lo + k] for k in range(self.high - lo + 1)]
        for _ in range(2):
            # synthetic division by (t - 1), remainder dropped
            b = [ZERO] * max(len(a) - 1, 0)
            if b:
                b[-1] = a[-1]
                for k in range(len(a) - 2, 0, -1):
                    b[k - 1] = a[k] + b[k]
            a = b
        q = UniPoly.from_list(a, lo)
        # dividing by (t-1)^2 equals dividing by (1-t)^2
        r = self - q * UniPoly({0: 1, 1: -2, 2: 1})
        return q, r

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"UniPoly({dict(sorted(self.coeffs.items()))!r})"


def hilbert_numerator(t: BBettiTable) -> UniPoly:
    """``N(t)`` with ``H_M(t) (1-t)^2 = N(t)`` for a module with Betti table ``t``.

    Columns 0..2 contribute ``(sum (-1)^i beta_ij t^j)(1 + (d-1)t)``; the whole
    infinite tail collapses onto ``-sum beta_3j t^j``.
    """
    alt = UniPoly(((j, (-1) ** i * v) for (i, j), v in t.items() if i <= 2))
    col3 = UniPoly(t.column(3))
    return alt * UniPoly({0: 1, 1: t.d - 1}) - col3


def hilbert_polynomial(t: BBettiTable) -> UniPoly:
    q, r = hilbert_numerator(t).divmod_one_minus_t_squared()
    if r:
        raise NotFiniteLength(f"Hilbert numerator leaves remainder {r} after division by (1-t)^2")
    return q


@dataclass
class TableReport:
    """Diagnostics from :func:`validate_b_table`.

    ``blocks`` maps a degree j to ``(s0, s1)`` where ``s0`` is the number of
    MCM summands in the second syzygy living in degree j and ``s1`` their
    weighted count.
    """

    d: int
    blocks: dict
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def block_sums(t: BBettiTable) -> dict:
    d = t.d
    js = {j for (i, j) in t.keys() if i == 2} | {j - 1 for (i, j) in t.keys() if i == 3}
    out = {}
    for j in sorted(js):
        s1 = t[3, j + 1] / d
        out[j] = (t[2, j] - s1, s1)
    return out


def validate_b_table(t: BBettiTable, integral: bool = False) -> TableReport:
    d = t.d
    violations = []
    for (i, j), v in t.items():
        if v < 0:
            violations.append(f"negative entry beta[{i},{j}] = {v}")
    blocks = block_sums(t)
    for j, (s0, s1) in blocks.items():
        if s0 < 0:
            violations.append(f"degree {j}: s0 = {s0} < 0")
        if s1 < 0:
            violations.append(f"degree {j}: s1 = {s1} < 0")
        if s1 > (d - 1) * s0:
            violations.append(f"degree {j}: s1 = {s1} exceeds (d-1)*s0 = {(d - 1) * s0}")
    if integral:
        for (i, j), v in t.items():
            if v.denominator != 1:
                violations.append(f"beta[{i},{j}] = {v} is not an integer")
            elif i == 3 and v.numerator % d:
                violations.append(f"beta[3,{j}] = {v} is not divisible by d = {d}")
    return TableReport(d, blocks, violations)


def pure_leq(p: PureTypeB, q: PureTypeB) -> bool:
    if p.d != q.d:
        raise DegreeMismatch(f"cannot compare types over d={p.d} and d={q.d}")
    return p.d0 <= q.d0 and p.d1 <= q.d1 and p.weight <= q.weight


def apply_redundancy(d: int, d0: int, d1: int, d2: int, ell: int):
    """Write type ``(d0,d1,d2;ell)`` as a combination of the ell = 0 and ell = d-1 types.

    Returns ``((c0, P0), (c1, P1))`` with
    ``pure_betti_b(P) == c0 * pure_betti_b(P0) + c1 * pure_betti_b(P1)``.
    """
    if d < 2:
        raise InvalidType(f"redundancy needs d >= 2, got {d}")
    PureTypeB(d, d0, d1, d2, ell)
    w = Fraction(ell, d - 1)
    return ((1 - w, PureTypeB(d, d0, d1, d2, 0)), (w, PureTypeB(d, d0, d1, d2, d - 1)))


def linear_combination(terms: Iterable, d: int | None = None):
    """Entrywise rational combination of tables of one kind."""
    terms = list(terms)
    if not terms:
        if d is None:
            raise InvalidType("empty combination needs an explicit d")
        return BBettiTable(d)
    out = None
    for c, table in terms:
        piece = table * c
        out = piece if out is None else out + piece
    if d is not None and isinstance(out, BBettiTable) and out.d != d:
        raise DegreeMismatch(f"tables have d={out.d}, expected {d}")
    return out
