"""Gröbner bases and minimal free resolutions of S/I for S = Q[x,y].

Monomials are pairs ``(a, b)`` standing for ``x^a y^b`` and are ordered
graded-lexicographically with x > y.

The resolution of a finite-colength quotient is built from the reduced
Gröbner basis ``g_1, ..., g_m`` sorted by decreasing x-exponent of the
leading terms.  In two variables the lifts of the m-1 adjacent S-pair
syzygies form a basis of the syzygy module, so

    0 -> S^(m-1) -> S^m -> S

is already a free resolution; it is then made minimal by cancelling unit
entries of the syzygy matrix one at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidType, NotFiniteColength
from .poly import Poly, parse_polynomial, split_generators
from .tables import SBettiTable

MASK64 = (1 << 64) - 1


def order_key(mono):
    return (mono[0] + mono[1], mono[0])


def leading_monomial(p: Poly):
    return max(p.terms, key=order_key)


def _divides(m, n):
    return m[0] <= n[0] and m[1] <= n[1]


@dataclass(frozen=True)
class GradedIdeal:
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.nvars != 2:
                raise InvalidType("ideal generators must be polynomials in x, y")
            if not g:
                raise InvalidType("ideal generators must be nonzero")
            if not g.is_homogeneous():
                raise InvalidType(f"generator {g!r} is not homogeneous")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def parse(cls, src: str):
        gens = [parse_polynomial(part, ["x", "y"]) for part in split_generators(src)]
        return cls(tuple(g for g in gens if g))

    @property
    def degrees(self):
        return [g.degree for g in self.generators]


def divide(f: Poly, basis):
    """Full division of ``f`` by ``basis``; returns ``(quotients, remainder)``."""
    quotients = [Poly(2) for _ in basis]
    leads = [(leading_monomial(g), g) for g in basis]
    leads = [(m, g.terms[m], g) for m, g in leads]
    rem = {}
    p = f
    while p:
        lt = leading_monomial(p)
        c = p.terms[lt]
        for k, (lm, lc, g) in enumerate(leads):
            if _divides(lm, lt):
                shift = (lt[0] - lm[0], lt[1] - lm[1])
                q = c / lc
                quotients[k] = quotients[k] + Poly.monomial(shift, q)
                p = p - g.mul_term(shift, q)
                break
        else:
            rem[lt] = c
            p = p - Poly.monomial(lt, c)
    return quotients, Poly(2, rem)


def _monic(p: Poly) -> Poly:
    return p * (1 / p.terms[leading_monomial(p)])


def _spoly(f: Poly, g: Poly):
    mf, mg = leading_monomial(f), leading_monomial(g)
    lcm = (max(mf[0], mg[0]), max(mf[1], mg[1]))
    uf = (lcm[0] - mf[0], lcm[1] - mf[1])
    ug = (lcm[0] - mg[0], lcm[1] - mg[1])
    return f.mul_term(uf, 1 / f.terms[mf]) - g.mul_term(ug, 1 / g.terms[mg]), uf, ug, lcm


def groebner_basis(ideal) -> list:
    """Reduced Gröbner basis, sorted by decreasing x-exponent of the leading monomial."""
    gens = ideal.generators if isinstance(ideal, GradedIdeal) else tuple(ideal)
    basis = [_monic(g) for g in gens if g]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop()
        mi, mj = leading_monomial(basis[i]), leading_monomial(basis[j])
        if mi[0] * mj[0] == 0 and mi[1] * mj[1] == 0:
            # coprime leading monomials
            continue
        s = _spoly(basis[i], basis[j])[0]
        _, r = divide(s, basis)
        if r:
            basis.append(_monic(r))
            n = len(basis) - 1
            pairs.extend((k, n) for k in range(n))
    # minimalize then interreduce
    basis.sort(key=lambda g: order_key(leading_monomial(g)))
    minimal = []
    for g in basis:
        lm = leading_monomial(g)
        if not any(_divides(leading_monomial(h), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lm = leading_monomial(g)
        tail = g - Poly.monomial(lm, g.terms[lm])
        _, r = divide(tail, others) if others else (None, tail)
        reduced.append(_monic(Poly.monomial(lm) + r))
    reduced.sort(key=lambda g: leading_monomial(g)[0], reverse=True)
    return reduced


def is_finite_colength(gb) -> bool:
    leads = [leading_monomial(g) for g in gb if g]
    return any(m[1] == 0 for m in leads) and any(m[0] == 0 for m in leads)


@dataclass
class ResolutionS:
    """Minimal graded free resolution ``0 -> F2 -> F1 -> F0 = S`` of S/I.

    ``d1`` lists the images of the basis of F1 (minimal generators of I);
    ``d2[l][k]`` is the coefficient of basis vector l of F1 in the image of
    basis vector k of F2.
    """

    betti: SBettiTable
    d1: list
    d2: list
    degrees1: list
    degrees2: list
    gb: list = field(default_factory=list)

    def composition_is_zero(self) -> bool:
        for k in range(len(self.degrees2)):
            total = Poly(2)
            for l, g in enumerate(self.d1):
                total = total + g * self.d2[l][k]
            if total:
                return False
        return True

    def is_minimal(self) -> bool:
        for g in self.d1:
            if g.is_constant():
                return False
        for row in self.d2:
            for entry in row:
                if entry and entry.is_constant():
                    return False
        return True

    def degrees_consistent(self) -> bool:
        if any(g.degree != deg for g, deg in zip(self.d1, self.degrees1)):
            return False
        for l, row in enumerate(self.d2):
            for k, entry in enumerate(row):
                if entry and (not entry.is_homogeneous() or entry.degree != self.degrees2[k] - self.degrees1[l]):
                    return False
        return True


def _adjacent_syzygies(gb):
    m = len(gb)
    cols = []
    for k in range(m - 1):
        s, uf, ug, lcm = _spoly(gb[k], gb[k + 1])
        quotients, r = divide(s, gb)
        assert not r, "S-polynomial of a Gröbner basis failed to reduce to zero"
        col = [-q for q in quotients]
        col[k] = col[k] + Poly.monomial(uf, 1 / gb[k].terms[leading_monomial(gb[k])])
        col[k + 1] = col[k + 1] - Poly.monomial(ug, 1 / gb[k + 1].terms[leading_monomial(gb[k + 1])])
        cols.append((col, lcm[0] + lcm[1]))
    return cols


def _find_unit(matrix, nrows, ncols):
    for l in range(nrows):
        for k in range(ncols):
            e = matrix[l][k]
            if e and e.is_constant():
                return l, k
    return None


def minimal_resolution(ideal) -> ResolutionS:
    if not isinstance(ideal, GradedIdeal):
        ideal = GradedIdeal(tuple(ideal))
    if not ideal.generators:
        raise NotFiniteColength("zero ideal: S/0 is not of finite length")
    gb = groebner_basis(ideal)
    if not is_finite_colength(gb):
        raise NotFiniteColength("quotient is not of finite length: leading terms miss a pure power of x or of y")
    if len(gb) == 1:
        # the unit ideal
        return ResolutionS(SBettiTable(), [], [], [], [], gb)
    syz = _adjacent_syzygies(gb)
    gens = list(gb)
    deg1 = [g.degree for g in gb]
    deg2 = [deg for _, deg in syz]
    # rows index F1, columns index F2
    mat = [[syz[k][0][l] for k in range(len(syz))] for l in range(len(gb))]
    while True:
        hit = _find_unit(mat, len(gens), len(deg2))
        if hit is None:
            break
        r, c = hit
        u = mat[r][c].terms[(0, 0)]
        pivot_row = mat[r]
        new = []
        for l in range(len(gens)):
            if l == r:
                continue
            factor = mat[l][c] * (1 / u)
            row = []
            for k in range(len(deg2)):
                if k == c:
                    continue
                entry = mat[l][k]
                if factor and pivot_row[k]:
                    entry = entry - factor * pivot_row[k]
                row.append(entry)
            new.append(row)
        mat = new
        del gens[r], deg1[r], deg2[c]
    entries = [((0, 0), 1)]
    entries += [((1, e), 1) for e in deg1]
    entries += [((2, e), 1) for e in deg2]
    return ResolutionS(SBettiTable(entries), gens, mat, deg1, deg2, gb)


def splitmix64(state: int):
    """One step of the splitmix64 generator; returns ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def random_forms(degree: int, count: int, seed: int) -> GradedIdeal:
    """``count`` forms of the given degree with coefficients in [-10, 10].

    Coefficients are ``splitmix64 output mod 21 - 10``, drawn monomial by
    monomial from ``x^degree`` down to ``y^degree``, starting from state
    ``seed``.  An all-zero draw is discarded and redrawn.
    """
    if degree < 1 or count < 1:
        raise InvalidType("random_forms needs degree >= 1 and count >= 1")
    state = seed & MASK64
    forms = []
    while len(forms) < count:
        terms = {}
        for i in range(degree + 1):
            state, z = splitmix64(state)
            terms[(degree - i, i)] = Fraction(z % 21 - 10)
        p = Poly(2, terms)
        if p:
            forms.append(p)
    return GradedIdeal(tuple(forms))
