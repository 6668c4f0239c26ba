"""Passing between the Veronese ring B and S = k[x,y].

Degrees stay in each ring's own grading; the factor d between a B-degree j
and the S-degree j*d is applied only here and in :mod:`rncbetti.cone`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidType, UnsupportedShape
from .poly import Poly, b_variable_names, parse_polynomial, split_generators
from .resolver import GradedIdeal
from .tables import BBettiTable, PureTypeB, PureTypeS, SBettiTable, apply_redundancy, pure_betti_b, pure_betti_s


def veronese_images(d: int):
    """Images ``a_i -> x^(d-i) y^i`` of the B-variables."""
    return [Poly.monomial((d - i, i)) for i in range(d + 1)]


def parse_b_generators(src: str, d: int) -> list:
    names = b_variable_names(d)
    return [parse_polynomial(part, names) for part in split_generators(src)]


def veronese_substitute(gens, d: int) -> GradedIdeal:
    """Substitute the B-variables; generators that vanish in S are dropped."""
    images = veronese_images(d)
    out = []
    for g in gens:
        if g.nvars != d + 1:
            raise InvalidType(f"expected a polynomial in {d + 1} variables, got {g.nvars}")
        if not g.is_homogeneous():
            raise InvalidType("B-generator is not homogeneous")
        if not g:
            continue
        s = g.substitute(images)
        if s:
            out.append(s)
    return GradedIdeal(tuple(out))


def veronese_transfer(s: SBettiTable, d: int) -> BBettiTable:
    """B-table of the module whose S-counterpart has Betti table ``s``.

    Column 2 of ``s`` in S-degree ``j*d - ell`` contributes ``ell + 1`` to
    ``beta[2, j]`` and ``d * ell`` to ``beta[3, j + 1]``.
    """
    entries = []
    for (i, e), v in s.items():
        if i <= 1:
            if e % d:
                raise UnsupportedShape(f"S-entry beta[{i},{e}] is not in a degree divisible by d = {d}")
            entries.append(((i, e // d), v))
        else:
            j = -(-e // d)
            ell = j * d - e
            entries.append(((2, j), (ell + 1) * v))
            if ell:
                entries.append(((3, j + 1), d * ell * v))
    return BBettiTable(d, entries)


def s_type_to_b(q: PureTypeS, d: int) -> tuple:
    """B-type and scale with ``veronese_transfer(pure_betti_s(q)) == scale * pure_betti_b(type)``."""
    if q.e0 % d or q.e1 % d:
        raise UnsupportedShape(f"S-type {q} has generator degrees not divisible by d = {d}")
    j = -(-q.e2 // d)
    p = PureTypeB(d, q.e0 // d, q.e1 // d, j, j * d - q.e2)
    image = veronese_transfer(pure_betti_s(q), d)
    canon = pure_betti_b(p)
    key = (0, p.d0)
    return p, image[key] / canon[key]


def transfer_decomposition(terms, d: int) -> list:
    """Carry an S-side decomposition over to B, splitting intermediate ell.

    Returns ``(coefficient, PureTypeB)`` pairs with ell in {0, d-1}.
    """
    out = {}
    for c, q in terms:
        p, scale = s_type_to_b(q, d)
        if d > 1 and 0 < p.ell < d - 1:
            pieces = apply_redundancy(d, p.d0, p.d1, p.d2, p.ell)
        else:
            pieces = ((Fraction(1), p),)
        for w, piece in pieces:
            if w:
                out[piece] = out.get(piece, Fraction(0)) + c * scale * w
    return sorted(((c, p) for p, c in out.items()), key=lambda cp: (cp[1].d0, cp[1].d1, cp[1].weight))
