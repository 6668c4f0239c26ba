"""Independent oracles and generators shared by the test modules.

Nothing here calls into the code paths being checked: Hilbert functions are
computed by ranks of monomial-multiple matrices (sympy), pure S-diagrams by
a nullspace computation (sympy).
"""

import random
from fractions import Fraction

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from rncbetti import BBettiTable, PureTypeB, SBettiTable, pure_leq


def q(x):
    return QQ(x.numerator, x.denominator) if isinstance(x, Fraction) else QQ(x)


def hilbert_function(gens, max_degree):
    """dim_k (S/I)_n for n = 0..max_degree by degreewise linear algebra.

    ``gens`` is a list of dicts {(a, b): coefficient} of homogeneous forms.
    """
    gens = [(sum(next(iter(g))), g) for g in gens if g]
    out = []
    for n in range(max_degree + 1):
        rows = []
        for deg, g in gens:
            e = n - deg
            if e < 0:
                continue
            for a in range(e + 1):
                row = [QQ(0)] * (n + 1)
                for (ga, gb), c in g.items():
                    # column = exponent of y in x^(ga+a) y^(gb+e-a)
                    row[gb + e - a] += q(Fraction(c))
                rows.append(row)
        rank = DomainMatrix(rows, (len(rows), n + 1), QQ).rank() if rows else 0
        out.append(n + 1 - rank)
    return out


def hilbert_bound(gens):
    # socle degree of a finite-colength quotient is at most 2*maxdeg - 2
    return 2 * max(sum(next(iter(g))) for g in gens if g) + 1


def alternating_sum(betti: SBettiTable):
    out = {}
    for (i, j), v in betti.items():
        out[j] = out.get(j, 0) + (-1) ** i * v
    return {k: v for k, v in out.items() if v}


def times_one_minus_t_squared(h):
    out = {}
    for n, v in enumerate(h):
        for shift, c in ((0, 1), (1, -2), (2, 1)):
            out[n + shift] = out.get(n + shift, 0) + c * v
    return {k: v for k, v in out.items() if v}


def pure_s_by_nullspace(e0, e1, e2):
    """Primitive positive solution of b0 - b1 + b2 = 0 and e0 b0 - e1 b1 + e2 b2 = 0."""
    m = sympy.Matrix([[1, -1, 1], [e0, -e1, e2]])
    (v,) = m.nullspace()
    den = sympy.ilcm(*[x.q for x in v])
    v = [int(x * den) for x in v]
    g = sympy.igcd(*v)
    v = [x // g for x in v]
    if v[0] < 0:
        v = [-x for x in v]
    return tuple(v)


def all_types(d, max_degree=10, ells=None):
    ells = sorted({0, d - 1}) if ells is None else ells
    out = []
    for d0 in range(max_degree + 1):
        for d1 in range(d0 + 1, max_degree + 1):
            for d2 in range(d1 + 1, max_degree + 1):
                for ell in ells:
                    out.append(PureTypeB(d, d0, d1, d2, ell))
    return out


def random_chain(rng: random.Random, d, max_len=4, max_degree=10):
    """A strictly increasing chain of extremal types with positive rational weights."""
    pool = all_types(d, max_degree)
    chain = [rng.choice(pool)]
    length = rng.randint(1, max_len)
    while len(chain) < length:
        above = [p for p in pool if p != chain[-1] and pure_leq(chain[-1], p)]
        if not above:
            break
        chain.append(rng.choice(above))
    return [(Fraction(rng.randint(1, 30), rng.randint(1, 30)), p) for p in chain]


def random_b_table(rng: random.Random, d, ncols=4, lo=-2, hi=6, density=0.3):
    entries = {}
    for i in range(ncols):
        for j in range(lo, hi + 1):
            if rng.random() < density:
                entries[(i, j)] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return BBettiTable(d, entries)


CUBIC_B = {(0, 0): 1, (1, 1): 1, (1, 2): 2, (2, 3): 5, (3, 4): 9}
CUBIC_S = {(0, 0): 1, (1, 3): 1, (1, 6): 2, (2, 7): 1, (2, 8): 1}
