"""Sparse multivariate polynomials over Q and a small expression parser.

Polynomials map exponent tuples to nonzero Fractions.  Two-variable
polynomials (x, y) are the working objects of the resolver; the parser also
reads polynomials in the B-variables a0..ad.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

ZERO = Fraction(0)


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        self.nvars = nvars
        if isinstance(terms, dict):
            terms = terms.items()
        store = {}
        for mono, c in terms:
            c = store.get(mono, ZERO) + Fraction(c)
            if c:
                store[mono] = c
            else:
                store.pop(mono, None)
        self.terms = store

    @classmethod
    def _raw(cls, nvars, store):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = store
        return p

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        store = dict(self.terms)
        for m, c in other.terms.items():
            v = store.get(m, ZERO) + c
            if v:
                store[m] = v
            else:
                del store[m]
        return Poly._raw(self.nvars, store)

    def __neg__(self):
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            if not c:
                return Poly(self.nvars)
            return Poly._raw(self.nvars, {m: c * v for m, v in self.terms.items()})
        store = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                store[m] = store.get(m, ZERO) + c1 * c2
        return Poly(self.nvars, store)

    __rmul__ = __mul__

    def mul_term(self, mono, coeff):
        """Multiply by the single term ``coeff * x^mono``."""
        return Poly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(m, mono)): coeff * c for m, c in self.terms.items()},
        )

    def __pow__(self, n: int):
        out = Poly.monomial((0,) * self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def degrees(self):
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        degs = self.degrees()
        return max(degs) if degs else None

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def substitute(self, images):
        """Replace variable k by the polynomial ``images[k]``."""
        nv = images[0].nvars
        out = Poly(nv)
        for mono, c in self.terms.items():
            term = Poly.monomial((0,) * nv, c)
            for img, e in zip(images, mono):
                if e:
                    term = term * img**e
            out = out + term
        return out

    def to_str(self, names) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m), reverse=True):
            c = self.terms[mono]
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        names = ["x", "y"] if self.nvars == 2 else [f"v{k}" for k in range(self.nvars)]
        return f"Poly({self.to_str(names)!r})"


def poly2(terms) -> Poly:
    return Poly(2, terms)


_TOKEN = re.compile(r"(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^])")


def _tokenize(src: str):
    out = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            return out
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        out.append((m.lastgroup, m.group(), pos))
        pos = m.end()


def parse_polynomial(src: str, variables) -> Poly:
    """Parse ``src`` as a sum of terms ``coeff * v1^e1 * v2^e2 ...``.

    ``variables`` is a list of names, or a dict mapping each accepted
    spelling to its variable index (so several spellings may share an index).
    Coefficients are integers or fractions ``p/q``.
    """
    if isinstance(variables, dict):
        index = dict(variables)
        nvars = max(index.values()) + 1 if index else 0
    else:
        index = {name: k for k, name in enumerate(variables)}
        nvars = len(variables)
    toks = _tokenize(src)
    if not toks:
        raise ParseError("empty polynomial", 0)
    result = Poly(nvars)
    k = 0
    first = True
    while k < len(toks):
        sign = 1
        kind, text, pos = toks[k]
        if kind == "op" and text in "+-":
            sign = -1 if text == "-" else 1
            k += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {text!r}", pos)
        first = False
        coeff = Fraction(sign)
        exps = [0] * nvars
        need_factor = True
        while True:
            if k >= len(toks):
                if need_factor:
                    raise ParseError("unexpected end of input", len(src))
                break
            kind, text, pos = toks[k]
            if need_factor:
                if kind == "num":
                    try:
                        coeff *= Fraction(text)
                    except ZeroDivisionError:
                        raise ParseError("zero denominator", pos) from None
                    k += 1
                elif kind == "name":
                    if text not in index:
                        raise ParseError(f"unknown variable {text!r}", pos)
                    e = 1
                    k += 1
                    if k < len(toks) and toks[k][1] == "^":
                        k += 1
                        if k >= len(toks) or toks[k][0] != "num" or "/" in toks[k][1]:
                            where = toks[k][2] if k < len(toks) else len(src)
                            raise ParseError("exponent must be a nonnegative integer", where)
                        e = int(toks[k][1])
                        k += 1
                    exps[index[text]] += e
                else:
                    raise ParseError(f"unexpected {text!r}", pos)
                need_factor = False
            elif kind == "op" and text == "*":
                need_factor = True
                k += 1
            else:
                break
        if coeff:
            result = result + Poly(nvars, {tuple(exps): coeff})
    return result


def split_generators(src: str):
    parts = [p.strip() for p in src.split(",")]
    if any(not p for p in parts):
        raise ParseError("empty generator in comma-separated list", None)
    return parts


def b_variable_names(d: int) -> dict:
    """Accepted spellings of the B-variables: ``a0..ad`` always, letters a, b, c, ... as well."""
    names = {f"a{k}": k for k in range(d + 1)}
    if d + 1 <= 26:
        for k in range(d + 1):
            names.setdefault(chr(ord("a") + k), k)
    return names
