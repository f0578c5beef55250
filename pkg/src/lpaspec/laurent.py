"""Laurent polynomials K[x, x^-1] over the rationals or GF(p).

The units are exactly the monomials a*x^k, so irreducibility and
"equal up to units" reduce to questions about the ordinary polynomial
obtained by shifting the lowest exponent to zero.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import gcd

from .errors import ExpressionSyntaxError, UnsupportedError, ValidationError
from .fields import Field, PrimeField, Rationals


class LaurentPoly:
    __slots__ = ("field", "terms")

    def __init__(self, field: Field, coeffs=None):
        self.field = field
        acc = {}
        items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
        for k, a in items:
            a = field.normalize(a)
            acc[int(k)] = field.add(acc.get(int(k), field.zero), a)
        self.terms = tuple(sorted((k, a) for k, a in acc.items() if a != 0))

    @classmethod
    def x(cls, field: Field, k: int = 1) -> "LaurentPoly":
        return cls(field, {k: field.one})

    @classmethod
    def constant(cls, field: Field, a) -> "LaurentPoly":
        return cls(field, {0: a})

    @classmethod
    def from_coeffs(cls, field: Field, coeffs, shift: int = 0) -> "LaurentPoly":
        """``coeffs[i]`` is the coefficient of x^(i + shift)."""
        return cls(field, {i + shift: a for i, a in enumerate(coeffs)})

    # --- basic structure
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.terms))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def low(self) -> int:
        return self.terms[0][0]

    @property
    def high(self) -> int:
        return self.terms[-1][0]

    @property
    def span(self) -> int:
        """Degree of the shifted ordinary polynomial; -1 for zero."""
        return self.high - self.low if self.terms else -1

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly.constant(self.field, other)
        if other.field != self.field:
            raise ValidationError("Laurent polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        d = dict(self.terms)
        for k, a in other.terms:
            d[k] = self.field.add(d.get(k, self.field.zero), a)
        return LaurentPoly(self.field, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.field, {k: self.field.neg(a) for k, a in self.terms})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        return poly_multiply(self, self._check(other))

    __rmul__ = __mul__

    def scale(self, a) -> "LaurentPoly":
        return LaurentPoly(self.field, {k: self.field.mul(a, c) for k, c in self.terms})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.field, {e + k: c for e, c in self.terms})

    def ordinary_coeffs(self) -> list:
        """Coefficients (low to high) of x^(-low) * self."""
        out = [self.field.zero] * (self.span + 1)
        for k, a in self.terms:
            out[k - self.low] = a
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render_laurent(self)


def poly_multiply(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.field != g.field:
        raise ValidationError("Laurent polynomials over different fields")
    F = f.field
    acc = {}
    for i, a in f.terms:
        for j, b in g.terms:
            acc[i + j] = F.add(acc.get(i + j, F.zero), F.mul(a, b))
    return LaurentPoly(F, acc)


def is_unit(f: LaurentPoly) -> bool:
    return len(f.terms) == 1


def canonical_generator(f: LaurentPoly) -> LaurentPoly:
    """Representative of the class of f up to units: constant term nonzero, monic."""
    if not f:
        raise ValidationError("the zero polynomial has no canonical generator")
    F = f.field
    lead_inv = F.inv(f.terms[-1][1])
    return LaurentPoly(F, {k - f.low: F.mul(a, lead_inv) for k, a in f.terms})


# ---------------------------------------------------------------- ordinary polynomial helpers
# Ordinary polynomials are coefficient lists, low degree first, no trailing zeros.

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(F: Field, a, b):
    a = list(a)
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    inv = F.inv(b[-1])
    while len(a) >= len(b) and a:
        c = F.mul(a[-1], inv)
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] = F.sub(a[i + k], F.mul(c, bi))
        _trim(a)
    return _trim(q), a


def _monic_polys(F: PrimeField, degree: int):
    """All monic degree-``degree`` polynomials over GF(p)."""
    for low in itertools.product(range(F.p), repeat=degree):
        yield list(low) + [1]


def _has_rational_root(coeffs) -> bool:
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return True

    def divisors(n):
        n = abs(n)
        return [d for d in range(1, n + 1) if n % d == 0]

    for p in divisors(a0):
        for q in divisors(an):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if sum(c * r ** i for i, c in enumerate(ints)) == 0:
                    return True
    return False


def is_irreducible(f: LaurentPoly) -> bool:
    """Irreducibility in K[x, x^-1].

    GF(p): trial division of the shifted polynomial by every monic polynomial of
    degree up to half its degree. Rationals: degree <= 3 via the rational-root
    test; higher degrees raise ``UnsupportedError``.
    """
    if not f:
        raise ValidationError("zero is not a candidate for irreducibility")
    if is_unit(f):
        raise ValidationError("units are not candidates for irreducibility")
    F = f.field
    coeffs = f.ordinary_coeffs()
    n = len(coeffs) - 1
    if n == 1:
        return True
    if isinstance(F, Rationals):
        if n > 3:
            raise UnsupportedError(f"irreducibility over the rationals is only decided up to degree 3 (got {n})")
        return not _has_rational_root(coeffs)
    for d in range(1, n // 2 + 1):
        for m in _monic_polys(F, d):
            if m[0] == 0:
                continue  # x is a unit here
            _, r = _divmod(F, coeffs, m)
            if not r:
                return False
    return True


def canonical_irreducibles(F: PrimeField, max_degree: int) -> list:
    """All canonical irreducible generators of degree 1..max_degree over GF(p), sorted."""
    if not isinstance(F, PrimeField):
        raise UnsupportedError("irreducibles can only be listed over a prime field")
    out = []
    for d in range(1, max_degree + 1):
        for m in _monic_polys(F, d):
            if m[0] == 0:
                continue
            f = LaurentPoly.from_coeffs(F, m)
            if is_irreducible(f):
                out.append(f)
    return out


def bezout_witness(f: LaurentPoly, g: LaurentPoly, degree_bound: int | None = None):
    """Find ordinary polynomials (u, v) with u*f + v*g = 1, by exact linear algebra.

    f and g are replaced by their canonical generators first. Unknown degrees are
    capped by ``degree_bound`` (default ``2 * (deg f + deg g)``). Returns ``None``
    if no witness exists within the bound.
    """
    from .linalg import solve_linear

    F = f.field
    a = canonical_generator(f).ordinary_coeffs()
    b = canonical_generator(g).ordinary_coeffs()
    if degree_bound is None:
        degree_bound = 2 * ((len(a) - 1) + (len(b) - 1))
    n_u = n_v = degree_bound + 1
    rows = degree_bound + max(len(a), len(b))
    # column j < n_u: x^j * f ; column n_u + j: x^j * g
    matrix = [[F.zero] * (n_u + n_v) for _ in range(rows)]
    for j in range(n_u):
        for i, c in enumerate(a):
            matrix[i + j][j] = c
    for j in range(n_v):
        for i, c in enumerate(b):
            matrix[i + j][n_u + j] = c
    rhs = [F.zero] * rows
    rhs[0] = F.one
    sol = solve_linear(F, matrix, rhs)
    if sol is None:
        return None
    u = LaurentPoly.from_coeffs(F, sol[:n_u])
    v = LaurentPoly.from_coeffs(F, sol[n_u:])
    return u, v


# ---------------------------------------------------------------- text

_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:/(\d+))?)?\s*(\*)?\s*(x(?:\s*\^\s*(-?\d+))?)?\s*")


def parse_laurent(text: str, field: Field) -> LaurentPoly:
    """Parse ``x^k`` sums such as ``x^2 - 3/2*x + 1 - x^-1``."""
    s = text.strip()
    if not s:
        raise ExpressionSyntaxError("empty polynomial", 0)
    pos = 0
    acc = LaurentPoly(field)
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, den, star, var, exp = m.groups()
        if m.end() == pos or (num is None and var is None):
            raise ExpressionSyntaxError(f"cannot parse polynomial near {s[pos:]!r}", pos)
        if sign is None and not first:
            raise ExpressionSyntaxError("expected '+' or '-' between terms", pos)
        if star and (num is None or var is None):
            raise ExpressionSyntaxError("'*' must join a coefficient and x", pos)
        coeff = field.from_ratio(int(num), int(den) if den else 1) if num is not None else field.one
        if sign == "-":
            coeff = field.neg(coeff)
        k = 0 if var is None else (int(exp) if exp is not None else 1)
        acc = acc + LaurentPoly(field, {k: coeff})
        pos = m.end()
        first = False
    return acc


def render_laurent(f: LaurentPoly) -> str:
    if not f.terms:
        return "0"
    F = f.field
    parts = []
    for k, a in reversed(f.terms):
        neg = False
        if isinstance(F, Rationals) and a < 0:
            neg, a = True, -a
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and a == F.one:
            body = mono
        elif mono:
            body = f"{F.render(a)}*{mono}"
        else:
            body = F.render(a)
        parts.append(("- " if neg else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
