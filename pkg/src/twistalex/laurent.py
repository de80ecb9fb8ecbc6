"""Exact arithmetic in the Laurent polynomial ring Z[s, s^-1].

Values are immutable; all coefficients are arbitrary-precision integers.
A polynomial is stored as its lowest exponent together with the dense
coefficient run from that exponent upward, trimmed at both ends, so every
value has exactly one representation (zero is ``low=0, coeffs=()``).
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterator

from .errors import ParseError


@dataclasses.dataclass(frozen=True, init=False)
class LaurentPoly:
    """An element of Z[s, s^-1].

    ``coeffs[i]`` is the coefficient of ``s**(low + i)``.

    >>> LaurentPoly(-1, (1, 1)) * LaurentPoly(1, (1,))
    LaurentPoly('s + 1')
    """

    low: int
    coeffs: tuple[int, ...]

    def __init__(self, low: int = 0, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            low += 1
        if not coeffs:
            low = 0
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls(exp, (coeff,))

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "LaurentPoly":
        if not d:
            return cls.zero()
        low = min(d)
        high = max(d)
        return cls(low, [d.get(e, 0) for e in range(low, high + 1)])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Highest exponent; -1 stands in for the zero polynomial."""
        return self.low + len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def trailing(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, exp: int) -> int:
        i = exp - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs, ascending, zeros skipped."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.low + i, c

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by s^n."""
        return LaurentPoly(self.low + n, self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.low, other.low)
        high = max(self.degree, other.degree)
        out = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return LaurentPoly(low, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of general polynomials are not in the ring")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, z: complex) -> complex:
        """Evaluate at a nonzero complex number (numeric cross-checks only)."""
        return sum(c * z ** e for e, c in self.terms())

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({to_text(self)!r})"


def _coerce(x) -> "LaurentPoly":
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.const(1)
S = LaurentPoly.monomial(1)


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    """Unique associate of p: lowest exponent 0 and positive leading coefficient.

    Strips the unit ambiguity +-s^n, so canonicalize(u * s**n * p) equals
    canonicalize(p) for u in {1, -1} and any integer n.

    >>> canonicalize(LaurentPoly(2, (-1, 1)))
    LaurentPoly('s - 1')
    """
    if p.is_zero:
        return ZERO
    coeffs = p.coeffs
    if coeffs[-1] < 0:
        coeffs = tuple(-c for c in coeffs)
    return LaurentPoly(0, coeffs)


def is_monic(p: LaurentPoly) -> bool:
    """True iff p is nonzero and both extreme coefficients are units (+-1)."""
    return bool(p.coeffs) and abs(p.coeffs[0]) == 1 and abs(p.coeffs[-1]) == 1


# -- division -----------------------------------------------------------------
#
# Helpers below work on plain coefficient lists in ascending order with no
# leading-zero guarantees beyond what callers maintain.


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _try_div(f: list[int], g: list[int]) -> list[int] | None:
    """Quotient of f by g in Z[x] when the division is exact, else None."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    lg = g[-1]
    while len(f) >= len(g):
        c, r = divmod(f[-1], lg)
        if r:
            return None
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] -= c * b
        _trim(f)
        if not f:
            break
    return q if not f else None


def divides(g: LaurentPoly, p: LaurentPoly) -> bool:
    """True iff g divides p in Z[s, s^-1]."""
    if g.is_zero:
        return p.is_zero
    if p.is_zero:
        return True
    return _try_div(list(p.coeffs), list(g.coeffs)) is not None


def divexact(p: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / g; raises ValueError if g does not divide p."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero:
        return ZERO
    q = _try_div(list(p.coeffs), list(g.coeffs))
    if q is None:
        raise ValueError(f"{g} does not divide {p} in Z[s, s^-1]")
    return LaurentPoly(p.low - g.low, q)


# -- gcd ----------------------------------------------------------------------


def _content(f: list[int]) -> int:
    return math.gcd(*f) if f else 0


def _primitive(f: list[int]) -> list[int]:
    c = _content(f)
    if c in (0, 1):
        return list(f)
    return [a // c for a in f]


def _prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of f by g: lc(g)^(deg f - deg g + 1) * f mod g."""
    f = list(f)
    lg = g[-1]
    steps = len(f) - len(g) + 1
    while len(f) >= len(g):
        c = f[-1]
        k = len(f) - len(g)
        f = [a * lg for a in f]
        for i, b in enumerate(g):
            f[k + i] -= c * b
        _trim(f)
        steps -= 1
        if not f:
            break
    if f and steps > 0:
        f = [a * lg ** steps for a in f]
    return f


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in Z[s, s^-1], in canonical form.

    Split into integer content and primitive part; the primitive parts run
    through a pseudo-remainder sequence kept primitive at each step, so no
    rational arithmetic ever occurs.

    >>> gcd(LaurentPoly(0, (-2, 2)), LaurentPoly(0, (-4, 4)))
    LaurentPoly('2s - 2')
    """
    if p.is_zero:
        return canonicalize(q)
    if q.is_zero:
        return canonicalize(p)
    c = math.gcd(_content(list(p.coeffs)), _content(list(q.coeffs)))
    a = _primitive(list(p.coeffs))
    b = _primitive(list(q.coeffs))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if a[-1] < 0:
        a = [-x for x in a]
    return LaurentPoly(0, [c * x for x in a])


# -- resultants ---------------------------------------------------------------


def _det_int(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def resultant_with_cyclotomic(p: LaurentPoly, d: int) -> int:
    """|Res(p^, t^d - 1)| over Z, where p^ is the polynomial-part associate of p.

    Equals the absolute value of the product of p over all d-th roots of
    unity, computed exactly via a Sylvester determinant.
    """
    if p.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    if d < 1:
        raise ValueError("d must be a positive integer")
    f = list(p.coeffs)  # associate with lowest exponent 0
    n = len(f) - 1
    if n == 0:
        return abs(f[0]) ** d
    g = [-1] + [0] * (d - 1) + [1]  # t^d - 1, ascending
    size = n + d
    fd = f[::-1]
    gd = g[::-1]
    rows = []
    for i in range(d):
        rows.append([0] * i + fd + [0] * (d - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (n - 1 - i))
    assert all(len(r) == size for r in rows)
    return abs(_det_int(rows))


# -- text form ----------------------------------------------------------------


def to_text(p: LaurentPoly, var: str = "s", compact: bool = False) -> str:
    """Render with descending exponents, e.g. ``s^4 - s^3 - s + 1``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for exp, c in sorted(p.terms(), reverse=True):
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + ("" if exp == 1 else f"^{exp}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        elif compact:
            parts.append(("-" if c < 0 else "+") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def parse_laurent(text: str, var: str | None = None, line: int | None = None) -> LaurentPoly:
    """Parse polynomial text such as ``s^4 - s^3 + 2s^-1`` or ``t^2-3t+1``.

    Whitespace-insensitive (all whitespace is discarded before parsing, so
    reported columns refer to the compacted text); a single variable letter
    is allowed, enforced to equal ``var`` when given.
    """
    text = "".join(text.split())
    terms: dict[int, int] = {}
    seen_var = var
    i = 0
    n = len(text)
    any_term = False

    while i < n:
        col = i + 1
        sign = 1
        if text[i] in "+-":
            if text[i] == "-":
                sign = -1
            i += 1
        elif any_term:
            raise ParseError(f"expected '+' or '-' before {text[i]!r}", line, col)
        start = i
        while i < n and text[i].isdigit():
            i += 1
        coeff = int(text[start:i]) if i > start else None
        exp = 0
        if i < n and text[i].isalpha():
            letter = text[i]
            if seen_var is None:
                seen_var = letter
            elif letter != seen_var:
                raise ParseError(f"unexpected variable {letter!r} (expected {seen_var!r})", line, i + 1)
            i += 1
            exp = 1
            if i < n and text[i] == "^":
                i += 1
                estart = i
                if i < n and text[i] == "-":
                    i += 1
                while i < n and text[i].isdigit():
                    i += 1
                if i == estart or text[estart:i] == "-":
                    raise ParseError("malformed exponent", line, estart + 1)
                exp = int(text[estart:i])
        elif coeff is None:
            raise ParseError(f"malformed polynomial term at {text[start:start+8]!r}", line, col)
        terms[exp] = terms.get(exp, 0) + sign * (1 if coeff is None else coeff)
        any_term = True
    if not any_term:
        raise ParseError("empty polynomial", line, 1)
    return LaurentPoly.from_dict(terms)
