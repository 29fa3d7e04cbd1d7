"""Exact arithmetic in the field Q(q) of rational functions in one indeterminate.

Every coefficient in the package lives here.  Values are immutable and kept in
a canonical form, so ``==`` on two values is mathematical equality:

* the numerator is a Laurent polynomial with rational coefficients;
* the denominator is an ordinary polynomial with a nonzero constant term,
  integer coefficients of content 1 and a positive leading coefficient;
* numerator and denominator are coprime; zero is ``0/1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from types import MappingProxyType
from typing import Mapping, Union

Coeff = Union[int, Fraction]
Scalar = Union[int, Fraction, "LaurentPolynomial", "RationalFunction"]


def _c(x: Coeff) -> Coeff:
    # keep integral coefficients as plain ints; int arithmetic is much faster
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class LaurentPolynomial:
    """A finite sum of terms ``c*q^e`` with ``e`` any integer."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[int(e)] = _c(Fraction(c) if not isinstance(c, int) else c)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "LaurentPolynomial":
        # caller guarantees no zero coefficients and normalized values
        p = object.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def monomial(cls, e: int, c: Coeff = 1) -> "LaurentPolynomial":
        return cls({e: c})

    @property
    def terms(self) -> Mapping[int, Coeff]:
        return MappingProxyType(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def low(self) -> int:
        return min(self._t)

    def high(self) -> int:
        return max(self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: _c(Fraction(other))} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: -c for e, c in self._t.items()})

    def __add__(self, other) -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            if isinstance(other, (int, Fraction)):
                other = LaurentPolynomial({0: other})
            else:
                return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = _c(s)
            else:
                t.pop(e, None)
        return LaurentPolynomial._raw(t)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPolynomial._raw({})
            return LaurentPolynomial._raw({e: _c(c * other) for e, c in self._t.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPolynomial._raw({ea + e: _c(ca * c) for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPolynomial._raw({eb + e: _c(cb * c) for e, c in a.items()})
        t: dict[int, Coeff] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                t[e] = t.get(e, 0) + ca * cb
        return LaurentPolynomial._raw({e: _c(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if len(self._t) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._t.items()
            return LaurentPolynomial({e * n: Fraction(c) ** n})
        out = LaurentPolynomial({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``q^k``."""
        return LaurentPolynomial._raw({e + k: c for e, c in self._t.items()})

    def evaluate(self, point: Coeff) -> Fraction:
        point = Fraction(point)
        if point == 0 and self._t and min(self._t) < 0:
            raise ZeroDivisionError("Laurent polynomial has a pole at q = 0")
        return sum((Fraction(c) * point**e for e, c in self._t.items()), Fraction(0))

    def to_text(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for e in sorted(self._t, reverse=True):
            c = Fraction(self._t[e])
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_text()!r})"


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, low degree first)


def _to_dense(p: dict, shift: int) -> list:
    hi = max(p) - shift
    out = [0] * (hi + 1)
    for e, c in p.items():
        out[e - shift] = c
    return out


def _from_dense(a: list, shift: int = 0) -> dict:
    return {i + shift: _c(c) for i, c in enumerate(a) if c}


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(a) - 1 < db:
        return [], _trim(a)
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        f = _c(c / lead)
        quo[i - db] = f
        for j in range(db + 1):
            a[i - db + j] -= f * b[j]
    return quo, _trim(a[:db])


def _monic(a: list) -> list:
    lead = Fraction(a[-1])
    return [_c(Fraction(c) / lead) for c in a]


def poly_gcd(a: list, b: list) -> list:
    """Monic gcd of two dense polynomials over Q (Euclid)."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a) if a else []


class RationalFunction:
    """An element of Q(q) held in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar = 0, den: Scalar = 1):
        n = _as_laurent(num)
        d = _as_laurent(den)
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            # nested construction: fold through field division
            r = _as_rf(num) / _as_rf(den)
            self.num, self.den, self._hash = r.num, r.den, None
            return
        self.num, self.den = _canonical(n._t, d._t)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> "RationalFunction":
        r = object.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def q(cls, e: int = 1, c: Coeff = 1) -> "RationalFunction":
        """The monomial ``c*q^e``."""
        return cls._raw(LaurentPolynomial({e: c}), _ONE_LP)

    def is_zero(self) -> bool:
        return not self.num._t

    def __bool__(self) -> bool:
        return bool(self.num._t)

    def is_laurent(self) -> bool:
        return self.den._t == {0: 1}

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            return self.den._t == {0: 1} and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if self.den._t == {0: 1} and other.den._t == {0: 1}:
            return RationalFunction._raw(self.num + other.num, _ONE_LP)
        if self.den == other.den:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if self.den._t == {0: 1} and other.den._t == {0: 1}:
            return RationalFunction._raw(self.num * other.num, _ONE_LP)
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num._t:
            raise ZeroDivisionError("division by zero in Q(q)")
        return _make(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return _as_rf(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, point: Coeff) -> Fraction:
        """Exact value at ``q = point``; raises ZeroDivisionError at a pole."""
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at q = {point}")
        return self.num.evaluate(point) / d

    def to_text(self) -> str:
        if self.den._t == {0: 1}:
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    def to_json(self) -> dict:
        return {"num": _terms_json(self.num), "den": _terms_json(self.den)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "RationalFunction":
        num = LaurentPolynomial({int(e): Fraction(c) for e, c in obj["num"]})
        den = LaurentPolynomial({int(e): Fraction(c) for e, c in obj["den"]})
        return cls(num, den)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_text()!r})"


def _terms_json(p: LaurentPolynomial) -> list:
    return [[e, str(Fraction(p._t[e]))] for e in sorted(p._t)]


_ONE_LP = LaurentPolynomial({0: 1})


def _as_laurent(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPolynomial({0: x})
    if isinstance(x, RationalFunction):
        return x.num
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


def _as_rf(x) -> RationalFunction | None:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPolynomial):
        return RationalFunction._raw(x, _ONE_LP)
    if isinstance(x, (int, Fraction)):
        return RationalFunction._raw(LaurentPolynomial({0: x}), _ONE_LP)
    return None


def _make(num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction:
    n, d = _canonical(num._t, den._t)
    return RationalFunction._raw(n, d)


def _canonical(num: dict, den: dict) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return LaurentPolynomial._raw({}), _ONE_LP
    d0 = min(den)
    if len(den) == 1:
        c = Fraction(den[d0])
        return LaurentPolynomial._raw({e - d0: _c(v / c) for e, v in num.items()}), _ONE_LP
    n0 = min(num)
    a = _to_dense(num, n0)
    b = _to_dense(den, d0)
    g = poly_gcd(a, b)
    if len(g) > 1:
        a = _divmod(a, g)[0]
        b = _divmod(b, g)[0]
    # integer denominator with content 1 and positive leading coefficient
    scale = lcm(*(Fraction(c).denominator for c in b))
    ints = [int(Fraction(c) * scale) for c in b]
    content = 0
    for c in ints:
        content = gcd(content, c)
    if ints[-1] < 0:
        content = -content
    factor = Fraction(scale, content)
    b = [c // content for c in ints]
    a = [_c(Fraction(c) * factor) for c in a]
    shift = n0 - d0
    if len(b) == 1:
        return LaurentPolynomial._raw(_from_dense([_c(Fraction(c) / b[0]) for c in a], shift)), _ONE_LP
    return LaurentPolynomial._raw(_from_dense(a, shift)), LaurentPolynomial._raw(_from_dense(b))


ZERO = RationalFunction._raw(LaurentPolynomial._raw({}), _ONE_LP)
ONE = RationalFunction._raw(_ONE_LP, _ONE_LP)
Q = RationalFunction.q(1)


def normalize(x: RationalFunction) -> RationalFunction:
    """Re-canonicalize; idempotent on canonical values."""
    return _make(x.num, x.den)


def as_rational_function(x: Scalar) -> RationalFunction:
    r = _as_rf(x)
    if r is None:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return r


def arithmetic(a: Scalar, b: Scalar, op: str) -> RationalFunction:
    a, b = as_rational_function(a), as_rational_function(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def evaluate(a: Scalar, point: Coeff) -> Fraction:
    return as_rational_function(a).evaluate(point)


# ---------------------------------------------------------------------------
# text grammar


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TERM = re.compile(
    r"\s*(?P<coef>\d+(?:/\d+)?)?\s*(?P<star>\*)?\s*(?P<q>q(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?\s*"
)


def parse_laurent(text: str) -> LaurentPolynomial:
    """Parse ``q^2 - 1``, ``1/2*q^-1``, ``-q + 3`` and similar."""
    pos = 0
    n = len(text)
    terms: dict[int, Fraction] = {}
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            if first:
                raise ParseError("empty polynomial", text, pos)
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        m = _TERM.match(text, pos)
        coef, q, exp = m.group("coef"), m.group("q"), m.group("exp")
        if coef is None and q is None:
            raise ParseError("expected a term", text, pos)
        if m.group("star") and (coef is None or q is None):
            raise ParseError("dangling '*'", text, pos)
        c = Fraction(coef) if coef else Fraction(1)
        e = (int(exp) if exp is not None else 1) if q else 0
        terms[e] = terms.get(e, 0) + sign * c
        pos = m.end()
        first = False
    return LaurentPolynomial(terms)


def _split_top(text: str, sep: str) -> list[tuple[int, str]]:
    depth = 0
    parts, start = [], 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", text, i)
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    if depth:
        raise ParseError("unbalanced '('", text, len(text))
    parts.append((start, text[start:]))
    return parts


def _strip_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                return s
        s = s[1:-1].strip()
    return s


def parse_rational(text: str) -> RationalFunction:
    """Parse ``(num)/(den)`` or a bare Laurent polynomial."""
    parts = _split_top(text, "/")
    # a bare fraction coefficient like 1/2*q also contains '/', so only a
    # parenthesised top-level split is a quotient
    if len(parts) == 2 and parts[0][1].strip().endswith(")") and parts[1][1].strip().startswith("("):
        num = parse_laurent(_strip_parens(parts[0][1]))
        den = parse_laurent(_strip_parens(parts[1][1]))
        if den.is_zero():
            raise ParseError("zero denominator", text, parts[1][0])
        return RationalFunction(num, den)
    return RationalFunction(parse_laurent(_strip_parens(text)))


# ---------------------------------------------------------------------------
# common denominators


def exact_quotient(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """a / b for Laurent polynomials when b divides a exactly."""
    if not b._t:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a._t:
        return a
    a0, b0 = min(a._t), min(b._t)
    quo, rem = _divmod(_to_dense(a._t, a0), _to_dense(b._t, b0))
    if rem:
        raise ArithmeticError(f"{b} does not divide {a}")
    return LaurentPolynomial._raw(_from_dense(quo, a0 - b0))


def poly_lcm(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Least common multiple of two canonical denominators (again canonical)."""
    if a == b or b._t == {0: 1}:
        return a
    if a._t == {0: 1}:
        return b
    g = LaurentPolynomial._raw(_from_dense(poly_gcd(_to_dense(a._t, 0), _to_dense(b._t, 0))))
    return _canonical((a * exact_quotient(b, g))._t, {0: 1})[0]


def common_denominator(values) -> tuple[LaurentPolynomial, dict]:
    """A common denominator D of ``values`` and, for each distinct
    denominator d among them, the cofactor D/d."""
    dens = {v.den for v in values}
    d = _ONE_LP
    for x in dens:
        d = poly_lcm(d, x)
    return d, {x: exact_quotient(d, x) for x in dens}


def over(num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction:
    """The canonical form of num/den."""
    return _make(num, den)
