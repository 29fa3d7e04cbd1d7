"""The Iwahori-Hecke algebra H_k(q^2) in the T_w basis.

Generators h_i = T_{s_i} satisfy the braid relations and
(h_i + 1)(h_i - q^2) = 0.  Elements are finitely supported maps from S_k to
Q(q); the basis rule used for every product is

    T_w T_{s_i} = T_{w s_i}                          if l(w s_i) > l(w)
                = (q^2 - 1) T_w + q^2 T_{w s_i}      otherwise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping

from .permutations import DEFAULT_GROUP_BOUND, Permutation, length, reduced_word
from .scalars import (
    ONE,
    Q,
    ZERO,
    LaurentPolynomial,
    RationalFunction,
    as_rational_function,
    common_denominator,
    over,
    parse_rational,
)
from .tableaux import (
    Partition,
    StandardTableau,
    column_group,
    row_group,
    s_minus,
    s_plus,
    sigma_between,
    sigma_minus,
    sigma_plus,
)

Q2 = Q * Q
Q2M1 = Q2 - 1
QM2 = Q2.inverse()
_ONE = LaurentPolynomial({0: 1})


class HeckeInconsistency(ArithmeticError):
    """An identity the theory guarantees failed to hold."""


class HeckeElement:
    __slots__ = ("k", "_c")

    def __init__(self, k: int, support: Mapping | None = None):
        self.k = k
        c = {}
        if support:
            for w, coeff in support.items():
                key = w.images if isinstance(w, Permutation) else tuple(w)
                if len(key) != k:
                    raise ValueError(f"permutation {key} is not in S_{k}")
                coeff = as_rational_function(coeff)
                if coeff:
                    c[key] = c.get(key, ZERO) + coeff
        self._c = {w: v for w, v in c.items() if v}

    @classmethod
    def _raw(cls, k: int, c: dict) -> "HeckeElement":
        h = object.__new__(cls)
        h.k = k
        h._c = c
        return h

    @classmethod
    def one(cls, k: int) -> "HeckeElement":
        return cls._raw(k, {tuple(range(1, k + 1)): ONE})

    @classmethod
    def zero(cls, k: int) -> "HeckeElement":
        return cls._raw(k, {})

    @property
    def support(self) -> dict[Permutation, RationalFunction]:
        return {Permutation._raw(w): c for w, c in sorted(self._c.items())}

    def coefficient(self, w: Permutation) -> RationalFunction:
        return self._c.get(w.images, ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.k == other.k and self._c == other._c

    def __hash__(self):
        return hash((self.k, frozenset(self._c.items())))

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._raw(self.k, {w: -c for w, c in self._c.items()})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        _check_rank(self, other)
        c = dict(self._c)
        for w, v in other._c.items():
            _accumulate(c, w, v)
        return HeckeElement._raw(self.k, c)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, s) -> "HeckeElement":
        s = as_rational_function(s)
        if not s:
            return HeckeElement.zero(self.k)
        return HeckeElement._raw(self.k, {w: c * s for w, c in self._c.items()})

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "HeckeElement":
        return self.scale(other)

    def times_generator(self, i: int) -> "HeckeElement":
        """Right multiplication by h_i."""
        return HeckeElement._raw(self.k, _times_generator(self._c, i))

    def specialize(self, point=1) -> dict[Permutation, Fraction]:
        """Evaluate every coefficient at q = point (T_w -> w at q = 1)."""
        out = {}
        for w, c in self._c.items():
            v = c.evaluate(point)
            if v:
                out[Permutation._raw(w)] = v
        return out

    def to_text(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(
            f"({c.to_text()}) * T[{','.join(map(str, w))}]" for w, c in sorted(self._c.items())
        )

    def to_json(self) -> list:
        return [{"perm": list(w), **c.to_json()} for w, c in sorted(self._c.items())]

    @classmethod
    def from_json(cls, k: int, items: Iterable[Mapping]) -> "HeckeElement":
        return cls(k, {tuple(d["perm"]): RationalFunction.from_json(d) for d in items})

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"HeckeElement(k={self.k}, {self.to_text()!r})"


def _check_rank(a: HeckeElement, b: HeckeElement) -> None:
    if a.k != b.k:
        raise ValueError(f"rank mismatch: H_{a.k} versus H_{b.k}")


def _accumulate(c: dict, w: tuple, v: RationalFunction) -> None:
    s = c.get(w)
    s = v if s is None else s + v
    if s:
        c[w] = s
    else:
        c.pop(w, None)


def _times_generator(c: dict, i: int) -> dict:
    out: dict = {}
    for w, v in c.items():
        ws = list(w)
        ws[i - 1], ws[i] = ws[i], ws[i - 1]
        ws = tuple(ws)
        if w[i - 1] < w[i]:
            _accumulate(out, ws, v)
        else:
            _accumulate(out, w, v * Q2M1)
            _accumulate(out, ws, v * Q2)
    return out


def generator(i: int, k: int) -> HeckeElement:
    """h_i = T_{s_i}."""
    return HeckeElement._raw(k, {Permutation.simple(i, k).images: ONE})


def basis(w: Permutation) -> HeckeElement:
    """T_w."""
    return HeckeElement._raw(w.k, {w.images: ONE})


def _cleared(c: dict) -> tuple[dict, LaurentPolynomial | None]:
    # numerators over one common denominator; None when already Laurent
    if all(v.den._t == {0: 1} for v in c.values()):
        return c, None
    d, cof = common_denominator(c.values())
    return {w: RationalFunction._raw(v.num * cof[v.den], _ONE) for w, v in c.items()}, d


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    _check_rank(a, b)
    k = a.k
    ident = tuple(range(1, k + 1))
    ac, da = _cleared(a._c)
    bc, db = _cleared(b._c)
    # a*T_v for every v in supp(b), sharing prefixes of reduced words
    memo: dict[tuple, dict] = {ident: ac}

    def right(v: tuple) -> dict:
        got = memo.get(v)
        if got is not None:
            return got
        word = reduced_word(Permutation._raw(v))
        j = word[-1]
        shorter = list(v)
        shorter[j - 1], shorter[j] = shorter[j], shorter[j - 1]
        got = _times_generator(right(tuple(shorter)), j)
        memo[v] = got
        return got

    out: dict = {}
    for v, bv in bc.items():
        for w, c in right(v).items():
            _accumulate(out, w, c * bv)
    if da is not None or db is not None:
        den = (da or _ONE) * (db or _ONE)
        out = {w: over(c.num, den) for w, c in out.items()}
    return HeckeElement._raw(k, out)


def product(elements: Iterable[HeckeElement]) -> HeckeElement:
    it = iter(elements)
    acc = next(it)
    for e in it:
        acc = multiply(acc, e)
    return acc


def h_of(sigma: Permutation) -> HeckeElement:
    """T_sigma, i.e. h_{i1}...h_{il} for any reduced word of sigma."""
    return basis(sigma)


def h_of_word(word: Iterable[int], k: int) -> HeckeElement:
    """The product h_{i1}...h_{il} of generators (the word need not be reduced)."""
    acc = HeckeElement.one(k)
    for i in word:
        acc = acc.times_generator(i)
    return acc


def generator_inverse(i: int, k: int) -> HeckeElement:
    """h_i^{-1} = q^{-2} h_i + (q^{-2} - 1)."""
    return HeckeElement._raw(k, {
        Permutation.simple(i, k).images: QM2,
        tuple(range(1, k + 1)): QM2 - 1,
    })


def invert_basis(sigma: Permutation) -> HeckeElement:
    """T_sigma^{-1}, the product of generator inverses along the reversed word."""
    return _invert_basis(sigma.images)


@cache
def _invert_basis(images: tuple) -> HeckeElement:
    k = len(images)
    acc = HeckeElement.one(k)
    for i in reversed(reduced_word(Permutation._raw(images))):
        acc = multiply(acc, generator_inverse(i, k))
    return acc


def e_plus(lam, bound: int = DEFAULT_GROUP_BOUND) -> HeckeElement:
    """Sum of T_sigma over the row group of S_+."""
    lam = Partition(lam)
    return _e_plus(lam, bound)


@cache
def _e_plus(lam: Partition, bound: int) -> HeckeElement:
    return HeckeElement._raw(lam.k, {s.images: ONE for s in row_group(s_plus(lam), bound)})


def e_minus(lam, bound: int = DEFAULT_GROUP_BOUND) -> HeckeElement:
    """Sum of (-q^2)^{-l(sigma)} T_sigma over the column group of S_-."""
    lam = Partition(lam)
    return _e_minus(lam, bound)


@cache
def _e_minus(lam: Partition, bound: int) -> HeckeElement:
    mq2inv = -QM2
    return HeckeElement._raw(
        lam.k, {s.images: mq2inv ** length(s) for s in column_group(s_minus(lam), bound)}
    )


@cache
def x_T(t: StandardTableau) -> HeckeElement:
    """h(sm) e_- h(sm)^{-1} h(sp) e_+ h(sp)^{-1} with sm, sp the permutations
    transforming S_- and S_+ into T."""
    lam = t.shape
    sm, sp = sigma_minus(t), sigma_plus(t)
    return product([
        h_of(sm), e_minus(lam), invert_basis(sm),
        h_of(sp), e_plus(lam), invert_basis(sp),
    ])


def ratio_if_multiple(a: HeckeElement, b: HeckeElement) -> RationalFunction | None:
    """The scalar r with a == r*b, or None if a is not a multiple of b (b != 0)."""
    if not b:
        raise ValueError("b must be nonzero")
    if not a:
        return ZERO
    w0, c0 = next(iter(b._c.items()))
    r = a._c.get(w0, ZERO) / c0
    if b.scale(r) != a:
        return None
    return r


@cache
def xi_of(t: StandardTableau) -> RationalFunction:
    """The scalar xi with x_T^2 = xi x_T; every support element must agree."""
    x = x_T(t)
    if not x:
        raise HeckeInconsistency(f"x_T vanishes for T = {t}")
    sq = multiply(x, x)
    ratios = {w: sq._c.get(w, ZERO) / c for w, c in x._c.items()}
    extra = set(sq._c) - set(x._c)
    values = set(ratios.values())
    if extra or len(values) != 1:
        raise HeckeInconsistency(f"x_T^2 is not a multiple of x_T for T = {t}")
    xi = values.pop()
    if not xi:
        raise HeckeInconsistency(f"x_T is nilpotent for T = {t}")
    return xi


@cache
def y_T(t: StandardTableau) -> HeckeElement:
    """The q-Young symmetrizer x_T / xi."""
    return x_T(t).scale(xi_of(t).inverse())


def lemma_gamma(t: StandardTableau) -> RationalFunction | None:
    """gamma with e_- h(sm)^{-1} h(sp) e_+ == gamma * e_- h(s) e_+, where s
    transforms S_+ into S_-.  None if no such scalar exists."""
    lam = t.shape
    lhs = product([e_minus(lam), invert_basis(sigma_minus(t)), h_of(sigma_plus(t)), e_plus(lam)])
    rhs = product([e_minus(lam), h_of(sigma_between(s_plus(lam), s_minus(lam))), e_plus(lam)])
    return ratio_if_multiple(lhs, rhs)


# ---------------------------------------------------------------------------
# text grammar:  (coeff) * T[one-line] + ...

_T_TERM = re.compile(r"T\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]")


def parse_hecke(text: str, k: int | None = None) -> HeckeElement:
    """Parse ``(q^2 - 1) * T[2,1] + (q^2) * T[1,2]``.

    A coefficient is a parenthesised rational function or a bare number and
    may be omitted.  ``h3`` is accepted as shorthand for the generator h_3.
    """
    pos = 0
    terms: list[tuple[tuple, RationalFunction]] = []
    n = len(text)
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        sign = ONE
        if terms:
            if text[pos] not in "+-":
                raise ValueError(f"expected '+' or '-' at position {pos}: {text!r}")
            sign = ONE if text[pos] == "+" else -ONE
            pos += 1
            while pos < n and text[pos].isspace():
                pos += 1
        elif pos < n and text[pos] == "-":
            sign = -ONE
            pos += 1
        coeff = ONE
        if pos < n and text[pos] == "(":
            depth, end = 0, pos
            for end in range(pos, n):
                depth += text[end] == "("
                depth -= text[end] == ")"
                if depth == 0:
                    break
            if depth:
                raise ValueError(f"unbalanced '(' at position {pos}: {text!r}")
            coeff = parse_rational(text[pos:end + 1])
            pos = end + 1
            m = re.compile(r"\s*\*\s*").match(text, pos)
            if not m.group():
                raise ValueError(f"expected '*' at position {pos}: {text!r}")
            pos = m.end()
        else:
            m = re.compile(r"(\d+(?:/\d+)?)\s*\*\s*").match(text, pos)
            if m:
                coeff = as_rational_function(Fraction(m.group(1)))
                pos = m.end()
        m = _T_TERM.match(text, pos)
        if m:
            images = tuple(int(x) for x in m.group(1).split(","))
            Permutation(images)
        else:
            m = re.compile(r"h(\d+)").match(text, pos)
            if not m or k is None:
                raise ValueError(f"expected a basis element T[...] at position {pos}: {text!r}")
            images = Permutation.simple(int(m.group(1)), k).images
        pos = m.end()
        terms.append((images, sign * coeff))
    if not terms:
        raise ValueError("empty Hecke expression")
    size = len(terms[0][0])
    if k is not None and size != k:
        raise ValueError(f"expected elements of H_{k}, got permutations of size {size}")
    out = HeckeElement.zero(size)
    for images, c in terms:
        out = out + HeckeElement(size, {images: c})
    return out
