"""The Z_2-graded tensor space V^{(x)k} and the operators acting on it.

V has basis b_1..b_{m+n}; b_1..b_m = t_1..t_m are even and
b_{m+1}..b_{m+n} = u_1..u_n are odd.  A basis tensor is a tuple of letters
(see :mod:`qschur.tableaux` for the letter convention).

Sign conventions, for homogeneous operators and vectors:

    (X (x) Y)(v (x) w) = (-1)^{p(Y) p(v)} Xv (x) Yw

Coproduct used for the k-fold action (k_i = q^{d_i H_i}):

    E_i -> E_i (x) k_i^{-1} + 1 (x) E_i
    F_i -> F_i (x) 1 + k_i (x) F_i
    q^h -> q^h (x) q^h

so on V^{(x)k} the operator E_i acts in slot j with k_i^{-1} on every later
slot, and F_i acts in slot j with k_i on every earlier slot.  This is the
choice under which every r_j commutes with the U_q(gl(m,n)) action for the
R-check matrix below.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

from .hecke import HeckeElement
from .permutations import Permutation, reduced_word
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
from .tableaux import Weight, letter_text

_ONE_LP = LaurentPolynomial({0: 1})


@dataclass(frozen=True)
class CartanElement:
    """h = sum_i c_i E_{i,i} in the dual weight lattice."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "CartanElement") -> "CartanElement":
        return CartanElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, c: int) -> "CartanElement":
        return CartanElement(tuple(c * a for a in self.coeffs))

    def pair(self, weight: Sequence[int]) -> int:
        """<h, mu> for mu given by coordinates in the eps/delta basis."""
        return sum(a * b for a, b in zip(self.coeffs, weight))


@dataclass(frozen=True)
class RootData:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")

    @property
    def dim(self) -> int:
        return self.m + self.n

    @property
    def rank(self) -> int:
        return self.m + self.n - 1

    def parity(self, letter: int) -> int:
        return 0 if letter <= self.m else 1

    def op_parity(self, i: int) -> int:
        """p(E_i) = p(F_i): odd exactly for i = m."""
        return 1 if i == self.m else 0

    def d(self, i: int) -> int:
        return 1 if i <= self.m else -1

    def H(self, i: int) -> CartanElement:
        c = [0] * self.dim
        c[i - 1] = 1
        c[i] = 1 if i == self.m else -1
        return CartanElement(tuple(c))

    def E_diag(self, l: int) -> CartanElement:
        c = [0] * self.dim
        c[l - 1] = 1
        return CartanElement(tuple(c))

    def k_element(self, i: int) -> CartanElement:
        """k_i = q^{d_i H_i}, as the exponent d_i H_i."""
        return self.H(i).scaled(self.d(i))

    def simple_root(self, i: int) -> tuple[int, ...]:
        a = [0] * self.dim
        a[i - 1] = 1
        a[i] = -1
        return tuple(a)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """a_ij = alpha_j(H_i)."""
        r = self.rank
        return tuple(tuple(self.H(i).pair(self.simple_root(j)) for j in range(1, r + 1))
                     for i in range(1, r + 1))

    def q_i(self, i: int) -> RationalFunction:
        return RationalFunction.q(self.d(i))


class TensorVector:
    """A sparse element of V^{(x)k}: basis tuple -> coefficient in Q(q)."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping | None = None):
        self.k = k
        t = {}
        if terms:
            for tup, c in terms.items():
                tup = tuple(tup)
                if len(tup) != k:
                    raise ValueError(f"basis tuple {tup} does not have length {k}")
                c = as_rational_function(c)
                s = t.get(tup, ZERO) + c
                if s:
                    t[tup] = s
                else:
                    t.pop(tup, None)
        self.terms = t

    @classmethod
    def _raw(cls, k: int, terms: dict) -> "TensorVector":
        v = object.__new__(cls)
        v.k = k
        v.terms = terms
        return v

    @classmethod
    def basis(cls, tup: Sequence[int]) -> "TensorVector":
        tup = tuple(tup)
        return cls._raw(len(tup), {tup: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorVector) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __neg__(self) -> "TensorVector":
        return TensorVector._raw(self.k, {t: -c for t, c in self.terms.items()})

    def __add__(self, other: "TensorVector") -> "TensorVector":
        if self.k != other.k:
            raise ValueError(f"rank mismatch: {self.k} versus {other.k}")
        out = dict(self.terms)
        for t, c in other.terms.items():
            _acc(out, t, c)
        return TensorVector._raw(self.k, out)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def scale(self, s) -> "TensorVector":
        s = as_rational_function(s)
        if not s:
            return TensorVector._raw(self.k, {})
        return TensorVector._raw(self.k, {t: c * s for t, c in self.terms.items()})

    def __mul__(self, s) -> "TensorVector":
        return self.scale(s)

    __rmul__ = __mul__

    def specialize(self, point=1) -> dict[tuple, Fraction]:
        out = {}
        for t, c in self.terms.items():
            v = c.evaluate(point)
            if v:
                out[t] = v
        return out

    def contents(self) -> set[tuple[int, ...]]:
        return {_content(t) for t in self.terms}

    def to_text(self, m: int, sep: str = "⊗") -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c.to_text()}) * {sep.join(letter_text(x, m) for x in t)}"
            for t, c in sorted(self.terms.items())
        )

    def to_json(self) -> list:
        return [{"tuple": list(t), **c.to_json()} for t, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, k: int, items: Iterable[Mapping]) -> "TensorVector":
        return cls(k, {tuple(d["tuple"]): RationalFunction.from_json(d) for d in items})

    def __repr__(self) -> str:
        return f"TensorVector(k={self.k}, {len(self.terms)} terms)"


def _acc(d: dict, key, v: RationalFunction) -> None:
    s = d.get(key)
    s = v if s is None else s + v
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _content(t: tuple) -> tuple[int, ...]:
    out = [0] * (max(t) if t else 0)
    for x in t:
        out[x - 1] += 1
    return tuple(out)


def basis_tuples(data: RootData, k: int) -> list[tuple[int, ...]]:
    return list(product(range(1, data.dim + 1), repeat=k))


# ---------------------------------------------------------------------------
# the R-check matrix


def _rcheck_terms(data: RootData) -> list[tuple[RationalFunction, tuple, tuple]]:
    """R-check as a sum of c * E_{ab} (x) E_{cd}."""
    q = Q
    terms = []
    for i in range(1, data.dim + 1):
        if i <= data.m:
            terms.append((q * q, (i, i), (i, i)))
        else:
            terms.append((-ONE, (i, i), (i, i)))
    for i in range(1, data.dim + 1):
        for j in range(1, data.dim + 1):
            if i != j:
                terms.append((q * (-1) ** data.parity(i), (j, i), (i, j)))
    for i in range(1, data.dim + 1):
        for j in range(i + 1, data.dim + 1):
            terms.append((q * q - 1, (i, i), (j, j)))
    return terms


@cache
def _rcheck_table(data: RootData) -> dict[tuple[int, int], tuple[tuple[tuple[int, int], RationalFunction], ...]]:
    """Image of each b_x (x) b_y, obtained by applying every operator term with
    the Koszul rule."""
    p = data.parity
    table = {}
    for x in range(1, data.dim + 1):
        for y in range(1, data.dim + 1):
            img: dict = {}
            for c, (a, b), (cc, dd) in _rcheck_terms(data):
                if b != x or dd != y:
                    continue
                sign = -1 if ((p(cc) + p(dd)) * p(x)) % 2 else 1
                _acc(img, (a, cc), c * sign)
            table[(x, y)] = tuple(sorted(img.items()))
    return table


def rcheck_matrix(data: RootData) -> list[list[RationalFunction]]:
    """The (m+n)^2 x (m+n)^2 matrix of R-check; entry [row][col] is the
    coefficient of basis pair ``row`` in the image of basis pair ``col``,
    pairs (x, y) indexed as (x-1)*(m+n) + (y-1)."""
    d = data.dim
    mat = [[ZERO] * (d * d) for _ in range(d * d)]
    for (x, y), img in _rcheck_table(data).items():
        col = (x - 1) * d + (y - 1)
        for (a, b), c in img:
            mat[(a - 1) * d + (b - 1)][col] = c
    return mat


def r_j_apply(data: RootData, v: TensorVector, j: int) -> TensorVector:
    """R-check on slots j, j+1 (R-check is even, so no sign from earlier slots)."""
    if not 1 <= j < v.k:
        raise ValueError(f"slot {j} out of range for k = {v.k}")
    table = _rcheck_table(data)
    out: dict = {}
    for t, c in v.terms.items():
        for (a, b), coeff in table[(t[j - 1], t[j])]:
            _acc(out, t[:j - 1] + (a, b) + t[j + 1:], c * coeff)
    return TensorVector._raw(v.k, out)


def hecke_act(data: RootData, a: HeckeElement, v: TensorVector) -> TensorVector:
    """The action of H_k(q^2) with h_i -> r_i."""
    if a.k != v.k:
        raise ValueError(f"rank mismatch: H_{a.k} acting on V^{v.k}")
    k = v.k
    coeffs = a._c
    den = None
    if any(c.den._t != {0: 1} for c in coeffs.values()):
        den, cof = common_denominator(coeffs.values())
        coeffs = {w: RationalFunction._raw(c.num * cof[c.den], _ONE_LP) for w, c in coeffs.items()}
    ident = tuple(range(1, k + 1))
    memo: dict = {ident: v}

    # T_w v = r_i (T_{s_i w} v) with i the first letter of a reduced word of w
    def act(w: tuple) -> TensorVector:
        got = memo.get(w)
        if got is not None:
            return got
        i = reduced_word(Permutation._raw(w))[0]
        shorter = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
        got = r_j_apply(data, act(shorter), i)
        memo[w] = got
        return got

    out: dict = {}
    for w, c in coeffs.items():
        for t, x in act(w).terms.items():
            _acc(out, t, x * c)
    if den is not None:
        out = {t: over(c.num, den) for t, c in out.items()}
    return TensorVector._raw(k, out)


# ---------------------------------------------------------------------------
# U_q(gl(m,n)) generators


def _k_power(data: RootData, h: CartanElement, letter: int, sign: int = 1) -> RationalFunction:
    e = h.coeffs[letter - 1] * sign
    return RationalFunction.q(e) if e else ONE


def _check_index(data: RootData, i: int) -> None:
    if not 1 <= i <= data.rank:
        raise ValueError(f"generator index {i} out of range 1..{data.rank}")


def act_E(data: RootData, i: int, v: TensorVector, classical: bool = False) -> TensorVector:
    """Delta^{(k)}(E_i) on v.  With ``classical`` the k_i factors are dropped
    (the graded coproduct of E_{i,i+1} at q = 1)."""
    _check_index(data, i)
    odd = data.op_parity(i)
    kinv = data.k_element(i)
    out: dict = {}
    for t, c in v.terms.items():
        before = 0
        for j, x in enumerate(t):
            if x == i + 1:
                coeff = c if not (odd and before % 2) else -c
                if not classical:
                    for y in t[j + 1:]:
                        coeff = coeff * _k_power(data, kinv, y, -1)
                _acc(out, t[:j] + (i,) + t[j + 1:], coeff)
            before += data.parity(x)
    return TensorVector._raw(v.k, out)


def act_F(data: RootData, i: int, v: TensorVector, classical: bool = False) -> TensorVector:
    """Delta^{(k)}(F_i) on v; see :func:`act_E` for ``classical``."""
    _check_index(data, i)
    odd = data.op_parity(i)
    kel = data.k_element(i)
    out: dict = {}
    for t, c in v.terms.items():
        before = 0
        for j, x in enumerate(t):
            if x == i:
                coeff = c if not (odd and before % 2) else -c
                if not classical:
                    for y in t[:j]:
                        coeff = coeff * _k_power(data, kel, y)
                _acc(out, t[:j] + (i + 1,) + t[j + 1:], coeff)
            before += data.parity(x)
    return TensorVector._raw(v.k, out)


def act_qh(data: RootData, h: CartanElement, v: TensorVector) -> TensorVector:
    """q^h acts on a basis tuple by q^{sum_j eps_{i_j}(h)}."""
    out = {}
    for t, c in v.terms.items():
        e = sum(h.coeffs[x - 1] for x in t)
        out[t] = c * RationalFunction.q(e) if e else c
    return TensorVector._raw(v.k, out)


def weight_of(data: RootData, v: TensorVector) -> Weight:
    """The common letter content of all terms of v."""
    if not v.terms:
        raise ValueError("the zero vector has no weight")
    seen = None
    for t in v.terms:
        cnt = [0] * data.dim
        for x in t:
            cnt[x - 1] += 1
        cnt = tuple(cnt)
        if seen is None:
            seen = cnt
        elif cnt != seen:
            raise ValueError(f"vector is not a weight vector: contents {seen} and {cnt} differ")
    return Weight(seen, data.m)


def place_permutation(data: RootData, sigma: Permutation, v: TensorVector) -> TensorVector:
    """Graded place permutation: slot i moves to slot sigma(i); every pair of
    odd letters whose order is exchanged contributes a factor -1."""
    if sigma.k != v.k:
        raise ValueError("rank mismatch")
    im = sigma.images
    out: dict = {}
    for t, c in v.terms.items():
        new = [0] * v.k
        for i, x in enumerate(t):
            new[im[i] - 1] = x
        swaps = sum(
            1
            for a in range(v.k)
            for b in range(a + 1, v.k)
            if im[a] > im[b] and data.parity(t[a]) and data.parity(t[b])
        )
        _acc(out, tuple(new), -c if swaps % 2 else c)
    return TensorVector._raw(v.k, out)


# ---------------------------------------------------------------------------
# text grammar for basis tuples:  1⊗2~⊗1  or  1*2~*1

_LETTER = re.compile(r"\s*(\d+)(~?)\s*")


def parse_basis_tuple(text: str, data: RootData) -> tuple[int, ...]:
    pieces = re.split(r"[⊗*]", text)
    out, pos = [], 0
    for piece in pieces:
        m = _LETTER.fullmatch(piece)
        if not m:
            raise ValueError(f"bad tensor letter at position {pos}: {text!r}")
        idx, bar = int(m.group(1)), bool(m.group(2))
        limit = data.n if bar else data.m
        if not 1 <= idx <= limit:
            raise ValueError(f"letter {piece.strip()} out of range at position {pos}: {text!r}")
        out.append(data.m + idx if bar else idx)
        pos += len(piece) + 1
    return tuple(out)


def parse_tensor(text: str, data: RootData) -> TensorVector:
    """Parse ``(c) * 1⊗1~ + (-q) * 1~⊗1``; a missing coefficient means 1."""
    terms: dict = {}
    k = None
    for chunk in re.split(r"\s\+\s", text.strip()):
        m = re.fullmatch(r"\s*(?:\((?P<c>.*)\)\s*\*\s*)?(?P<t>[\d~⊗*\s]+)\s*", chunk)
        if not m:
            raise ValueError(f"cannot parse tensor term {chunk!r}")
        c = parse_rational(m.group("c")) if m.group("c") is not None else ONE
        tup = parse_basis_tuple(m.group("t"), data)
        if k is None:
            k = len(tup)
        elif len(tup) != k:
            raise ValueError("tensor terms have different lengths")
        _acc(terms, tup, c)
    return TensorVector._raw(k or 0, terms)
