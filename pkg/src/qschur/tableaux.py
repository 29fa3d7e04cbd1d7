"""Partitions, (m,n) hook shapes, standard tableaux and the tensor words
attached to them.

Rows and columns are 1-based in the public API.  Letters of the tensor
alphabet are integers ``1..m+n``: ``i <= m`` stands for the even basis vector
t_i and ``m + j`` for the odd basis vector u_j (printed ``j~``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterable, Sequence

from .permutations import DEFAULT_GROUP_BOUND, Permutation, subset_group
from .scalars import ParseError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @property
    def k(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """lambda_i with 1-based i; zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def to_text(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def conjugate(lam: Sequence[int]) -> Partition:
    """lambda*_j = #{i : lambda_i >= j}."""
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def partitions(k: int) -> list[Partition]:
    """All partitions of k in reverse-lexicographic order: (k), (k-1,1), ..."""

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(k, k)]


def is_hook(lam: Sequence[int], m: int, n: int) -> bool:
    return Partition(lam).part(m + 1) <= n


def enumerate_hooks(m: int, n: int, k: int) -> list[Partition]:
    """H(m,n;k), in reverse-lexicographic order."""
    if k < 1:
        raise ValueError("k must be positive")
    return [lam for lam in partitions(k) if is_hook(lam, m, n)]


@dataclass(frozen=True)
class HookSplit:
    lambda1: tuple[int, ...]
    lambda2: tuple[int, ...]

    def in_pi_hat(self, m: int, n: int) -> bool:
        mu, nu = Partition(self.lambda1), Partition(self.lambda2)
        return len(mu) <= m and len(nu) <= n and mu.part(m) >= len(nu)


def _require_hook(lam: Sequence[int], m: int, n: int) -> Partition:
    lam = Partition(lam)
    if not is_hook(lam, m, n):
        raise ValueError(f"{list(lam)} is not an ({m},{n}) hook shape")
    return lam


def hook_split(lam: Sequence[int], m: int, n: int) -> HookSplit:
    """lambda -> (lambda^1, lambda^2) with lambda^2_j = max(lambda*_j - m, 0).

    lambda^1 is padded with zeros to length m; lambda^2 carries no zeros.
    """
    lam = _require_hook(lam, m, n)
    conj = lam.conjugate()
    lam1 = tuple(lam.part(i) for i in range(1, m + 1))
    lam2 = tuple(max(conj.part(j) - m, 0) for j in range(1, n + 1))
    return HookSplit(lam1, tuple(Partition(lam2)))


def hook_unsplit(split: HookSplit) -> Partition:
    """Inverse of hook_split: the first m rows, then the conjugate of lambda^2."""
    return Partition(tuple(split.lambda1) + tuple(conjugate(split.lambda2)))


@dataclass(frozen=True)
class Weight:
    """Integer coordinates in the basis eps_1..eps_m, delta_1..delta_n."""

    coords: tuple[int, ...]
    m: int

    def to_text(self) -> str:
        names = [f"e{i}" for i in range(1, self.m + 1)]
        names += [f"d{j}" for j in range(1, len(self.coords) - self.m + 1)]
        parts = [f"{c}{nm}" if c != 1 else nm for c, nm in zip(self.coords, names) if c]
        return " + ".join(parts) if parts else "0"

    def is_dominant(self) -> bool:
        c, m = self.coords, self.m
        return (all(x >= 0 for x in c)
                and all(a >= b for a, b in zip(c[:m], c[1:m]))
                and all(a >= b for a, b in zip(c[m:], c[m + 1:])))


def weight_of_partition(lam: Sequence[int], m: int, n: int) -> Weight:
    split = hook_split(lam, m, n)
    lam2 = split.lambda2 + (0,) * (n - len(split.lambda2))
    return Weight(split.lambda1 + lam2, m)


class StandardTableau:
    """A filling of a Young frame by 1..k, increasing along rows and down columns."""

    __slots__ = ("rows", "shape", "_pos")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        shape = Partition(len(r) for r in rows)
        k = shape.k
        if sorted(x for r in rows for x in r) != list(range(1, k + 1)):
            raise ValueError(f"entries of {rows} are not exactly 1..{k}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for i in range(1, len(rows)):
            for j, x in enumerate(rows[i]):
                if rows[i - 1][j] >= x:
                    raise ValueError(f"column {j + 1} is not increasing")
        self.rows = rows
        self.shape = shape
        self._pos = {x: (i + 1, j + 1) for i, r in enumerate(rows) for j, x in enumerate(r)}

    @property
    def k(self) -> int:
        return self.shape.k

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        if not self.rows:
            return ()
        return tuple(tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0])))

    def entry(self, row: int, col: int) -> int:
        return self.rows[row - 1][col - 1]

    def cell_of(self, x: int) -> tuple[int, int]:
        return self._pos[x]

    def cells(self):
        for i, r in enumerate(self.rows, 1):
            for j, x in enumerate(r, 1):
                yield (i, j), x

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __lt__(self, other: "StandardTableau") -> bool:
        return compare(self, other) < 0

    def __gt__(self, other: "StandardTableau") -> bool:
        return compare(self, other) > 0

    def to_text(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"StandardTableau({self.to_text()!r})"


def s_plus(lam: Sequence[int]) -> StandardTableau:
    """Fill rows consecutively, left to right, top to bottom."""
    lam = Partition(lam)
    rows, nxt = [], 1
    for p in lam:
        rows.append(range(nxt, nxt + p))
        nxt += p
    return StandardTableau(rows)


def s_minus(lam: Sequence[int]) -> StandardTableau:
    """Fill columns consecutively, top to bottom, left to right."""
    lam = Partition(lam)
    rows = [[0] * p for p in lam]
    nxt = 1
    for j, height in enumerate(lam.conjugate()):
        for i in range(height):
            rows[i][j] = nxt
            nxt += 1
    return StandardTableau(rows)


def compare(t1: StandardTableau, t2: StandardTableau) -> int:
    """Row-by-row lexicographic order; returns -1, 0 or 1.

    The first differing entry decides: t1 > t2 when t1's entry is larger.
    """
    if t1.shape != t2.shape:
        raise ValueError(f"shapes {list(t1.shape)} and {list(t2.shape)} differ")
    for r1, r2 in zip(t1.rows, t2.rows):
        for a, b in zip(r1, r2):
            if a != b:
                return 1 if a > b else -1
    return 0


def sigma_between(s: StandardTableau, t: StandardTableau) -> Permutation:
    """The permutation sending S(c) to T(c) for every cell c."""
    if s.shape != t.shape:
        raise ValueError(f"shapes {list(s.shape)} and {list(t.shape)} differ")
    im = [0] * s.k
    for rs, rt in zip(s.rows, t.rows):
        for a, b in zip(rs, rt):
            im[a - 1] = b
    return Permutation(im)


def sigma_plus(t: StandardTableau) -> Permutation:
    """The permutation transforming S_+ into T."""
    return sigma_between(s_plus(t.shape), t)


def sigma_minus(t: StandardTableau) -> Permutation:
    """The permutation transforming S_- into T."""
    return sigma_between(s_minus(t.shape), t)


def row_group(t: StandardTableau, bound: int = DEFAULT_GROUP_BOUND) -> list[Permutation]:
    return subset_group(t.rows, t.k, bound)


def column_group(t: StandardTableau, bound: int = DEFAULT_GROUP_BOUND) -> list[Permutation]:
    return subset_group(t.columns, t.k, bound)


def enumerate_standard(lam: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of shape lam, ascending in the tableau order."""
    return list(_enumerate_standard(Partition(lam)))


@cache
def _enumerate_standard(lam: Partition) -> tuple[StandardTableau, ...]:
    k = lam.k
    if k == 0:
        return (StandardTableau(()),)
    out = []
    # k sits in an outer corner; remove it and recurse
    for i, p in enumerate(lam):
        if lam.part(i + 2) < p:
            smaller = list(lam)
            smaller[i] -= 1
            for t in _enumerate_standard(Partition(smaller)):
                rows = [list(r) for r in t.rows]
                if i == len(rows):
                    rows.append([])
                rows[i].append(k)
                out.append(StandardTableau(rows))
    keys = {t: tuple(x for r in t.rows for x in r) for t in out}
    out.sort(key=keys.__getitem__)
    return tuple(out)


def hook_length_count(lam: Sequence[int]) -> int:
    """d_lambda by the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(lam.k) // hooks


def tableau_word(t: StandardTableau, m: int, n: int) -> tuple[int, ...]:
    """The word w_T: slot l gets t_r if l lies in row r <= m of T, and u_c if
    l lies below row m in column c (rows of the conjugated skew part)."""
    _require_hook(t.shape, m, n)
    word = [0] * t.k
    for (r, c), x in t.cells():
        word[x - 1] = r if r <= m else m + c
    return tuple(word)


def letter_text(letter: int, m: int) -> str:
    return str(letter) if letter <= m else f"{letter - m}~"


def word_text(word: Sequence[int], m: int, sep: str = "⊗") -> str:
    return sep.join(letter_text(x, m) for x in word)


def semistandard_hook_fillings(lam: Sequence[int], m: int, n: int):
    """Yield the (m,n)-semistandard fillings of lam.

    Alphabet 1 < ... < m < 1~ < ... < n~ (letters 1..m+n); rows and columns
    weakly increase, even letters strictly increase down columns, odd letters
    strictly increase along rows.
    """
    lam = _require_hook(lam, m, n)
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    grid: dict[tuple[int, int], int] = {}

    def ok(i, j, x):
        if j > 0:
            left = grid[(i, j - 1)]
            if left > x or (left == x and x > m):
                return False
        if i > 0:
            up = grid[(i - 1, j)]
            if up > x or (up == x and x <= m):
                return False
        return True

    def rec(idx):
        if idx == len(cells):
            yield dict(grid)
            return
        i, j = cells[idx]
        for x in range(1, m + n + 1):
            if ok(i, j, x):
                grid[(i, j)] = x
                yield from rec(idx + 1)
        grid.pop((i, j), None)

    yield from rec(0)


def hook_schur_dimension(lam: Sequence[int], m: int, n: int) -> int:
    """dim V(lambda), counted as (m,n)-semistandard hook fillings."""
    return sum(1 for _ in semistandard_hook_fillings(lam, m, n))


# ---------------------------------------------------------------------------
# text forms


def _parse_ints(text: str, sep: str, offset: int, what: str, full: str | None = None) -> list[int]:
    full = text if full is None else full
    out = []
    pos = 0
    for piece in text.split(sep):
        s = piece.strip()
        if not s.isdigit():
            lead = len(piece) - len(piece.lstrip())
            raise ParseError(f"expected a positive integer in {what}", full, offset + pos + lead)
        out.append(int(s))
        pos += len(piece) + 1
    return out


def parse_partition(text: str) -> Partition:
    """``4,2,2,1,1``"""
    parts = _parse_ints(text, ",", 0, "partition")
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def parse_tableau(text: str) -> StandardTableau:
    """``1,2,4/3,5``: rows separated by '/', entries by ','."""
    rows, pos = [], 0
    for chunk in text.split("/"):
        rows.append(_parse_ints(chunk, ",", pos, "tableau", text))
        pos += len(chunk) + 1
    try:
        return StandardTableau(rows)
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None
