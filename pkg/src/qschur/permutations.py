"""The symmetric group S_k in one-line notation.

``Permutation((3, 5, 6, 1, 4, 2))`` sends 1 -> 3, 2 -> 5, ...  Products are
composition of maps, ``(a * b)(i) == a(b(i))``, and the simple transposition
``s_i`` swaps i and i+1.
"""

from __future__ import annotations

import re
from functools import cache
from itertools import permutations as _iter_perms, product
from math import factorial
from typing import Iterable, Sequence

DEFAULT_GROUP_BOUND = factorial(10)


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls._raw(tuple(range(1, k + 1)))

    @classmethod
    def simple(cls, i: int, k: int) -> "Permutation":
        """The adjacent transposition s_i = (i i+1) in S_k."""
        if not 1 <= i < k:
            raise ValueError(f"s_{i} does not exist in S_{k}")
        im = list(range(1, k + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls._raw(tuple(im))

    @classmethod
    def from_word(cls, word: Sequence[int], k: int) -> "Permutation":
        """The product s_{w1} s_{w2} ... of simple transpositions."""
        im = list(range(1, k + 1))
        for i in word:
            if not 1 <= i < k:
                raise ValueError(f"s_{i} does not exist in S_{k}")
            # right multiplication by s_i swaps two entries of the one-line form
            im[i - 1], im[i] = im[i], im[i - 1]
        return cls._raw(tuple(im))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], k: int) -> "Permutation":
        im = list(range(1, k + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= k or a in seen:
                    raise ValueError(f"bad cycle entry {a} for S_{k}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                im[a - 1] = b
        return cls._raw(tuple(im))

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation._raw(tuple(inv))

    def length(self) -> int:
        return length(self)

    def reduced_word(self) -> list[int]:
        return reduced_word(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a*b)(i) = a(b(i)).

    In diagram terms, b is drawn on top and a below it.
    """
    if a.k != b.k:
        raise ValueError(f"cannot compose permutations of sizes {a.k} and {b.k}")
    ai = a.images
    return Permutation._raw(tuple(ai[x - 1] for x in b.images))


def length(sigma: Permutation) -> int:
    """Number of inversions, i.e. edge crossings of the permutation diagram."""
    im = sigma.images
    k = len(im)
    return sum(1 for i in range(k) for j in range(i + 1, k) if im[i] > im[j])


def reduced_word(sigma: Permutation) -> list[int]:
    """A reduced word i_1..i_l with s_{i_1}...s_{i_l} == sigma.

    Peels off the largest right descent until the identity is reached.
    """
    return list(_reduced_word(sigma.images))


@cache
def _reduced_word(images: tuple) -> tuple:
    im = list(images)
    peeled = []
    while True:
        for i in range(len(im) - 1, 0, -1):
            if im[i - 1] > im[i]:
                break
        else:
            break
        im[i - 1], im[i] = im[i], im[i - 1]
        peeled.append(i)
    return tuple(reversed(peeled))


def act_on_word(sigma: Permutation, word: Sequence) -> tuple:
    """Place permutation: position i of the result holds word[sigma^-1(i)]."""
    if len(word) != sigma.k:
        raise ValueError(f"word of length {len(word)} for a permutation of size {sigma.k}")
    out = [None] * sigma.k
    for i, x in enumerate(sigma.images):
        out[x - 1] = word[i]
    return tuple(out)


def all_permutations(k: int) -> list[Permutation]:
    """All of S_k, lexicographic in one-line notation."""
    return [Permutation._raw(p) for p in _iter_perms(range(1, k + 1))]


def subset_group(blocks: Sequence[Sequence[int]], k: int, bound: int = DEFAULT_GROUP_BOUND) -> list[Permutation]:
    """The subgroup of S_k permuting each block setwise (a Young subgroup)."""
    size = 1
    for b in blocks:
        size *= factorial(len(b))
    if size > bound:
        raise ValueError(f"subgroup of order {size} exceeds the enumeration bound {bound}")
    factors = []
    for b in blocks:
        b = tuple(b)
        factors.append([(b, p) for p in _iter_perms(b)])
    out = []
    for choice in product(*factors):
        im = list(range(1, k + 1))
        for src, dst in choice:
            for a, c in zip(src, dst):
                im[a - 1] = c
        out.append(Permutation._raw(tuple(im)))
    out.sort()
    return out


_ONE_LINE = re.compile(r"^\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$")
_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, k: int | None = None) -> Permutation:
    """Accepts one-line ``[3,5,6,1,4,2]`` or cycle notation ``(1 3 6 2 5 4)``."""
    m = _ONE_LINE.match(text)
    if m:
        body = m.group(1) or ""
        images = [int(x) for x in body.split(",")] if body else []
        p = Permutation(images)
        if k is not None and p.k != k:
            raise ValueError(f"expected a permutation of size {k}, got {p.k}")
        return p
    stripped = text.strip()
    if not stripped.startswith("("):
        raise ValueError(f"cannot parse permutation {text!r}")
    cycles = []
    pos = 0
    for m in _CYCLE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ValueError(f"unexpected text at position {pos} in {text!r}")
        entries = [int(x) for x in re.split(r"[\s,]+", m.group(1).strip()) if x]
        cycles.append(entries)
        pos = m.end()
    if stripped[pos:].strip():
        raise ValueError(f"unexpected text at position {pos} in {text!r}")
    top = max((x for c in cycles for x in c), default=0)
    return Permutation.from_cycles(cycles, k if k is not None else top)
