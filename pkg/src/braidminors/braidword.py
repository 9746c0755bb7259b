"""
braidword: positive and strongly quasipositive braid words.

A word in B_n is stored as its strand count plus an ordered tuple of bands
(i, j) with 1 <= i < j <= n. The standard generator s_i is the band (i, i+1),
so positive braid words are simply band words whose letters are all adjacent.
Word positions and strand indices are 1-based throughout.
"""

from __future__ import annotations

import dataclasses
import functools
from array import array
from typing import Iterable, Sequence

from . import _kernels


class BraidError(ValueError):
    """Raised when a braid value violates a structural precondition."""


@dataclasses.dataclass(frozen=True, order=True)
class Band:
    """The positive band generator sigma_{i,j}."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not (1 <= self.i < self.j):
            raise BraidError(f"band requires 1 <= i < j, got ({self.i},{self.j})")

    @property
    def is_adjacent(self) -> bool:
        return self.j == self.i + 1

    @property
    def code(self) -> int:
        # Injective on all bands, independent of the strand count.
        return self.j * (self.j - 1) // 2 + self.i

    def __str__(self) -> str:
        return f"s{self.i}" if self.is_adjacent else f"b({self.i},{self.j})"


def generator(m: int) -> Band:
    """The standard generator s_m as a band."""
    return Band(m, m + 1)


@dataclasses.dataclass(frozen=True)
class SignedLetter:
    index: int
    sign: int

    def __post_init__(self) -> None:
        if self.index < 1 or self.sign not in (1, -1):
            raise BraidError(f"invalid signed letter {self.index}, {self.sign}")

    def __int__(self) -> int:
        return self.sign * self.index


@dataclasses.dataclass(frozen=True, eq=False)
class BandWord:
    """A strongly quasipositive braid word in B_n.

    Equality and hashing depend only on ``(n, letters)``, so a
    :class:`PositiveWord` equals the plain band word with the same letters.
    """

    n: int
    letters: tuple[Band, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BraidError(f"strand count must be >= 1, got {self.n}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for b in letters:
            if not isinstance(b, Band):
                raise BraidError(f"letters must be Band values, got {b!r}")
            if b.j > self.n:
                raise BraidError(f"band {b} does not fit in B{self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BandWord):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, position: int) -> Band:
        return self.letters[position]

    def __iter__(self):
        return iter(self.letters)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_braid(self)!r})"

    def __str__(self) -> str:
        return format_braid(self)

    @functools.cached_property
    def codes(self) -> array:
        """Integer letter codes, the representation handed to the kernels."""
        return array("q", (b.code for b in self.letters))

    @property
    def is_positive(self) -> bool:
        return all(b.is_adjacent for b in self.letters)

    @property
    def chi(self) -> int:
        return self.n - len(self.letters)

    def __mul__(self, other: BandWord) -> BandWord:
        if not isinstance(other, BandWord):
            return NotImplemented
        if self.n != other.n:
            raise BraidError(f"cannot concatenate words in B{self.n} and B{other.n}")
        cls = PositiveWord if (isinstance(self, PositiveWord) and isinstance(other, PositiveWord)) else BandWord
        return cls(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BandWord:
        if k < 0:
            raise BraidError("negative powers are not positive words")
        return type(self)(self.n, self.letters * k)


class PositiveWord(BandWord):
    """A band word all of whose letters are standard generators."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for b in self.letters:
            if not b.is_adjacent:
                raise BraidError(f"{b} is not a standard generator")

    @classmethod
    def from_word(cls, w: BandWord) -> PositiveWord:
        if isinstance(w, PositiveWord):
            return w
        return cls(w.n, w.letters)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> PositiveWord:
        return cls(n, tuple(generator(m) for m in indices))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(b.i for b in self.letters)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored by its images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidError(f"not a permutation: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        if self.n != other.n:
            raise BraidError("permutation sizes differ")
        return Permutation(tuple(other.images[y - 1] for y in self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = []
            x = start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self.images[x - 1]
            out.append(tuple(cycle))
        return out

    @property
    def cycle_count(self) -> int:
        return _kernels.count_cycles(self.images)

    @property
    def is_identity(self) -> bool:
        return all(x == k for k, x in enumerate(self.images, start=1))


def format_braid(w: BandWord) -> str:
    """Canonical text: ``B<n>:`` then each letter, no repetition sugar."""
    if not w.letters:
        return f"B{w.n}:"
    return f"B{w.n}: " + " ".join(str(b) for b in w.letters)


def expand_band(b: Band) -> list[SignedLetter]:
    """Artin-generator expansion of a band as a conjugate of s_{j-1}."""
    head = [SignedLetter(m, 1) for m in range(b.i, b.j - 1)]
    tail = [SignedLetter(m, -1) for m in range(b.j - 2, b.i - 1, -1)]
    return head + [SignedLetter(b.j - 1, 1)] + tail


def euler_characteristic(w: BandWord) -> int:
    return w.n - len(w.letters)


def _components(n: int, letters: Iterable[Band]) -> list[int]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in letters:
        ri, rj = find(b.i), find(b.j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    return [find(x) for x in range(n + 1)]


def is_nonsplit(w: BandWord) -> bool:
    """Whether the disc-band graph of ``w`` is connected."""
    roots = _components(w.n, w.letters)
    return all(roots[x] == 1 for x in range(1, w.n + 1))


def missing_generators(w: BandWord) -> list[int]:
    """Generator indices 1..n-1 not occurring in ``w`` (positive-word check)."""
    present = {b.i for b in w.letters if b.is_adjacent}
    return [m for m in range(1, w.n) if m not in present]


def closure_permutation(w: BandWord) -> Permutation:
    """Product of the transpositions (i j), leftmost letter applied first."""
    left = array("q", (b.i for b in w.letters))
    right = array("q", (b.j for b in w.letters))
    return Permutation(tuple(_kernels.transposition_product(w.n, left, right)))


def delta_power(n: int, k: int) -> PositiveWord:
    """(s_1 s_2 ... s_{n-1})^k; the full twist is ``delta_power(n, n)``."""
    if k < 0:
        raise BraidError(f"exponent must be >= 0, got {k}")
    if n < 1:
        raise BraidError(f"strand count must be >= 1, got {n}")
    return PositiveWord.from_indices(n, list(range(1, n)) * k)


def full_twist(n: int) -> PositiveWord:
    return delta_power(n, n)


def delete_letters(w: BandWord, positions: Iterable[int]) -> BandWord:
    """Remove the letters at the given 1-based positions."""
    drop = set(positions)
    for p in drop:
        if not 1 <= p <= len(w.letters):
            raise BraidError(f"position {p} out of range 1..{len(w.letters)}")
    kept = tuple(b for k, b in enumerate(w.letters, start=1) if k not in drop)
    return type(w)(w.n, kept)


def keep_letters(w: BandWord, positions: Sequence[int]) -> BandWord:
    """The subword at the given increasing 1-based positions."""
    return delete_letters(w, set(range(1, len(w) + 1)) - set(positions))


def stabilize_to(w: BandWord, target: int) -> PositiveWord:
    """Append s_n s_{n+1} ... s_{target-1}, one Markov stabilization per new strand."""
    w = PositiveWord.from_word(w)
    if target < w.n:
        raise BraidError(f"cannot stabilize B{w.n} down to B{target}")
    if not is_nonsplit(w):
        raise BraidError(f"{format_braid(w)} is split")
    return PositiveWord(target, w.letters + tuple(generator(m) for m in range(w.n, target)))


def rebase(w: BandWord, offset: int, n: int) -> BandWord:
    """Shift every strand index down by ``offset`` into B_n."""
    letters = tuple(Band(b.i - offset, b.j - offset) for b in w.letters)
    cls = PositiveWord if isinstance(w, PositiveWord) else BandWord
    return cls(n, letters)


def delta_prefix_exponent(w: BandWord) -> int:
    """Largest e such that ``w`` starts with delta_power(n, e)."""
    if w.n == 1:
        return 0
    step = w.n - 1
    e = 0
    letters = w.letters
    while (e + 1) * step <= len(letters):
        block = letters[e * step:(e + 1) * step]
        if any(b.i != t + 1 or b.j != t + 2 for t, b in enumerate(block)):
            break
        e += 1
    return e
