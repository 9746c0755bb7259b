"""Seeded random families of non-split words.

The procedure is fixed so that a seed pins the family exactly:

1. ``rng = random.Random(seed)``.
2. For each word: ``length = rng.randint(min_len, max_len)``.
3. Positive words draw each letter as ``s_m`` with ``m = rng.randint(1, n - 1)``.
   Band words draw ``bands[rng.randrange(len(bands))]`` where ``bands`` lists
   all (i, j), 1 <= i < j <= n, in lexicographic order.
4. Repair: scanning m = 1..n-1, if strands m and m+1 lie in different
   components of the disc-band graph, append ``s_m``. For positive words this
   appends each missing generator once, in increasing order.
"""

from __future__ import annotations

import random

from .braidword import Band, BandWord, PositiveWord, generator

MAX_SEED = 2**64 - 1


def _repair(n: int, letters: list[Band]) -> list[Band]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in letters:
        parent[find(b.j)] = find(b.i)
    out = list(letters)
    for m in range(1, n):
        if find(m) != find(m + 1):
            out.append(generator(m))
            parent[find(m + 1)] = find(m)
    return out


def random_family(
    n: int,
    count: int,
    min_len: int,
    max_len: int,
    seed: int,
    bands: bool = False,
) -> list[BandWord]:
    if n < 2:
        raise ValueError(f"need at least 2 strands, got {n}")
    if not 0 <= min_len <= max_len:
        raise ValueError(f"invalid length range {min_len}..{max_len}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError("seed must be a 64-bit unsigned value")
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = random.Random(seed)
    alphabet = [Band(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    family: list[BandWord] = []
    for _ in range(count):
        length = rng.randint(min_len, max_len)
        if bands:
            letters = [alphabet[rng.randrange(len(alphabet))] for _ in range(length)]
            family.append(BandWord(n, tuple(_repair(n, letters))))
        else:
            letters = [generator(rng.randint(1, n - 1)) for _ in range(length)]
            family.append(PositiveWord(n, tuple(_repair(n, letters))))
    return family
