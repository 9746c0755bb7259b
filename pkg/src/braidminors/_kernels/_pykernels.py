"""Pure-Python versions of the hot loops. Semantics match ``_ckernels.pyx``."""

from __future__ import annotations

from typing import Sequence


def greedy_embed(u: Sequence[int], v: Sequence[int]) -> list[int] | None:
    """Leftmost subsequence match of ``u`` in ``v``; 1-based kept positions or None."""
    m = len(u)
    if m > len(v):
        return None
    out = []
    t = 0
    for pos, letter in enumerate(v):
        if t == m:
            break
        if letter == u[t]:
            out.append(pos + 1)
            t += 1
    return out if t == m else None


def embeds(u: Sequence[int], v: Sequence[int]) -> bool:
    m = len(u)
    if m > len(v):
        return False
    t = 0
    for letter in v:
        if t == m:
            break
        if letter == u[t]:
            t += 1
    return t == m


def transposition_product(n: int, left: Sequence[int], right: Sequence[int]) -> list[int]:
    """Images (1-based) of the product of transpositions, leftmost applied first."""
    where = list(range(n + 1))
    inv = list(range(n + 1))
    for a, b in zip(left, right):
        xa = inv[a]
        xb = inv[b]
        where[xa] = b
        where[xb] = a
        inv[a] = xb
        inv[b] = xa
    return where[1:]


def count_cycles(images: Sequence[int]) -> int:
    n = len(images)
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x - 1]
    return cycles
