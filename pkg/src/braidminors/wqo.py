"""
Subsequence (Higman) and tuple (Rado) embedding orders with certificates.

Certificates are 1-based index sequences. An :class:`Embedding` of ``u`` into
``v`` lists the positions of ``v`` that are kept, so deleting every other
letter of ``v`` yields ``u``. A :class:`TupleEmbedding` maps each component of
a source tuple to a strictly later component of the target tuple, with a
subsequence certificate per component.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Hashable, Optional, Sequence, Union

from . import _kernels
from .braidword import BandWord


class OrderError(ValueError):
    """Raised when two items cannot be compared in the requested order."""


@dataclasses.dataclass(frozen=True)
class Embedding:
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(self.indices))

    def __len__(self) -> int:
        return len(self.indices)

    def then(self, outer: Embedding) -> Embedding:
        """Compose ``u <= v`` (self) with ``v <= w`` (outer) into ``u <= w``."""
        return Embedding(tuple(outer.indices[p - 1] for p in self.indices))

    def to_json(self) -> dict:
        return {"indices": list(self.indices)}

    @classmethod
    def from_json(cls, data: dict) -> Embedding:
        return cls(tuple(int(x) for x in data["indices"]))


@dataclasses.dataclass(frozen=True)
class TupleEmbedding:
    component_targets: tuple[int, ...]
    component_certs: tuple[Embedding, ...]

    def to_json(self) -> dict:
        return {
            "targets": list(self.component_targets),
            "components": [e.to_json() for e in self.component_certs],
        }

    @classmethod
    def from_json(cls, data: dict) -> TupleEmbedding:
        return cls(
            tuple(int(x) for x in data["targets"]),
            tuple(Embedding.from_json(c) for c in data["components"]),
        )


Certificate = Union[Embedding, TupleEmbedding]
Comparator = Callable[[object, object], Optional[Certificate]]


@dataclasses.dataclass(frozen=True)
class PairReport:
    smaller_index: int
    larger_index: int
    certificate: Certificate

    def __post_init__(self) -> None:
        if self.smaller_index == self.larger_index:
            raise OrderError("a comparable pair needs two distinct indices")

    @property
    def pair(self) -> tuple[int, int]:
        return min(self.smaller_index, self.larger_index), max(self.smaller_index, self.larger_index)


def _codes(u: Sequence[Hashable], v: Sequence[Hashable]):
    if isinstance(u, BandWord) and isinstance(v, BandWord):
        if u.n != v.n:
            raise OrderError(f"strand counts differ: B{u.n} vs B{v.n}")
        return u.codes, v.codes
    if isinstance(u, BandWord) or isinstance(v, BandWord):
        raise OrderError("cannot compare a band word with a plain sequence")
    table: dict = {}
    cu = [table.setdefault(x, len(table)) for x in u]
    cv = [table.setdefault(x, len(table)) for x in v]
    return cu, cv


def subword_embeds(u: Sequence[Hashable], v: Sequence[Hashable]) -> Optional[Embedding]:
    """Leftmost-greedy subsequence embedding of ``u`` into ``v``.

    Greedy leftmost matching is complete: if any embedding exists, the greedy
    one does. Band words must share the same strand count.
    """
    cu, cv = _codes(u, v)
    found = _kernels.greedy_embed(cu, cv)
    return None if found is None else Embedding(tuple(found))


def embeds(u: Sequence[Hashable], v: Sequence[Hashable]) -> bool:
    cu, cv = _codes(u, v)
    return bool(_kernels.embeds(cu, cv))


def verify_embedding(u: Sequence[Hashable], v: Sequence[Hashable], e: Embedding) -> bool:
    """Check a subsequence certificate directly from its definition."""
    if isinstance(u, BandWord) and isinstance(v, BandWord) and u.n != v.n:
        return False
    idx = list(e.indices)
    if len(idx) != len(u):
        return False
    if any(not isinstance(p, int) or p < 1 or p > len(v) for p in idx):
        return False
    if any(a >= b for a, b in zip(idx, idx[1:])):
        return False
    return all(v[p - 1] == x for p, x in zip(idx, u))


def _common_strands(*tuples: Sequence[object]) -> None:
    ns = {w.n for t in tuples for w in t if isinstance(w, BandWord)}
    if len(ns) > 1:
        raise OrderError(f"mixed strand counts in tuple comparison: {sorted(ns)}")


def tuple_embeds(A: Sequence[Sequence[Hashable]], B: Sequence[Sequence[Hashable]]) -> Optional[TupleEmbedding]:
    """Rado-order embedding with strictly increasing target positions.

    Each source component takes the earliest unused later target that admits
    a subsequence embedding. Earliest-first is complete by an exchange
    argument: a later target is never worse to keep for the remaining items.
    """
    _common_strands(A, B)
    if len(A) > len(B):
        return None
    targets = []
    certs = []
    k = 0
    for a in A:
        while k < len(B):
            e = subword_embeds(a, B[k])
            k += 1
            if e is not None:
                targets.append(k)
                certs.append(e)
                break
        else:
            return None
    return TupleEmbedding(tuple(targets), tuple(certs))


def verify_tuple_embedding(A: Sequence[Sequence[Hashable]], B: Sequence[Sequence[Hashable]], te: TupleEmbedding) -> bool:
    t = list(te.component_targets)
    if len(t) != len(A) or len(te.component_certs) != len(A):
        return False
    if any(p < 1 or p > len(B) for p in t):
        return False
    if any(a >= b for a, b in zip(t, t[1:])):
        return False
    return all(
        verify_embedding(a, B[p - 1], e) for a, p, e in zip(A, t, te.component_certs)
    )


def verify_certificate(u, v, cert: Certificate) -> bool:
    if isinstance(cert, TupleEmbedding):
        return verify_tuple_embedding(u, v, cert)
    return verify_embedding(u, v, cert)


def _test_pair(family, comparator, i, j) -> Optional[PairReport]:
    cert = comparator(family[i], family[j])
    if cert is not None:
        return PairReport(i + 1, j + 1, cert)
    cert = comparator(family[j], family[i])
    if cert is not None:
        return PairReport(j + 1, i + 1, cert)
    return None


def find_comparable_pair(
    family: Sequence[object],
    comparator: Comparator = subword_embeds,
    jobs: int = 1,
) -> Optional[PairReport]:
    """First comparable pair (i, j), i < j, in lexicographic order.

    Within a pair, ``family[i] <= family[j]`` is tried before the reverse.
    Indices in the report are 1-based. With ``jobs > 1`` rows are evaluated
    concurrently in batches, and the answer is the same as the sequential scan.
    """
    size = len(family)
    if jobs <= 1:
        for i in range(size):
            for j in range(i + 1, size):
                hit = _test_pair(family, comparator, i, j)
                if hit is not None:
                    return hit
        return None

    def row(i: int) -> Optional[PairReport]:
        for j in range(i + 1, size):
            hit = _test_pair(family, comparator, i, j)
            if hit is not None:
                return hit
        return None

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for start in range(0, size, jobs):
            rows = range(start, min(size, start + jobs))
            for hit in pool.map(row, rows):
                if hit is not None:
                    return hit
    return None
