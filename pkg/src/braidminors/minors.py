"""
Constructive minor pipelines on braid words.

Two searches are implemented here.

``r_minor_search`` thins each non-split positive word by keeping a single
occurrence of every generator in one residue class mod N, cuts the result
into a connected sum of blocks on at most N strands, stabilizes every block
to B_N and compares the resulting tuples in the Rado order.

``twist_pair_search`` works on band words carrying a delta-power prefix.
Words of equal braid index are compared letter-wise; otherwise a word whose
prefix certifiably contains the full twist on n_i strands is paired with a
word of braid index n_i. The last step of that argument (every band word on
n strands is a minor of the full-twist fibre) is Rudolph's characterization
and is reported as cited, not certified.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Optional, Sequence

from .braidword import (
    BandWord,
    BraidError,
    PositiveWord,
    delete_letters,
    delta_prefix_exponent,
    euler_characteristic,
    format_braid,
    is_nonsplit,
    rebase,
    stabilize_to,
)
from .wqo import (
    Embedding,
    PairReport,
    TupleEmbedding,
    find_comparable_pair,
    subword_embeds,
    tuple_embeds,
)

SCHEMA = 1
RUDOLPH_NOTE = (
    "smaller surface is a minor of the full-twist fibre surface on its braid "
    "index by Rudolph's characterization, cited not certified"
)


class ContractError(ValueError):
    """A pipeline precondition does not hold."""


def exact_ratio(r) -> Fraction:
    """Exact rational value of ``r``; floats are read by their shortest repr."""
    if isinstance(r, Fraction):
        value = r
    elif isinstance(r, float):
        value = Fraction(repr(r))
    else:
        value = Fraction(r)
    if not 0 < value < 1:
        raise ContractError(f"ratio must lie in (0, 1), got {r}")
    return value


def minimal_modulus(r) -> int:
    """Smallest integer N with 1/N < 1 - r."""
    gap = 1 - exact_ratio(r)
    # N * gap > 1  <=>  N > 1/gap
    return math.floor(1 / gap) + 1


def check_modulus(N: int, r) -> None:
    if N < 2:
        raise ContractError(f"modulus must be >= 2, got {N}")
    if Fraction(1, N) >= 1 - exact_ratio(r):
        raise ContractError(f"modulus {N} too small for r={r}: need 1/N < 1 - r")


def residue_class(m: int, N: int) -> int:
    """The class of generator index m in {1..N}."""
    return (m - 1) % N + 1


def _require_nonsplit_positive(w: BandWord) -> PositiveWord:
    try:
        p = PositiveWord.from_word(w)
    except BraidError as exc:
        raise ContractError(str(exc)) from None
    if not is_nonsplit(p):
        raise ContractError(f"{format_braid(p)} is split")
    return p


def class_counts(w: BandWord, N: int) -> dict[int, int]:
    counts = {c: 0 for c in range(1, N + 1)}
    for b in w.letters:
        counts[residue_class(b.i, N)] += 1
    return counts


def choose_residue(w: BandWord, N: int) -> int:
    """Residue class with the fewest letters, smallest class on ties."""
    if N < 2:
        raise ContractError(f"modulus must be >= 2, got {N}")
    w = _require_nonsplit_positive(w)
    counts = class_counts(w, N)
    return min(counts, key=lambda c: (counts[c], c))


@dataclasses.dataclass(frozen=True)
class ReductionReport:
    source: PositiveWord
    modulus: int
    r: Fraction
    residue: int
    kept_positions: tuple[int, ...]
    reduced: PositiveWord
    chi_source: int
    chi_reduced: int
    ratio_ok: bool

    @property
    def kept_embedding(self) -> Embedding:
        return Embedding(self.kept_positions)

    def to_json(self) -> dict:
        return {
            "kind": "reduction",
            "schema": SCHEMA,
            "source": format_braid(self.source),
            "modulus": self.modulus,
            "r": float(self.r),
            "residue": self.residue,
            "kept_positions": list(self.kept_positions),
            "reduced": format_braid(self.reduced),
            "chi_source": self.chi_source,
            "chi_reduced": self.chi_reduced,
            "ratio_ok": self.ratio_ok,
        }


def ratio_holds(chi_small: int, chi_big: int, r) -> bool:
    return abs(chi_small) >= exact_ratio(r) * abs(chi_big)


def reduce_mod(w: BandWord, N: int, r) -> ReductionReport:
    """Keep the first occurrence of each generator in the sparsest class mod N."""
    check_modulus(N, r)
    w = _require_nonsplit_positive(w)
    residue = choose_residue(w, N)
    seen: set[int] = set()
    dropped = []
    for pos, b in enumerate(w.letters, start=1):
        if residue_class(b.i, N) != residue:
            continue
        if b.i in seen:
            dropped.append(pos)
        else:
            seen.add(b.i)
    reduced = PositiveWord.from_word(delete_letters(w, dropped))
    drop_set = set(dropped)
    kept = tuple(p for p in range(1, len(w) + 1) if p not in drop_set)
    chi_s = euler_characteristic(w)
    chi_r = euler_characteristic(reduced)
    return ReductionReport(
        source=w,
        modulus=N,
        r=exact_ratio(r),
        residue=residue,
        kept_positions=kept,
        reduced=reduced,
        chi_source=chi_s,
        chi_reduced=chi_r,
        ratio_ok=ratio_holds(chi_r, chi_s, r),
    )


@dataclasses.dataclass(frozen=True)
class SummandTuple:
    """Blocks of a connected sum, each rebased to start at strand 1."""

    components: tuple[PositiveWord, ...]
    cut_count: int
    cuts: tuple[int, ...] = ()

    def texts(self) -> list[str]:
        return [format_braid(c) for c in self.components]

    def to_json(self) -> dict:
        return {
            "cuts": list(self.cuts),
            "cut_count": self.cut_count,
            "components": self.texts(),
        }


def split_at(w: BandWord, cuts: Sequence[int]) -> SummandTuple:
    """Split a positive word at generators that each occur exactly once."""
    w = PositiveWord.from_word(w)
    cuts = tuple(sorted(set(cuts)))
    for c in cuts:
        if not 1 <= c < w.n:
            raise ContractError(f"cut generator s{c} outside B{w.n}")
        occurrences = sum(1 for b in w.letters if b.i == c)
        if occurrences != 1:
            raise ContractError(
                f"cut generator s{c} occurs {occurrences} times in {format_braid(w)}"
            )
    bounds = (0,) + cuts + (w.n,)
    components = []
    for lo, hi in zip(bounds, bounds[1:]):
        block = PositiveWord(w.n, tuple(b for b in w.letters if lo < b.i < hi))
        components.append(PositiveWord.from_word(rebase(block, lo, hi - lo)))
    return SummandTuple(tuple(components), len(cuts), cuts)


def decompose_connected_sum(report: ReductionReport) -> SummandTuple:
    w = report.reduced
    cuts = [m for m in range(1, w.n) if residue_class(m, report.modulus) == report.residue]
    return split_at(w, cuts)


def complete_tuple(t: SummandTuple, N: int) -> SummandTuple:
    """Stabilize every component into B_N."""
    out = []
    for c in t.components:
        if c.n > N:
            raise ContractError(f"component {format_braid(c)} exceeds B{N}")
        out.append(stabilize_to(c, N))
    return SummandTuple(tuple(out), t.cut_count, t.cuts)


@dataclasses.dataclass(frozen=True)
class PipelineResult:
    reduction: ReductionReport
    summands: SummandTuple
    completed: SummandTuple

    def to_json(self) -> dict:
        data = self.reduction.to_json()
        data["summands"] = self.summands.to_json()
        data["completed"] = self.completed.texts()
        return data


def run_pipeline(w: BandWord, N: int, r) -> PipelineResult:
    report = reduce_mod(w, N, r)
    summands = decompose_connected_sum(report)
    return PipelineResult(report, summands, complete_tuple(summands, N))


@dataclasses.dataclass(frozen=True)
class RMinorReport:
    r: Fraction
    modulus: int
    smaller_index: int
    larger_index: int
    smaller: PipelineResult
    larger: PipelineResult
    certificate: TupleEmbedding

    @property
    def witness(self) -> PositiveWord:
        return self.smaller.reduction.reduced

    @property
    def ratio_ok(self) -> bool:
        return self.smaller.reduction.ratio_ok

    def to_json(self) -> dict:
        return {
            "kind": "pair",
            "schema": SCHEMA,
            "search": "r-minor",
            "r": float(self.r),
            "modulus": self.modulus,
            "smaller_index": self.smaller_index,
            "larger_index": self.larger_index,
            "witness": format_braid(self.witness),
            "chi_witness": euler_characteristic(self.witness),
            "chi_smaller": self.smaller.reduction.chi_source,
            "ratio_ok": self.ratio_ok,
            "certificate": self.certificate.to_json(),
            "smaller": self.smaller.to_json(),
            "larger": self.larger.to_json(),
        }


def r_minor_search(
    family: Sequence[BandWord], r, modulus: Optional[int] = None, jobs: int = 1
) -> Optional[RMinorReport]:
    N = minimal_modulus(r) if modulus is None else modulus
    check_modulus(N, r)
    results = [run_pipeline(w, N, r) for w in family]
    tuples = [res.completed.components for res in results]
    hit = find_comparable_pair(tuples, tuple_embeds, jobs=jobs)
    if hit is None:
        return None
    return RMinorReport(
        r=exact_ratio(r),
        modulus=N,
        smaller_index=hit.smaller_index,
        larger_index=hit.larger_index,
        smaller=results[hit.smaller_index - 1],
        larger=results[hit.larger_index - 1],
        certificate=hit.certificate,
    )


# ---------------------------------------------------------------- full twists


def twist_root_exponent(w: BandWord, N: int) -> Optional[int]:
    """floor(n/N) if ``w`` starts with that power of delta_n, else None."""
    if N < 1:
        raise ContractError(f"root order must be >= 1, got {N}")
    k = w.n // N
    if k == 0 or w.n == 1:
        return k
    return k if delta_prefix_exponent(w) >= k else None


def full_twist_positions(n: int, k: int) -> tuple[int, ...]:
    step = n - 1
    return tuple(
        (block - 1) * step + t for block in range(1, k + 1) for t in range(1, k)
    )


def full_twist_certificate(
    w: BandWord, k: int, exponent: Optional[int] = None
) -> Optional[Embedding]:
    """Positions of (s_1 ... s_{k-1})^k inside the delta prefix of ``w``."""
    if k < 1:
        raise ContractError(f"twist size must be >= 1, got {k}")
    if k == 1:
        # the full twist on one strand is the empty word
        return Embedding(())
    e = twist_capacity(w) if exponent is None else exponent
    if e < k or w.n < k:
        return None
    return Embedding(full_twist_positions(w.n, k))


def twist_capacity(w: BandWord) -> int:
    """Largest k whose full twist is certified inside the delta prefix."""
    if w.n == 1:
        return 1
    return min(delta_prefix_exponent(w), w.n)


@dataclasses.dataclass(frozen=True)
class TwistReport:
    word: BandWord
    root_order: int
    exponent: Optional[int]
    full_twist: Optional[tuple[int, Embedding]]

    def to_json(self) -> dict:
        ft = None
        if self.full_twist is not None:
            k, e = self.full_twist
            ft = {"k": k, "indices": list(e.indices)}
        return {
            "kind": "twist",
            "schema": SCHEMA,
            "word": format_braid(self.word),
            "root_order": self.root_order,
            "exponent": self.exponent,
            "full_twist": ft,
        }


def twist_report(w: BandWord, N: int, k: Optional[int] = None) -> TwistReport:
    exponent = twist_root_exponent(w, N)
    size = twist_capacity(w) if k is None else k
    cert = full_twist_certificate(w, size) if size >= 1 else None
    return TwistReport(w, N, exponent, None if cert is None else (size, cert))


@dataclasses.dataclass(frozen=True)
class TwistPairReport:
    status: str  # "FULL" or "PARTIAL"
    smaller_index: int
    larger_index: int
    certificate: Embedding
    twist_size: Optional[int] = None

    @property
    def full(self) -> bool:
        return self.status == "FULL"

    def to_json(self, family: Sequence[BandWord], N: int) -> dict:
        data = {
            "kind": "pair",
            "schema": SCHEMA,
            "search": "twist",
            "root_order": N,
            "status": self.status,
            "branch": "A" if self.full else "B",
            "smaller_index": self.smaller_index,
            "larger_index": self.larger_index,
            "smaller": format_braid(family[self.smaller_index - 1]),
            "larger": format_braid(family[self.larger_index - 1]),
            "certificate": self.certificate.to_json(),
        }
        if not self.full:
            data["twist_size"] = self.twist_size
            data["cited_step"] = RUDOLPH_NOTE
        return data


def twist_pair_search(
    family: Sequence[BandWord], N: int, jobs: int = 1
) -> Optional[TwistPairReport]:
    for pos, w in enumerate(family, start=1):
        if twist_root_exponent(w, N) is None:
            raise ContractError(
                f"word {pos} ({format_braid(w)}) lacks the delta^{w.n // N} prefix"
            )

    # bounded branch: letter-wise comparison within each braid index
    groups: dict[int, list[int]] = {}
    for idx, w in enumerate(family, start=1):
        groups.setdefault(w.n, []).append(idx)
    best: Optional[PairReport] = None
    for members in groups.values():
        if len(members) < 2:
            continue
        hit = find_comparable_pair([family[i - 1] for i in members], subword_embeds, jobs=jobs)
        if hit is None:
            continue
        mapped = PairReport(
            members[hit.smaller_index - 1], members[hit.larger_index - 1], hit.certificate
        )
        if best is None or mapped.pair < best.pair:
            best = mapped
    if best is not None:
        return TwistPairReport("FULL", best.smaller_index, best.larger_index, best.certificate)

    # unbounded branch: a large certified full twist swallows a small braid index
    capacity = [twist_capacity(w) for w in family]
    for i, w in enumerate(family, start=1):
        candidates = [j for j in range(1, len(family) + 1) if j != i]
        if not candidates:
            break
        j = max(candidates, key=lambda c: (capacity[c - 1], -c))
        if capacity[j - 1] >= w.n:
            cert = full_twist_certificate(family[j - 1], w.n)
            assert cert is not None
            return TwistPairReport("PARTIAL", i, j, cert, twist_size=w.n)
    return None
