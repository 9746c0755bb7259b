"""JSON report schema v1: rendering and independent re-verification.

Every report is a JSON object with ``"kind"`` and ``"schema": 1``. Words are
embedded as canonical braid text and certificates as 1-based index arrays.
:func:`verify_report` replays the certificates of a decoded report using only
the parser and the direct certificate checkers, never the search code.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable

from .braidword import BandWord, closure_permutation, delta_power, format_braid
from .parser import parse_braid
from .wqo import Embedding, TupleEmbedding, verify_embedding, verify_tuple_embedding

SCHEMA = 1


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=False, separators=(", ", ": "))


def _flatten(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else key, sub, out)
    elif isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
        for k, sub in enumerate(value, start=1):
            _flatten(f"{prefix}[{k}]", sub, out)
    elif isinstance(value, list):
        if all(isinstance(x, str) for x in value):
            for k, sub in enumerate(value, start=1):
                out.append(f"{prefix}[{k}]: {sub}")
        else:
            out.append(f"{prefix}: " + " ".join(json.dumps(x) for x in value))
    else:
        out.append(f"{prefix}: {json.dumps(value) if not isinstance(value, str) else value}")


def render_text(report: dict) -> str:
    """Line-per-field text form carrying the same values as the JSON form."""
    lines: list[str] = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"


def _ratio_ok(chi_small: int, chi_big: int, r: float) -> bool:
    return abs(chi_small) >= Fraction(repr(float(r))) * abs(chi_big)


def _check_reduction(data: dict, problems: list[str], where: str) -> None:
    source = parse_braid(data["source"])
    reduced = parse_braid(data["reduced"])
    kept = Embedding(tuple(data["kept_positions"]))
    if not verify_embedding(reduced, source, kept):
        problems.append(f"{where}: kept positions do not embed reduced word into source")
    if data["chi_source"] != source.n - len(source):
        problems.append(f"{where}: chi_source mismatch")
    if data["chi_reduced"] != reduced.n - len(reduced):
        problems.append(f"{where}: chi_reduced mismatch")
    if data["ratio_ok"] != _ratio_ok(data["chi_reduced"], data["chi_source"], data["r"]):
        problems.append(f"{where}: ratio_ok mismatch")
    N, residue = data["modulus"], data["residue"]
    for m in range(1, reduced.n):
        if (m - 1) % N + 1 == residue:
            count = sum(1 for b in reduced if b.i == m and b.j == m + 1)
            if count != 1:
                problems.append(f"{where}: cut generator s{m} occurs {count} times")
    if "summands" in data:
        comps = [parse_braid(t) for t in data["summands"]["components"]]
        s = data["summands"]["cut_count"]
        if reduced.n - len(reduced) != sum(c.n - len(c) for c in comps) - s:
            problems.append(f"{where}: chi identity fails")
        boundary = closure_permutation(reduced).cycle_count
        if boundary != sum(closure_permutation(c).cycle_count for c in comps) - s:
            problems.append(f"{where}: boundary identity fails")
        if sum(len(c) for c in comps) + s != len(reduced):
            problems.append(f"{where}: summand letters do not account for the word")
    if "completed" in data and "summands" in data:
        comps = [parse_braid(t) for t in data["summands"]["components"]]
        done = [parse_braid(t) for t in data["completed"]]
        for c, d in zip(comps, done):
            if d.n != N or d.n - len(d) != c.n - len(c) or d.letters[: len(c)] != c.letters:
                problems.append(f"{where}: completion of {format_braid(c)} is not a stabilization")


def verify_report(data: dict) -> list[str]:
    """Replay a decoded report; returns the list of failures (empty when valid)."""
    problems: list[str] = []
    if data.get("schema") != SCHEMA:
        return [f"unsupported schema {data.get('schema')!r}"]
    kind = data.get("kind")
    if kind in ("parse", "family"):
        for text in data["words"]:
            if format_braid(parse_braid(text)) != text:
                problems.append(f"not canonical: {text}")
    elif kind == "invariants":
        w = parse_braid(data["word"])
        if data["chi"] != w.n - len(w):
            problems.append("chi mismatch")
        if data["boundary_components"] != closure_permutation(w).cycle_count:
            problems.append("boundary count mismatch")
        g = data["genus"]
        if g is not None and 2 - 2 * g - data["boundary_components"] != data["chi"]:
            problems.append("genus inconsistent with chi and boundary")
    elif kind == "embedding":
        if data["certificate"] is not None:
            u, v = parse_braid(data["u"]), parse_braid(data["v"])
            if not verify_embedding(u, v, Embedding.from_json(data["certificate"])):
                problems.append("embedding certificate rejected")
    elif kind == "reduction":
        _check_reduction(data, problems, "reduction")
    elif kind == "twist":
        _check_twist(data, problems)
    elif kind == "pair":
        _check_pair(data, problems)
    else:
        problems.append(f"unknown report kind {kind!r}")
    return problems


def _delta_prefix_len(w: BandWord) -> int:
    e = 0
    step = w.n - 1
    while step > 0 and (e + 1) * step <= len(w):
        if all(
            w[e * step + t].i == t + 1 and w[e * step + t].j == t + 2 for t in range(step)
        ):
            e += 1
        else:
            break
    return e


def _check_twist(data: dict, problems: list[str]) -> None:
    w = parse_braid(data["word"])
    N = data["root_order"]
    k = w.n // N
    expected = k if (k == 0 or w.n == 1 or _delta_prefix_len(w) >= k) else None
    if data["exponent"] != expected:
        problems.append("root exponent mismatch")
    ft = data.get("full_twist")
    if ft is not None:
        _check_full_twist(w, ft["k"], Embedding(tuple(ft["indices"])), problems)


def _check_full_twist(w: BandWord, k: int, e: Embedding, problems: list[str]) -> None:
    if w.n < k:
        problems.append(f"full twist on {k} strands cannot sit in B{w.n}")
        return
    target = delta_power(k, k).letters
    if not verify_embedding(target, w.letters, e):
        problems.append(f"full twist certificate for k={k} rejected")


def _check_pair(data: dict, problems: list[str]) -> None:
    search = data.get("search")
    if data.get("found") is False:
        return
    i, j = data["smaller_index"], data["larger_index"]
    if i == j:
        problems.append("pair indices coincide")
    if search == "subword":
        u, v = parse_braid(data["smaller"]), parse_braid(data["larger"])
        if not verify_embedding(u, v, Embedding.from_json(data["certificate"])):
            problems.append("pair certificate rejected")
    elif search == "r-minor":
        _check_reduction(data["smaller"], problems, "smaller")
        _check_reduction(data["larger"], problems, "larger")
        A = [parse_braid(t) for t in data["smaller"]["completed"]]
        B = [parse_braid(t) for t in data["larger"]["completed"]]
        if not verify_tuple_embedding(A, B, TupleEmbedding.from_json(data["certificate"])):
            problems.append("tuple certificate rejected")
        witness = parse_braid(data["witness"])
        if witness != parse_braid(data["smaller"]["reduced"]):
            problems.append("witness is not the smaller reduced word")
        chi_w = witness.n - len(witness)
        chi_s = data["smaller"]["chi_source"]
        if data["chi_witness"] != chi_w or data["chi_smaller"] != chi_s:
            problems.append("chi values mismatch")
        if data["ratio_ok"] != _ratio_ok(chi_w, chi_s, data["r"]):
            problems.append("ratio_ok mismatch")
    elif search == "twist":
        small, large = parse_braid(data["smaller"]), parse_braid(data["larger"])
        cert = Embedding.from_json(data["certificate"])
        if data["status"] == "FULL":
            if not verify_embedding(small, large, cert):
                problems.append("pair certificate rejected")
        elif data["status"] == "PARTIAL":
            k = data["twist_size"]
            if k < small.n:
                problems.append("certified twist smaller than braid index")
            _check_full_twist(large, k, cert, problems)
        else:
            problems.append(f"unknown status {data['status']!r}")
    else:
        problems.append(f"unknown pair search {search!r}")


def verify_stream(texts: Iterable[str]) -> list[str]:
    """Verify a JSON Lines stream of reports."""
    problems = []
    for lineno, line in enumerate(texts, start=1):
        if not line.strip():
            continue
        problems.extend(f"report {lineno}: {p}" for p in verify_report(json.loads(line)))
    return problems
