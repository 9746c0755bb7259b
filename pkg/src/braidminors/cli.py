"""Command-line front end.

Exit status: 0 success with a result, 1 success with an empty result (no pair,
incomparable, no root prefix), 2 input or precondition error, 3 a report
failed ``--verify``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from typing import Optional, Sequence

from .braidword import BandWord, BraidError, format_braid
from .generate import random_family
from .minors import (
    ContractError,
    r_minor_search,
    run_pipeline,
    reduce_mod,
    minimal_modulus,
    twist_pair_search,
    twist_report,
)
from .parser import BraidSyntaxError, parse_braid, parse_braid_lines
from .reports import SCHEMA, dumps, render_text, verify_report
from .surface import LayoutOptions, build_surface, invariants, render_svg
from .wqo import OrderError, find_comparable_pair, subword_embeds

EXIT_OK, EXIT_EMPTY, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3

SUBCOMMANDS = (
    "parse",
    "invariants",
    "reduce",
    "decompose",
    "embed",
    "find-pair",
    "r-minor-search",
    "twist-root",
    "twist-pair-search",
    "render",
    "gen",
)


class InputError(Exception):
    pass


@dataclasses.dataclass
class RunConfig:
    subcommand: str
    inputs: list[str] = dataclasses.field(default_factory=list)
    n: Optional[int] = None
    r: Optional[float] = None
    modulus: Optional[int] = None
    k: Optional[int] = None
    seed: int = 0
    count: int = 10
    min_len: int = 1
    max_len: int = 10
    bands: bool = False
    format: str = "text"
    out: Optional[str] = None
    verify: bool = False
    jobs: int = 1
    layout: LayoutOptions = dataclasses.field(default_factory=LayoutOptions)

    def __post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise InputError(f"unknown subcommand {self.subcommand!r}")
        if self.r is not None and not 0 < self.r < 1:
            raise InputError(f"--r must lie in (0, 1), got {self.r}")
        if self.modulus is not None and self.modulus < 1:
            raise InputError(f"--modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.seed < 2**64:
            raise InputError("--seed must be a 64-bit unsigned value")
        if self.format not in ("text", "json"):
            raise InputError(f"--format must be text or json, got {self.format!r}")


def load_words(sources: Sequence[str]) -> list[BandWord]:
    """Each source is a file path, ``-`` for stdin, or an inline braid."""
    words: list[BandWord] = []
    for src in sources:
        if src == "-":
            body, label = sys.stdin.read(), "<stdin>"
        elif os.path.isfile(src):
            with open(src, encoding="utf-8") as fh:
                body, label = fh.read(), src
        elif ":" in src:
            try:
                words.append(parse_braid(src))
            except BraidSyntaxError as exc:
                raise InputError(f"<inline>: {exc}") from None
            continue
        else:
            raise InputError(f"no such file: {src}")
        try:
            words.extend(parse_braid_lines(body))
        except BraidSyntaxError as exc:
            raise InputError(f"{label}: {exc}") from None
    return words


def _same_strands(words: Sequence[BandWord]) -> None:
    ns = sorted({w.n for w in words})
    if len(ns) > 1:
        raise InputError(f"family mixes strand counts {ns}; comparison needs one B_n")


def _require_r(config: RunConfig) -> float:
    if config.r is None:
        raise InputError(f"{config.subcommand} requires --r")
    return config.r


def _pair_json(hit, family, search: str) -> dict:
    data = {"kind": "pair", "schema": SCHEMA, "search": search, "family_size": len(family)}
    if hit is None:
        data["found"] = False
        return data
    data.update(
        found=True,
        smaller_index=hit.smaller_index,
        larger_index=hit.larger_index,
        smaller=format_braid(family[hit.smaller_index - 1]),
        larger=format_braid(family[hit.larger_index - 1]),
        certificate=hit.certificate.to_json(),
    )
    return data


def build_reports(config: RunConfig) -> tuple[list[dict], int]:
    """Compute the report stream and exit status for a subcommand."""
    cmd = config.subcommand
    if cmd == "gen":
        if config.n is None:
            raise InputError("gen requires --n")
        family = random_family(
            config.n, config.count, config.min_len, config.max_len, config.seed, config.bands
        )
        return [{
            "kind": "family",
            "schema": SCHEMA,
            "seed": config.seed,
            "words": [format_braid(w) for w in family],
        }], EXIT_OK

    words = load_words(config.inputs)
    if cmd == "parse":
        return [{"kind": "parse", "schema": SCHEMA, "words": [format_braid(w) for w in words]}], EXIT_OK
    if cmd == "invariants":
        return [
            {"kind": "invariants", "schema": SCHEMA, "word": format_braid(w), **invariants(w).as_dict()}
            for w in words
        ], EXIT_OK
    if cmd in ("reduce", "decompose"):
        r = _require_r(config)
        N = config.modulus or minimal_modulus(r)
        if cmd == "reduce":
            return [reduce_mod(w, N, r).to_json() for w in words], EXIT_OK
        return [run_pipeline(w, N, r).to_json() for w in words], EXIT_OK
    if cmd == "embed":
        if len(words) != 2:
            raise InputError(f"embed takes exactly two words, got {len(words)}")
        u, v = words
        e = subword_embeds(u, v)
        data = {
            "kind": "embedding",
            "schema": SCHEMA,
            "u": format_braid(u),
            "v": format_braid(v),
            "comparable": e is not None,
            "certificate": None if e is None else e.to_json(),
        }
        return [data], EXIT_OK if e is not None else EXIT_EMPTY
    if cmd == "find-pair":
        _same_strands(words)
        hit = find_comparable_pair(words, subword_embeds, jobs=config.jobs)
        return [_pair_json(hit, words, "subword")], EXIT_OK if hit else EXIT_EMPTY
    if cmd == "r-minor-search":
        r = _require_r(config)
        rep = r_minor_search(words, r, modulus=config.modulus, jobs=config.jobs)
        if rep is None:
            data = {"kind": "pair", "schema": SCHEMA, "search": "r-minor",
                    "family_size": len(words), "found": False}
            return [data], EXIT_EMPTY
        data = rep.to_json()
        data["family_size"] = len(words)
        data["found"] = True
        return [data], EXIT_OK
    if cmd == "twist-root":
        N = config.modulus
        if N is None:
            raise InputError("twist-root requires --modulus (the root order N)")
        reports = [twist_report(w, N, config.k).to_json() for w in words]
        empty = any(rep["exponent"] is None for rep in reports)
        return reports, EXIT_EMPTY if empty else EXIT_OK
    if cmd == "twist-pair-search":
        N = config.modulus
        if N is None:
            raise InputError("twist-pair-search requires --modulus (the root order N)")
        rep = twist_pair_search(words, N, jobs=config.jobs)
        if rep is None:
            data = {"kind": "pair", "schema": SCHEMA, "search": "twist",
                    "root_order": N, "family_size": len(words), "found": False}
            return [data], EXIT_EMPTY
        data = rep.to_json(words, N)
        data["family_size"] = len(words)
        data["found"] = True
        return [data], EXIT_OK
    raise InputError(f"unhandled subcommand {cmd}")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _format(config: RunConfig, reports: list[dict]) -> str:
    if config.format == "json":
        return "".join(dumps(rep) + "\n" for rep in reports)
    if config.subcommand in ("gen", "parse"):
        return "".join(w + "\n" for w in reports[0]["words"])
    chunks = []
    for rep in reports:
        if rep.get("found") is False:
            chunks.append("no comparable pair\n")
        elif rep.get("kind") == "embedding" and not rep["comparable"]:
            chunks.append("incomparable\n")
        else:
            chunks.append(render_text(rep))
    return "\n".join(chunks)


def run(config: RunConfig) -> int:
    try:
        if config.subcommand == "render":
            words = load_words(config.inputs)
            if len(words) != 1:
                raise InputError(f"render takes exactly one word, got {len(words)}")
            _emit(render_svg(build_surface(words[0]), config.layout), config.out)
            return EXIT_OK
        reports, status = build_reports(config)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ContractError, BraidError, OrderError, ValueError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if config.verify:
        failures = []
        for rep in reports:
            failures.extend(verify_report(json.loads(dumps(rep))))
        if failures:
            for f in failures:
                print(f"verify: {f}", file=sys.stderr)
            return EXIT_VERIFY
    _emit(_format(config, reports), config.out)
    return status


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--verify", action="store_true",
                        help="replay every certificate through the independent checkers")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker threads for pair searches (output is unaffected)")

    p = argparse.ArgumentParser(prog="braidminors", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help: str, inputs: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, parents=[common])
        if inputs:
            sp.add_argument("inputs", nargs="+", metavar="INPUT",
                            help="braid file, '-' for stdin, or an inline braid")
        return sp

    add("parse", "validate and canonicalize braids")
    add("invariants", "chi, connectivity, boundary count and genus")
    for name in ("reduce", "decompose"):
        sp = add(name, "residue-class reduction" if name == "reduce" else "reduction plus connected-sum blocks")
        sp.add_argument("--r", type=float, required=True)
        sp.add_argument("--modulus", type=int)
    add("embed", "subsequence embedding of the first word into the second")
    add("find-pair", "first comparable pair of a family under subword embedding")
    sp = add("r-minor-search", "r-minor pair search via connected-sum tuples")
    sp.add_argument("--r", type=float, required=True)
    sp.add_argument("--modulus", type=int)
    sp = add("twist-root", "delta-power root exponent and full-twist certificate")
    sp.add_argument("--modulus", type=int, required=True, help="root order N")
    sp.add_argument("--k", type=int, help="full twist size to certify (default: largest)")
    sp = add("twist-pair-search", "pair search on words with a delta-power root")
    sp.add_argument("--modulus", type=int, required=True, help="root order N")
    sp = add("render", "SVG picture of the disc-band surface")
    defaults = LayoutOptions()
    sp.add_argument("--disc-spacing", type=float, default=defaults.disc_spacing)
    sp.add_argument("--disc-height", type=float, default=defaults.disc_height)
    sp.add_argument("--band-spacing", type=float, default=defaults.band_spacing)
    sp.add_argument("--band-thickness", type=float, default=defaults.band_thickness)
    sp = add("gen", "seeded random family of non-split words", inputs=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--min-len", type=int, default=1)
    sp.add_argument("--max-len", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bands", action="store_true", help="draw arbitrary bands, not only generators")
    return p


def config_from_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = _parser().parse_args(argv)
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    kwargs = {k: v for k, v in vars(ns).items() if k in fields}
    if ns.subcommand == "render":
        kwargs["layout"] = LayoutOptions(
            disc_spacing=ns.disc_spacing,
            disc_height=ns.disc_height,
            band_spacing=ns.band_spacing,
            band_thickness=ns.band_thickness,
        )
    return RunConfig(**kwargs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = config_from_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
