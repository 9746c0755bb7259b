"""Disc-band surfaces of band words: invariants and SVG diagrams."""

from __future__ import annotations

import dataclasses
from typing import Optional
from xml.sax.saxutils import escape

from .braidword import (
    Band,
    BandWord,
    closure_permutation,
    format_braid,
    is_nonsplit,
)


class SurfaceError(RuntimeError):
    """Internal inconsistency in surface bookkeeping."""


@dataclasses.dataclass(frozen=True)
class SurfaceModel:
    """n horizontal discs joined by one band per letter, in word order.

    ``bands`` holds ``(i, j, position)`` triples with 1-based positions.
    """

    disc_count: int
    bands: tuple[tuple[int, int, int], ...]

    def word(self) -> BandWord:
        return BandWord(self.disc_count, tuple(Band(i, j) for i, j, _ in self.bands))


@dataclasses.dataclass(frozen=True)
class SurfaceInvariants:
    chi: int
    connected: bool
    boundary_components: int
    genus: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "chi": self.chi,
            "connected": self.connected,
            "boundary_components": self.boundary_components,
            "genus": self.genus,
        }


def build_surface(w: BandWord) -> SurfaceModel:
    return SurfaceModel(
        w.n, tuple((b.i, b.j, k) for k, b in enumerate(w.letters, start=1))
    )


def surface_invariants(s: SurfaceModel) -> SurfaceInvariants:
    w = s.word()
    chi = s.disc_count - len(s.bands)
    connected = is_nonsplit(w)
    boundary = closure_permutation(w).cycle_count
    genus = None
    if connected:
        twice = 2 - chi - boundary
        if twice < 0 or twice % 2:
            raise SurfaceError(
                f"genus formula gives {twice}/2 for {format_braid(w)}"
            )
        genus = twice // 2
    return SurfaceInvariants(chi, connected, boundary, genus)


def invariants(w: BandWord) -> SurfaceInvariants:
    return surface_invariants(build_surface(w))


@dataclasses.dataclass(frozen=True)
class LayoutOptions:
    disc_spacing: float = 40.0
    disc_height: float = 12.0
    band_spacing: float = 24.0
    band_thickness: float = 8.0
    margin: float = 20.0


def _num(x: float) -> str:
    text = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def render_svg(s: SurfaceModel, options: LayoutOptions | None = None) -> str:
    """SVG 1.1 picture: discs stacked top to bottom, bands left to right.

    Later bands are drawn over earlier ones; this is a drawing convention
    only and carries no crossing information.
    """
    o = options or LayoutOptions()
    m = len(s.bands)
    disc_width = o.band_spacing * (m + 1)
    width = disc_width + 2 * o.margin
    height = 2 * o.margin + (s.disc_count - 1) * o.disc_spacing + o.disc_height

    def disc_top(t: int) -> float:
        return o.margin + (t - 1) * o.disc_spacing

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_num(width)}" height="{_num(height)}" '
            f'viewBox="0 0 {_num(width)} {_num(height)}">'
        ),
        f"<title>{escape(format_braid(s.word()))}</title>",
        '<g class="discs" fill="#d8e4f0" stroke="#1f3b57" stroke-width="1">',
    ]
    for t in range(1, s.disc_count + 1):
        lines.append(
            f'<rect class="disc" data-disc="{t}" x="{_num(o.margin)}" '
            f'y="{_num(disc_top(t))}" width="{_num(disc_width)}" '
            f'height="{_num(o.disc_height)}" rx="{_num(o.disc_height / 2)}"/>'
        )
    lines.append("</g>")
    lines.append('<g class="bands" fill="#f2b36b" stroke="#7a4a12" stroke-width="1">')
    half = o.band_thickness / 2
    for i, j, pos in s.bands:
        x = o.margin + pos * o.band_spacing
        y0 = disc_top(i) + o.disc_height
        y1 = disc_top(j)
        # non-adjacent bands bow right so they stay distinguishable from s_i
        bow = 0.0 if j == i + 1 else min(o.band_spacing / 3, 2 * (j - i))
        ym = (y0 + y1) / 2
        d = (
            f"M {_num(x - half)} {_num(y0)} "
            f"Q {_num(x - half + bow)} {_num(ym)} {_num(x - half)} {_num(y1)} "
            f"L {_num(x + half)} {_num(y1)} "
            f"Q {_num(x + half + bow)} {_num(ym)} {_num(x + half)} {_num(y0)} Z"
        )
        lines.append(
            f'<path class="band" data-position="{pos}" data-band="{i},{j}" d="{d}"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
