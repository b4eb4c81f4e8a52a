"""CSV and SVG writers for integer point sets."""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

import numpy as np


def csv_text(points, header: str = "x,y") -> str:
    rows = np.asarray(points).reshape(-1, 2).tolist()
    body = "\n".join(f"{x},{y}" for x, y in rows)
    return f"{header}\n{body}\n" if rows else f"{header}\n"


def write_csv(points, out: str | Path | TextIO) -> None:
    """Write `x,y` rows with LF endings to a path or an open text stream."""
    text = csv_text(points)
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def read_csv(path: str | Path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        if fh.readline().strip() != "x,y":
            raise ValueError(f"{path}: missing x,y header")
        data = np.loadtxt(fh, delimiter=",", dtype=np.int64, ndmin=2)
    return data.reshape(-1, 2)


@dataclass(frozen=True)
class PlotConfig:
    """SVG layout.

    Mathematical orientation (y up). With centered=True the origin sits in
    the middle of the canvas, otherwise in the lower-left corner. In "1:1"
    mode one lattice unit is one pixel and the canvas must hold the whole
    box [-p, p]^2 (or [0, p]^2).
    """

    width: int = 800
    height: int = 800
    radius: float = 1.0
    scale: str = "fit"  # "fit" or "1:1"
    axes: bool = False
    margin: int = 4

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.radius <= 0:
            raise ValueError("plot dimensions and radius must be positive")
        if self.scale not in ("fit", "1:1"):
            raise ValueError(f"unknown scale mode {self.scale!r}")


def required_extent(p: int, centered: bool) -> int:
    """Pixels needed per axis for a 1:1 plot of the box around p."""
    return 2 * p + 1 if centered else p + 1


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def svg_text(points, p: int, config: PlotConfig, centered: bool = True) -> str:
    pts = np.asarray(points).reshape(-1, 2)
    m = config.margin
    if config.scale == "1:1":
        need = required_extent(p, centered)
        if config.width < need or config.height < need:
            raise ValueError(
                f"1:1 scale for p = {p} needs a {need}x{need} canvas, "
                f"got {config.width}x{config.height}"
            )
        sx = sy = 1.0
    else:
        span = 2 * p if centered else p
        sx = (config.width - 2 * m) / max(span, 1)
        sy = (config.height - 2 * m) / max(span, 1)
    ox = m + (p * sx if centered else 0)
    oy = m + (p * sy if centered else p * sy)
    width, height = config.width + 2 * m, config.height + 2 * m

    buf = io.StringIO()
    buf.write('<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n')
    buf.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">\n'
    )
    buf.write(f'<rect width="{width}" height="{height}" fill="white"/>\n')
    if config.axes:
        buf.write(
            f'<g stroke="#999" stroke-width="0.5">'
            f'<line x1="0" y1="{_fmt(oy)}" x2="{width}" y2="{_fmt(oy)}"/>'
            f'<line x1="{_fmt(ox)}" y1="0" x2="{_fmt(ox)}" y2="{height}"/></g>\n'
        )
    r = _fmt(config.radius)
    buf.write('<g fill="black">\n')
    for x, y in pts.tolist():
        buf.write(f'<circle cx="{_fmt(ox + x * sx)}" cy="{_fmt(oy - y * sy)}" r="{r}"/>\n')
    buf.write("</g>\n</svg>\n")
    return buf.getvalue()


def write_svg(points, p: int, out: str | Path | TextIO, config: PlotConfig,
              centered: bool = True) -> None:
    text = svg_text(points, p, config, centered)
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
