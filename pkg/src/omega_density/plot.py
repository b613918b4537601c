"""Deterministic SVG rendering of density-plane figures."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import regions

VIEWPORT = (0.84, 1.02, 0.98, 1.26)  # x_min, x_max, y_min, y_max

STYLES = {
    "P": 'fill="none" stroke="#444444" stroke-width="1.5"',
    "P0": 'fill="none" stroke="#1f77b4" stroke-width="1.2" stroke-dasharray="5,3"',
    "U": 'fill="#ff7f0e" fill-opacity="0.15" stroke="#ff7f0e" stroke-width="1.2"',
    "leaf": 'fill="#2ca02c" fill-opacity="0.2" stroke="#2ca02c" stroke-width="1.2"',
    "scatter": 'fill="#d62728" fill-opacity="0.6"',
    "point": 'fill="#000000"',
}


@dataclass
class Layer:
    kind: str  # "boundary", "scatter" or "point"
    name: str
    data: np.ndarray
    style: str = ""


@dataclass
class PlotSpec:
    width: int = 720
    height: int = 640
    viewport: tuple = VIEWPORT
    layers: list = field(default_factory=list)
    margin: int = 48

    def __post_init__(self):
        x0, x1, y0, y1 = self.viewport
        for vx, vy in regions.pentagon_P_vertices():
            if not (x0 <= vx <= x1 and y0 <= vy <= y1):
                raise ValueError("viewport must contain the pentagon P")

    def to_pixels(self, pts) -> np.ndarray:
        x0, x1, y0, y1 = self.viewport
        pts = np.asarray(pts, dtype=float).reshape(-1, 2)
        # clamp so nothing leaves the declared viewport
        x = np.clip(pts[:, 0], x0, x1)
        y = np.clip(pts[:, 1], y0, y1)
        w = self.width - 2 * self.margin
        h = self.height - 2 * self.margin
        px = self.margin + (x - x0) / (x1 - x0) * w
        py = self.margin + (y1 - y) / (y1 - y0) * h
        return np.column_stack([px, py])


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _path(spec: PlotSpec, layer: Layer) -> str:
    px = spec.to_pixels(layer.data)
    d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in px) + " Z"
    style = layer.style or STYLES.get(layer.name, 'fill="none" stroke="#000000"')
    return f'  <path id="{layer.name}" d="{d}" {style}/>'


def _circles(spec: PlotSpec, layer: Layer, r: float) -> list[str]:
    style = layer.style or STYLES.get(layer.kind, 'fill="#000000"')
    return [f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{r}" {style}/>'
            for x, y in spec.to_pixels(layer.data)]


def _axes(spec: PlotSpec) -> list[str]:
    x0, x1, y0, y1 = spec.viewport
    m, w, h = spec.margin, spec.width - 2 * spec.margin, spec.height - 2 * spec.margin
    out = [f'  <rect x="{m}" y="{m}" width="{w}" height="{h}" fill="none" stroke="#999999"/>']
    for xv in np.arange(0.86, x1 + 1e-9, 0.04):
        px, py = spec.to_pixels([xv, y0])[0]
        out.append(f'  <line x1="{_fmt(px)}" y1="{_fmt(py)}" x2="{_fmt(px)}" y2="{_fmt(py + 5)}" '
                   'stroke="#999999"/>')
        out.append(f'  <text x="{_fmt(px)}" y="{_fmt(py + 18)}" font-size="11" '
                   f'text-anchor="middle">{xv:.2f}</text>')
    for yv in np.arange(1.0, y1 + 1e-9, 0.05):
        px, py = spec.to_pixels([x0, yv])[0]
        out.append(f'  <line x1="{_fmt(px - 5)}" y1="{_fmt(py)}" x2="{_fmt(px)}" y2="{_fmt(py)}" '
                   'stroke="#999999"/>')
        out.append(f'  <text x="{_fmt(px - 8)}" y="{_fmt(py + 4)}" font-size="11" '
                   f'text-anchor="end">{yv:.2f}</text>')
    out.append(f'  <text x="{_fmt(m + w / 2)}" y="{spec.height - 8}" font-size="12" '
               'text-anchor="middle">packing density</text>')
    out.append(f'  <text x="14" y="{_fmt(m + h / 2)}" font-size="12" text-anchor="middle" '
               f'transform="rotate(-90 14 {_fmt(m + h / 2)})">covering density</text>')
    return out


def render_svg(spec: PlotSpec) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
    ]
    lines += _axes(spec)
    for layer in spec.layers:
        if layer.kind == "boundary":
            lines.append(_path(spec, layer))
        elif layer.kind == "scatter":
            lines += _circles(spec, layer, 1.5)
        elif layer.kind == "point":
            lines += _circles(spec, layer, 3)
        else:
            raise ValueError(f"unknown layer kind {layer.kind!r}")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def region_layers(samples: int = 256) -> list[Layer]:
    return [
        Layer("boundary", "P", regions.pentagon_P_boundary()),
        Layer("boundary", "P0", regions.region_P0_boundary(samples)),
        Layer("boundary", "U", regions.U_boundary(samples)),
        Layer("boundary", "leaf", regions.leaf_boundary(samples)),
    ]


def scatter_figure(points) -> str:
    layers = region_layers()
    layers.append(Layer("scatter", "scatter", np.asarray(points, dtype=float).reshape(-1, 2)))
    return render_svg(PlotSpec(layers=layers))
