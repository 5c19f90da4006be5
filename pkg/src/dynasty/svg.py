"""Minimal standalone SVG line charts."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=70, right=20, top=40, bottom=55)
COLORS = ["#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#ca6f1e", "#5d6d7e"]
DASHES = ["", "6,4", "2,3", "10,3,2,3"]


def _ticks(lo: float, hi: float, k: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    step = 10 ** math.floor(math.log10((hi - lo) / k))
    for m in (1, 2, 5, 10):
        if (hi - lo) / (m * step) <= k:
            step *= m
            break
    start = math.ceil(lo / step) * step
    return list(np.arange(start, hi + step * 1e-9, step))


def line_chart(series, title: str = "", xlabel: str = "", ylabel: str = "") -> str:
    """``series`` is a list of ``(label, x, y)``; non-finite points are dropped."""
    clean = []
    for label, x, y in series:
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        ok = np.isfinite(x) & np.isfinite(y)
        clean.append((label, x[ok], y[ok]))
    xs = np.concatenate([s[1] for s in clean]) if clean else np.array([0.0, 1.0])
    ys = np.concatenate([s[2] for s in clean]) if clean else np.array([0.0, 1.0])
    if xs.size == 0:
        xs, ys = np.array([0.0, 1.0]), np.array([0.0, 1.0])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]
    sx = lambda v: MARGIN["left"] + (v - x0) / (x1 - x0) * pw
    sy = lambda v: MARGIN["top"] + (y1 - v) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
    ]
    bx, by = MARGIN["left"], MARGIN["top"] + ph
    out.append(f'<line x1="{bx}" y1="{by}" x2="{bx + pw}" y2="{by}" stroke="black"/>')
    out.append(f'<line x1="{bx}" y1="{MARGIN["top"]}" x2="{bx}" y2="{by}" stroke="black"/>')
    for t in _ticks(x0, x1):
        X = sx(t)
        out.append(f'<line x1="{X:.2f}" y1="{by}" x2="{X:.2f}" y2="{by + 5}" stroke="black"/>')
        out.append(f'<text x="{X:.2f}" y="{by + 18}" text-anchor="middle">{t:.6g}</text>')
    for t in _ticks(y0, y1):
        Y = sy(t)
        out.append(f'<line x1="{bx - 5}" y1="{Y:.2f}" x2="{bx}" y2="{Y:.2f}" stroke="black"/>')
        out.append(f'<text x="{bx - 8}" y="{Y + 4:.2f}" text-anchor="end">{t:.6g}</text>')
    out.append(
        f'<text x="{bx + pw / 2:.1f}" y="{HEIGHT - 12}" text-anchor="middle">{escape(xlabel)}</text>'
    )
    out.append(
        f'<text x="16" y="{MARGIN["top"] + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN["top"] + ph / 2:.1f})">{escape(ylabel)}</text>'
    )
    for i, (label, x, y) in enumerate(clean):
        color, dash = COLORS[i % len(COLORS)], DASHES[i % len(DASHES)]
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(x, y))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash_attr} points="{pts}"/>')
        ly = MARGIN["top"] + 14 + 16 * i
        out.append(
            f'<line x1="{bx + pw - 110}" y1="{ly - 4}" x2="{bx + pw - 90}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.5"{dash_attr}/>'
        )
        out.append(f'<text x="{bx + pw - 85}" y="{ly}">{escape(str(label))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
