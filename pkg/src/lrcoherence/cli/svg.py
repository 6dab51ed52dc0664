"""Minimal static SVG charts. Output is plain text with fixed formatting."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

PALETTE = ("#000000", "#1f4fd1", "#d12a1f", "#1f9a3a", "#8e44ad", "#c77c02")

W, H = 640, 400
L, R, T, B = 64, 16, 32, 48


def _frame(title, xlabel, ylabel, xlim, ylim):
    x0, x1 = xlim
    y0, y1 = ylim
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>',
        f'<rect x="{L}" y="{T}" width="{W - L - R}" height="{H - T - B}" fill="none" stroke="#444"/>',
        f'<text x="{W / 2:.1f}" y="20" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<text x="{W / 2:.1f}" y="{H - 10}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>',
        f'<text x="14" y="{H / 2:.1f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 14 {H / 2:.1f})">{escape(ylabel)}</text>',
        f'<text x="{L}" y="{H - B + 16}" text-anchor="middle" font-size="10">{x0:.4g}</text>',
        f'<text x="{W - R}" y="{H - B + 16}" text-anchor="middle" font-size="10">{x1:.4g}</text>',
        f'<text x="{L - 4}" y="{H - B}" text-anchor="end" font-size="10">{y0:.4g}</text>',
        f'<text x="{L - 4}" y="{T + 4}" text-anchor="end" font-size="10">{y1:.4g}</text>',
    ]
    return parts


def _scale(xlim, ylim):
    (x0, x1), (y0, y1) = xlim, ylim
    sx = (W - L - R) / ((x1 - x0) or 1.0)
    sy = (H - T - B) / ((y1 - y0) or 1.0)
    return lambda x: L + (x - x0) * sx, lambda y: H - B - (y - y0) * sy


def line_chart(curves, title="", xlabel="Jt", ylabel="C") -> str:
    """``curves`` is a list of ``(label, x, y)``."""
    xs = np.concatenate([np.asarray(c[1], float) for c in curves])
    ys = np.concatenate([np.asarray(c[2], float) for c in curves])
    xlim = (float(xs.min()), float(xs.max()))
    ylim = (min(0.0, float(ys.min())), float(ys.max()) or 1.0)
    px, py = _scale(xlim, ylim)
    parts = _frame(title, xlabel, ylabel, xlim, ylim)
    for k, (label, x, y) in enumerate(curves):
        color = PALETTE[k % len(PALETTE)]
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, y))
        parts.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{pts}"/>')
        parts.append(f'<text x="{W - R - 6}" y="{T + 16 + 14 * k}" text-anchor="end" '
                     f'font-size="11" fill="{color}">{escape(str(label))}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def step_chart(edges, mass, title="", xlabel="omega / J", ylabel="N(omega)") -> str:
    edges = np.asarray(edges, float)
    mass = np.asarray(mass, float)
    xlim = (float(edges[0]), float(edges[-1]))
    ylim = (0.0, float(mass.max()) or 1.0)
    px, py = _scale(xlim, ylim)
    parts = _frame(title, xlabel, ylabel, xlim, ylim)
    pts = [f"{px(edges[0]):.2f},{py(0.0):.2f}"]
    for lo, hi, m in zip(edges[:-1], edges[1:], mass):
        pts.append(f"{px(lo):.2f},{py(m):.2f}")
        pts.append(f"{px(hi):.2f},{py(m):.2f}")
    pts.append(f"{px(edges[-1]):.2f},{py(0.0):.2f}")
    parts.append(f'<polyline fill="none" stroke="{PALETTE[1]}" stroke-width="1" points="{" ".join(pts)}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
