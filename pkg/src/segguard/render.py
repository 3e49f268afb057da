"""Static SVG pictures of arrangements and guard placements.

The only place coordinates are turned into decimals.
"""

from __future__ import annotations

from typing import Iterable

from .arrangement import Arrangement


def _num(q) -> str:
    return format(float(q), ".12g")


def render_svg(arr: Arrangement, guards: Iterable[int] = (), size: int = 480) -> str:
    guards = set(guards)
    pts = list(arr.vertices.values())
    if pts:
        xmin, xmax = min(p.x for p in pts), max(p.x for p in pts)
        ymin, ymax = min(p.y for p in pts), max(p.y for p in pts)
    else:
        xmin = xmax = ymin = ymax = 0
    span = max(xmax - xmin, ymax - ymin) or 1
    margin = span / 20
    # SVG's y axis points down; draw in (x, -y).
    vx, vy = xmin - margin, -ymax - margin
    vw, vh = (xmax - xmin) + 2 * margin, (ymax - ymin) + 2 * margin
    stroke = span / 150
    r = span / 80

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_num(vx)} {_num(vy)} {_num(vw)} {_num(vh)}">',
        f'<g class="segments" stroke="#333" stroke-width="{_num(stroke)}" stroke-linecap="round">',
    ]
    for sid, s in sorted(arr.segments.items()):
        out.append(
            f'<line class="segment" data-id="{sid}" x1="{_num(s.a.x)}" y1="{_num(-s.a.y)}" '
            f'x2="{_num(s.b.x)}" y2="{_num(-s.b.y)}"/>'
        )
    out.append("</g>")
    out.append('<g class="vertices">')
    for v, p in sorted(arr.vertices.items()):
        if v in guards:
            out.append(
                f'<circle class="vertex guard" data-id="{v}" cx="{_num(p.x)}" cy="{_num(-p.y)}" '
                f'r="{_num(2 * r)}" fill="#d62728"/>'
            )
        else:
            out.append(
                f'<circle class="vertex" data-id="{v}" cx="{_num(p.x)}" cy="{_num(-p.y)}" r="{_num(r)}" fill="#1f77b4"/>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
