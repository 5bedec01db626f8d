"""ASCII and SVG pictures of a Ferrers diagram and its ideal.

Dots (or ``*``) mark F(lambda), crosses (``x``) mark I(lambda) inside a box of
width lambda_1 + 2 and height numparts + 1.  The origin is bottom-left.
"""

from __future__ import annotations

from staircase.closure import integral_closure
from staircase.partition import Partition, format_partition

CELL = 20


def _box(lam: Partition) -> tuple[int, int]:
    return lam.largest + 2, lam.numparts + 1


def ascii_grid(lam: Partition, box: tuple[int, int] | None = None) -> list[str]:
    width, height = box or _box(lam)
    rows = []
    for j in range(height - 1, -1, -1):
        rows.append(" ".join("*" if i < lam.part(j + 1) else "x" for i in range(width)))
    return rows


def render_ascii(lam: Partition, with_closure: bool = False) -> str:
    left = ascii_grid(lam)
    if not with_closure:
        return "\n".join(left) + "\n"
    right = ascii_grid(integral_closure(lam), _box(lam))
    return "\n".join(f"{a}   {b}" for a, b in zip(left, right)) + "\n"


def _panel(lam: Partition, box: tuple[int, int], x0: float, height_px: float) -> list[str]:
    width, height = box
    out = []
    # axes through the origin cell centre
    ox, oy = x0 + CELL / 2, height_px - CELL / 2
    out.append(f'<line x1="{ox}" y1="{oy}" x2="{ox + (width - 0.5) * CELL}" y2="{oy}" stroke="black"/>')
    out.append(f'<line x1="{ox}" y1="{oy}" x2="{ox}" y2="{oy - (height - 0.5) * CELL}" stroke="black"/>')
    for j in range(height):
        for i in range(width):
            cx, cy = ox + i * CELL, oy - j * CELL
            if i < lam.part(j + 1):
                out.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>')
            else:
                d = 4
                out.append(
                    f'<path d="M{cx - d},{cy - d}L{cx + d},{cy + d}M{cx - d},{cy + d}L{cx + d},{cy - d}" stroke="black"/>'
                )
    return out


def render_svg(lam: Partition, with_closure: bool = False) -> str:
    box = _box(lam)
    width, height = box
    panels = [lam, integral_closure(lam)] if with_closure else [lam]
    gap = 2 * CELL
    w_px = len(panels) * width * CELL + (len(panels) - 1) * gap
    h_px = height * CELL
    body = []
    for idx, part in enumerate(panels):
        x0 = idx * (width * CELL + gap)
        body.append(f'<g><title>{format_partition(part) or "()"}</title>')
        body.extend(_panel(part, box, x0, h_px))
        body.append("</g>")
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{w_px}" height="{h_px}" viewBox="0 0 {w_px} {h_px}">'
    return "\n".join([head, *body, "</svg>"]) + "\n"
