"""Static SVG scatter of a root cloud."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .families import RootCloud, Window

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"]


def render_svg(cloud: RootCloud, window: Window, size: int = 600, radius: float = 2.5) -> str:
    """One circle per root inside ``window``; colour cycles with the sweep parameter.

    The viewport maps ``window`` affinely onto a ``size x size`` square with
    the imaginary axis pointing up.
    """
    x0, x1, y0, y1 = window
    pad = 30
    inner = size - 2 * pad

    def sx(x):
        return pad + (x - x0) / (x1 - x0) * inner

    def sy(y):
        return pad + (y1 - y) / (y1 - y0) * inner

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        f'<rect x="{pad}" y="{pad}" width="{inner}" height="{inner}" fill="none" stroke="#888"/>',
    ]
    if x0 <= 0 <= x1:
        out.append(f'<line x1="{sx(0):.2f}" y1="{pad}" x2="{sx(0):.2f}" y2="{pad + inner}" stroke="#bbb"/>')
    if y0 <= 0 <= y1:
        out.append(f'<line x1="{pad}" y1="{sy(0):.2f}" x2="{pad + inner}" y2="{sy(0):.2f}" stroke="#bbb"/>')
    out.append(
        f'<text x="{pad}" y="{size - 8}" font-size="11" font-family="sans-serif">'
        f"Re [{x0:g}, {x1:g}]  Im [{y0:g}, {y1:g}]</text>"
    )

    colours: dict[tuple[int, ...], str] = {}
    for p in cloud.points:
        if not (x0 <= p.re <= x1 and y0 <= p.im <= y1):
            continue
        colour = colours.setdefault(p.params, PALETTE[len(colours) % len(PALETTE)])
        title = escape(f"{p.family} {list(p.params)}: {p.re:.6g}{p.im:+.6g}i x{p.multiplicity}")
        out.append(
            f'<circle cx="{sx(p.re):.2f}" cy="{sy(p.im):.2f}" r="{radius}" fill="{colour}">'
            f"<title>{title}</title></circle>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
