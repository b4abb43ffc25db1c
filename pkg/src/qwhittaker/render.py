"""Lattice-path pictures of column strict fillings.

Each column of the filling is a path entering the grid from the right. The
grid has one vertical strip per tableau row (row 1 rightmost) and one band
per entry value (1 at the top, n at the bottom). In strip ``i`` the path of
column ``c`` arrives horizontally at the height of its row-``i`` entry,
runs down its own vertical line, and leaves to the left at the height of
its next entry (or exits at the bottom).

Inside one strip a path's incoming horizontal crossing another path's
vertical is a refinv configuration, so the marked crossings count inv(F).
An incoming horizontal that stops short of a vertical to its left, at a
level inside that vertical's span and in a band strictly below the band
where the vertical starts, is a quinv configuration. The band condition
settles ties between equal entries, which the turning heights alone order
one way only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .fillings import Filling, _require_csf


@dataclass(frozen=True)
class Segment:
    col: int
    strip: int  # tableau row whose strip contains the segment's turning point
    kind: str  # "in", "down" or "out"
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction


@dataclass
class LatticeDiagram:
    filling: Filling
    width: int  # number of strips
    height: int  # number of value bands
    paths: dict[int, list[tuple[Fraction, Fraction]]]
    segments: list[Segment]
    crossings: list[tuple[int, int, Fraction, Fraction]]  # (col of z, col of x, x, y)
    non_crossings: list[tuple[int, int, int]]  # (strip, col of z, col of x)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def non_crossing_count(self) -> int:
        return len(self.non_crossings)


def _label(c: int) -> str:
    return "123456789abcdefghijklmnopqrstuvwxyz"[(c - 1) % 35]


def lattice_diagram(F: Filling) -> LatticeDiagram:
    _require_csf(F)
    rows = len(F.rows)
    cols = len(F.rows[0]) if F.rows else 0
    n = F.n
    denom = rows * (cols + 1) + 1

    def turn_height(value: int, strip: int, col: int) -> Fraction:
        eps = Fraction((strip - 1) * (cols + 1) + (cols + 1 - col), denom)
        return (n - value) + eps

    def vline(strip: int, col: int) -> Fraction:
        return (rows - strip) + Fraction(col, cols + 1)

    paths: dict[int, list[tuple[Fraction, Fraction]]] = {}
    segments: list[Segment] = []
    for c, column in enumerate(F.columns(), start=1):
        y = turn_height(column[0], 1, c)
        x = Fraction(rows)
        points = [(x, y)]
        for i, value in enumerate(column, start=1):
            xi = vline(i, c)
            segments.append(Segment(c, i, "in", Fraction(rows - i + 1), y, xi, y))
            bottom = turn_height(column[i], i + 1, c) if i < len(column) else Fraction(0)
            segments.append(Segment(c, i, "down", xi, y, xi, bottom))
            points += [(xi, y), (xi, bottom)]
            if i < len(column):
                segments.append(Segment(c, i, "out", xi, bottom, Fraction(rows - i), bottom))
            y = bottom
        paths[c] = points

    incoming = [s for s in segments if s.kind == "in"]
    verticals = [s for s in segments if s.kind == "down"]
    crossings, non_crossings = [], []
    for h in incoming:
        left_edge = Fraction(rows - h.strip)
        for v in verticals:
            if v.strip != h.strip or v.col == h.col:
                continue
            if not (v.y1 < h.y0 < v.y0):
                continue
            if h.y0 > int(v.y0):  # same band as the vertical's top: equal entries
                continue
            if h.x1 < v.x0 < h.x0:
                crossings.append((h.col, v.col, v.x0, h.y0))
            elif left_edge < v.x0 < h.x1:
                non_crossings.append((h.strip, h.col, v.col))
    return LatticeDiagram(F, rows, n, paths, segments, crossings, non_crossings)


def caption(diagram: LatticeDiagram) -> str:
    return f"inv(F)={diagram.crossing_count}"


# ---------------------------------------------------------------------------
# Output formats
# ---------------------------------------------------------------------------

def to_svg(diagram: LatticeDiagram, unit: int = 60) -> str:
    W, H = diagram.width, diagram.height
    margin = unit // 2

    def px(x) -> str:
        return f"{float(margin + x * unit):.2f}"

    def py(y) -> str:
        return f"{float(margin + (H - y) * unit):.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{(W + 1) * unit}" '
        f'height="{(H + 1) * unit + unit // 2}" viewBox="0 0 {(W + 1) * unit} {(H + 1) * unit + unit // 2}">',
        '<g class="grid" stroke="#999" stroke-width="1" fill="none">',
    ]
    for x in range(W + 1):
        out.append(f'<line x1="{px(x)}" y1="{py(0)}" x2="{px(x)}" y2="{py(H)}"/>')
    for y in range(H + 1):
        out.append(f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(W)}" y2="{py(y)}"/>')
    out.append("</g>")
    out.append('<g class="labels" font-family="monospace" font-size="12">')
    for v in range(1, H + 1):
        out.append(f'<text x="{margin / 3:.2f}" y="{py(H - v + Fraction(1, 2))}">{v}</text>')
    out.append("</g>")
    out.append('<g class="paths" fill="none" stroke-width="2">')
    for c, points in sorted(diagram.paths.items()):
        d = "M " + " L ".join(f"{px(x)} {py(y)}" for x, y in points)
        out.append(f'<path class="column-path" data-column="{c}" stroke="hsl({(c * 67) % 360},70%,40%)" d="{d}"/>')
    out.append("</g>")
    out.append('<g class="crossings" fill="black">')
    for zc, xc, x, y in diagram.crossings:
        out.append(f'<circle class="inv-crossing" data-z="{zc}" data-x="{xc}" cx="{px(x)}" cy="{py(y)}" r="3"/>')
    out.append("</g>")
    out.append(
        f'<text class="caption" x="{margin}" y="{(H + 1) * unit + unit // 4}" '
        f'font-family="monospace" font-size="14">{escape(caption(diagram))}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_ascii(diagram: LatticeDiagram) -> str:
    """Character picture: ``*`` marks an inv crossing, ``+`` any other crossing,
    corners carry the column label."""
    F = diagram.filling
    W = diagram.width
    cols = len(F.rows[0]) if F.rows else 0
    if not cols:
        return caption(diagram) + "\n"

    levels = sorted({s.y0 for s in diagram.segments if s.kind != "down"} | {Fraction(0)}, reverse=True)
    line_of = {y: r for r, y in enumerate(levels)}

    def slot(x: Fraction) -> int:
        strip_from_left = int(x)  # 0 .. W-1
        c = round((x - strip_from_left) * (cols + 1))
        return strip_from_left * (cols + 1) + c

    width = W * (cols + 1) + 1
    canvas = [[" "] * width for _ in levels]
    for s in diagram.segments:
        if s.kind != "down":
            continue
        top, bot = line_of[s.y0], line_of[s.y1]
        for r in range(top + 1, bot + (1 if s.y1 == 0 else 0)):
            canvas[r][slot(s.x0)] = "|"
    marked = {(line_of[y], slot(x)) for _, _, x, y in diagram.crossings}
    for s in diagram.segments:
        if s.kind == "down":
            continue
        r = line_of[s.y0]
        a, b = sorted((s.x0, s.x1))
        lo, hi = slot(a), slot(b)
        turn = slot(s.x1) if s.kind == "in" else slot(s.x0)
        for pos in range(lo, hi + 1):
            if pos == turn:
                canvas[r][pos] = _label(s.col)
            elif canvas[r][pos] == "|":
                canvas[r][pos] = "*" if (r, pos) in marked else "+"
            elif canvas[r][pos] == " ":
                canvas[r][pos] = "-"

    # band labels: first line falling inside each value band
    labels = [""] * len(levels)
    n = diagram.height
    for r, y in enumerate(levels):
        if y == 0:
            continue
        v = n - int(y)
        if v not in labels:
            labels[r] = str(v)
    lines = [f"{lab:>3} " + "".join(row).rstrip() for lab, row in zip(labels, canvas)]
    lines.append(caption(diagram) + f"  crossings={diagram.crossing_count}"
                 f"  non-crossings={diagram.non_crossing_count}")
    return "\n".join(lines) + "\n"
