"""SVG rendering of verification reports.

Figures show the unit circle, the constructed lines clipped to a fixed
viewport, and labeled points; highlighted lines (Pascal line,
perpendiculars, ...) are drawn in orange.  Coordinates are rounded to
six decimals for display only.
"""

from __future__ import annotations

from .theorems import VerificationReport

VIEW = 2.4  # world half-width of the viewport
SIZE = 640  # pixel width/height
_PAD = 1e-9


def _to_px(x: float, y: float) -> tuple[float, float]:
    s = SIZE / (2 * VIEW)
    return (x + VIEW) * s, (VIEW - y) * s


def _fmt(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".")


def _clip_line(a: float, b: float, c: float):
    """Endpoints of a*x + b*y + c = 0 clipped to the viewport square."""
    pts = []
    for xv in (-VIEW, VIEW):
        if b != 0:
            y = -(a * xv + c) / b
            if -VIEW - _PAD <= y <= VIEW + _PAD:
                pts.append((xv, y))
    for yv in (-VIEW, VIEW):
        if a != 0:
            x = -(b * yv + c) / a
            if -VIEW - _PAD <= x <= VIEW + _PAD:
                pts.append((x, yv))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) > 1e-9 or abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def render_svg(report: VerificationReport, path) -> None:
    """Write an SVG 1.1 figure for a report."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg_text(report))


def render_svg_text(report: VerificationReport) -> str:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">\n',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>\n',
    ]
    cx, cy = _to_px(0.0, 0.0)
    r = SIZE / (2 * VIEW)
    parts.append(
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
        'fill="none" stroke="black" stroke-width="2"/>\n'
    )
    for label, line in report.lines:
        seg = _clip_line(float(line.a), float(line.b), float(line.c))
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        px1, py1 = _to_px(x1, y1)
        px2, py2 = _to_px(x2, y2)
        hot = label in report.highlight
        color = "#ff6600" if hot else "#3355bb"
        width = 2.5 if hot else 1.2
        parts.append(
            f'<line x1="{_fmt(px1)}" y1="{_fmt(py1)}" '
            f'x2="{_fmt(px2)}" y2="{_fmt(py2)}" '
            f'stroke="{color}" stroke-width="{width}">'
            f"<title>{label}</title></line>\n"
        )
    for label, p in report.points:
        if p.at_infinity:
            continue
        x, y = p.affine_floats()
        if abs(x) > VIEW or abs(y) > VIEW:
            continue
        px, py = _to_px(x, y)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3.5" fill="#222222"/>\n'
            f'<text x="{_fmt(px + 6)}" y="{_fmt(py - 6)}" '
            f'font-size="14" font-family="sans-serif">{label}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)
