"""CSV and SVG emission with atomic writes."""
from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape


def fmt(x: float) -> str:
    """Six significant digits, no exponent noise for ordinary magnitudes."""
    s = f"{x:.6g}"
    return "0" if s == "-0" else s


def csv_text(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def write_atomic(path: str | Path, text: str) -> None:
    """Write via a temp file in the target directory; nothing is left on failure."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent if str(path.parent) else ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def svg_line_chart(xs: Sequence[float], ys: Sequence[float], x_label: str, y_label: str,
                   title: str = "", width: int = 640, height: int = 400) -> str:
    """Minimal standalone SVG polyline with axis ranges printed at the corners."""
    pad = 50
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 == y0:
        y0, y1 = y0 - 1, y1 + 1
    sx = (width - 2 * pad) / (x1 - x0)
    sy = (height - 2 * pad) / (y1 - y0)
    pts = " ".join(
        f"{pad + (x - x0) * sx:.2f},{height - pad - (y - y0) * sy:.2f}" for x, y in zip(xs, ys)
    )
    bottom, right = height - pad, width - pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{bottom}" stroke="black"/>',
        f'<polyline fill="none" stroke="steelblue" stroke-width="2" points="{pts}"/>',
        f'<text x="{pad}" y="{bottom + 20}" font-size="12">{fmt(x0)}</text>',
        f'<text x="{right}" y="{bottom + 20}" font-size="12" text-anchor="end">{fmt(x1)}</text>',
        f'<text x="{pad - 5}" y="{bottom}" font-size="12" text-anchor="end">{fmt(y0)}</text>',
        f'<text x="{pad - 5}" y="{pad + 4}" font-size="12" text-anchor="end">{fmt(y1)}</text>',
        f'<text x="{width / 2:.0f}" y="{height - 10}" font-size="13" text-anchor="middle">{escape(x_label)}</text>',
        f'<text x="15" y="{height / 2:.0f}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 15 {height / 2:.0f})">{escape(y_label)}</text>',
    ]
    if title:
        parts.append(f'<text x="{width / 2:.0f}" y="25" font-size="14" text-anchor="middle">{escape(title)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
