"""Deterministic SVG and DOT renderings of the core objects.

Strand diagrams are drawn top to bottom (sources on top), one band per
slice event; a generalized diagram appends a band for its weighted
forest, with caret labels showing the weights.  Configurations become
marked points on a number line.  Ball graphs are emitted as DOT
digraphs whose edges point from coarser to finer vertices, or as plain
"a -- b" edge lists.

Identical inputs and options always produce byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cubes import BallGraph
from .diagrams import MERGE, SPLIT, StrandDiagram
from .errors import DomainError
from .forests import EDGE, GeneralizedStrandDiagram

_SINK_SOURCES = {EDGE: 1, SPLIT: 1, MERGE: 2}
_SINK_SINKS = {EDGE: 1, SPLIT: 2, MERGE: 1}


@dataclass(frozen=True)
class RenderSpec:
    fmt: str = "svg"
    scale: float = 40.0
    labels: bool = True

    def __post_init__(self) -> None:
        if self.fmt not in ("svg", "dot", "text"):
            raise DomainError(f"unsupported output format {self.fmt!r}")
        if self.scale <= 0:
            raise DomainError("scale must be positive")


def _fmt(x: float) -> str:
    return f"{x:.6g}"


class _Canvas:
    def __init__(self, scale: float) -> None:
        self.scale = scale
        self.lines: list[str] = []
        self.dots: list[str] = []
        self.texts: list[str] = []
        self.maxx = 1.0
        self.maxy = 1.0

    def _xy(self, x: float, y: float) -> tuple[float, float]:
        px, py = x * self.scale, (y + 1) * self.scale
        self.maxx = max(self.maxx, px)
        self.maxy = max(self.maxy, py)
        return px, py

    def line(self, x0, y0, x1, y1) -> None:
        a = self._xy(x0, y0)
        b = self._xy(x1, y1)
        self.lines.append(
            f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" '
            f'x2="{_fmt(b[0])}" y2="{_fmt(b[1])}"/>'
        )

    def dot(self, x, y, r=3.5) -> None:
        p = self._xy(x, y)
        self.dots.append(
            f'<circle cx="{_fmt(p[0])}" cy="{_fmt(p[1])}" r="{_fmt(r)}"/>'
        )

    def ring(self, x, y, r=6.0) -> None:
        p = self._xy(x, y)
        self.dots.append(
            f'<circle cx="{_fmt(p[0])}" cy="{_fmt(p[1])}" r="{_fmt(r)}" '
            f'fill="none" stroke="black"/>'
        )

    def text(self, x, y, s: str) -> None:
        p = self._xy(x, y)
        self.texts.append(
            f'<text x="{_fmt(p[0] + 5)}" y="{_fmt(p[1] - 3)}">{s}</text>'
        )

    def document(self) -> str:
        w = _fmt(self.maxx + self.scale)
        h = _fmt(self.maxy + self.scale)
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">',
            '<g stroke="black" stroke-width="1.5" fill="none">',
            *self.lines,
            "</g>",
            '<g fill="black">',
            *self.dots,
            "</g>",
            '<g font-family="monospace" font-size="11" fill="black">',
            *self.texts,
            "</g>",
            "</svg>",
        ]
        return "\n".join(parts) + "\n"


def _draw_word(canvas: _Canvas, d: StrandDiagram, labels: bool) -> int:
    """Draw the slice bands of a diagram; returns the final time row."""
    word = d.to_slices()
    count = word.sources
    for t, (tag, i) in enumerate(word.events):
        if tag == SPLIT:
            for k in range(1, i):
                canvas.line(k, t, k, t + 1)
            canvas.line(i, t, i, t + 1)
            canvas.line(i, t, i + 1, t + 1)
            canvas.dot(i, t)
            for k in range(i + 1, count + 1):
                canvas.line(k, t, k + 1, t + 1)
            if labels:
                canvas.text(i, t, f"S{i}")
            count += 1
        else:
            for k in range(1, i):
                canvas.line(k, t, k, t + 1)
            canvas.line(i, t, i, t + 1)
            canvas.line(i + 1, t, i, t + 1)
            canvas.dot(i, t + 1)
            for k in range(i + 2, count + 1):
                canvas.line(k, t, k - 1, t + 1)
            if labels:
                canvas.text(i, t + 1, f"M{i}")
            count -= 1
    if not word.events:
        for k in range(1, count + 1):
            canvas.line(k, 0, k, 1)
        return 1
    return len(word.events)


def render_diagram_svg(d: StrandDiagram, spec: RenderSpec) -> str:
    canvas = _Canvas(spec.scale)
    _draw_word(canvas, d, spec.labels)
    return canvas.document()


def render_generalized_svg(g: GeneralizedStrandDiagram, spec: RenderSpec) -> str:
    canvas = _Canvas(spec.scale)
    t = _draw_word(canvas, g.base, spec.labels)
    src = 1
    dst = 1
    for kind, w in g.forest.pairs():
        if kind == EDGE:
            canvas.line(src, t, dst, t + 1)
        elif kind == SPLIT:
            canvas.line(src, t, dst, t + 1)
            canvas.line(src, t, dst + 1, t + 1)
            canvas.dot(src, t)
            if spec.labels:
                canvas.text(src, t, str(w))
        else:
            canvas.line(src, t, dst, t + 1)
            canvas.line(src + 1, t, dst, t + 1)
            canvas.dot(dst, t + 1)
            if spec.labels:
                canvas.text(dst, t + 1, str(w))
        src += _SINK_SOURCES[kind]
        dst += _SINK_SINKS[kind]
    return canvas.document()


def render_config_svg(t: tuple[Fraction, ...], spec: RenderSpec) -> str:
    canvas = _Canvas(spec.scale)
    lo = min(t)
    hi = max(t)
    left = int(lo) - 1
    right = int(hi) + 2
    shift = 1 - left
    canvas.line(left + shift, 1, right + shift, 1)
    for k in range(left, right + 1):
        canvas.line(k + shift, 0.85, k + shift, 1.15)
        if spec.labels:
            canvas.text(k + shift - 0.15, 1.6, str(k))
    counts: dict[Fraction, int] = {}
    for x in t:
        counts[x] = counts.get(x, 0) + 1
    for x in sorted(counts):
        canvas.dot(float(x) + shift, 1, r=4.5)
        if counts[x] > 1:
            canvas.ring(float(x) + shift, 1)
        if spec.labels:
            canvas.text(float(x) + shift, 0.55, str(x))
    return canvas.document()


def ball_edge_text(g: BallGraph) -> str:
    return "".join(f"{a} -- {b}\n" for a, b in g.edges)


def ball_dot(g: BallGraph) -> str:
    lines = ["digraph ball {"]
    for v in g.vertices:
        mark = ' [style=bold]' if v == g.root else ""
        lines.append(f'  "{v}"{mark};')
    for a, b in g.edges:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
