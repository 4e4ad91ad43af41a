"""Deterministic SVG figures of carpet approximations and spectrum curves"""
from io import StringIO
from typing import Optional
import logging

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from ..config import SvgOptions
from ..core.carpet import CarpetSpec, ell
from ..errors import ConfigError
from .components import PieceKind, partition_pieces
from .squares import enumerate_basic, enumerate_squares

logger = logging.getLogger(__name__)

SVG_RC = {
    "svg.hashsalt": "carpetlab",
    "svg.fonttype": "none",
    "path.simplify": False,
}


def _to_svg(fig: Figure) -> str:
    buffer = StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def render_svg(spec: CarpetSpec, k: int, options: Optional[SvgOptions] = None,
               budget: Optional[int] = None) -> str:
    """Draw the rank-k basic rectangles (or approximate squares) inside the unit square"""
    options = options or SvgOptions()
    if k < 0:
        raise ConfigError(f"render_svg needs k >= 0, got {k}")

    kind = PieceKind(options.kind)
    pieces = []
    if k > 0:
        enumerate_pieces = enumerate_squares if kind is PieceKind.SQUARE else enumerate_basic
        pieces = list(enumerate_pieces(spec, k, budget))
    colors = {}
    if options.color_components and pieces:
        palette = matplotlib.colormaps["tab20"]
        partition = partition_pieces(pieces, k, kind)
        pieces = partition.pieces
        for index, cell in enumerate(partition.cells):
            for member in cell:
                colors[member] = palette(index % palette.N)

    width = spec.n ** k
    height = spec.m ** (ell(k, spec) if kind is PieceKind.SQUARE else k)
    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(6, 6))
        ax = fig.add_axes((0.02, 0.02, 0.96, 0.96))
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_aspect("equal")
        ax.set_axis_off()
        if options.title:
            ax.set_title(options.title)

        ax.add_patch(Rectangle((0, 0), 1, 1, fill=False, edgecolor=options.edge_color,
                               linewidth=1.0, gid="outline"))
        for index, piece in enumerate(pieces):
            X, Y = piece.cell
            ax.add_patch(Rectangle(
                (X / width, Y / height), 1 / width, 1 / height,
                facecolor=colors.get(index, options.fill),
                edgecolor=options.edge_color,
                linewidth=options.cell_size,
                gid=f"cell-{index}",
            ))

        logger.info(f"Rendered {len(pieces)} cells at rank {k}")
        return _to_svg(fig)


def render_spectrum_svg(curve, options: Optional[SvgOptions] = None) -> str:
    """Plot the sampled (alpha, h) pairs of a spectrum curve"""
    options = options or SvgOptions()
    alphas = [float(sample.alpha) for sample in curve.samples]
    hs = [float(sample.h) for sample in curve.samples]

    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(6, 4))
        ax = fig.add_subplot(1, 1, 1)
        ax.plot(alphas, hs, marker="o", color=options.fill, gid="spectrum-curve")
        ax.axvline(float(curve.alpha_min), color=options.edge_color, linestyle="--", linewidth=0.8)
        ax.axvline(float(curve.alpha_max), color=options.edge_color, linestyle="--", linewidth=0.8)
        ax.set_xlabel("alpha")
        ax.set_ylabel("h(alpha)")
        ax.set_title(options.title or "Multifractal spectrum")
        ax.grid(True, alpha=0.3)
        return _to_svg(fig)
