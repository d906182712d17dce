"""Hasse diagram and Young diagram plotting (matplotlib)."""
import typing
from collections.abc import Mapping
from typing import Optional
import matplotlib.pyplot as plt
import networkx as nx
import numpy as np
from matplotlib.lines import Line2D
from matplotlib.patches import Rectangle


if typing.TYPE_CHECKING:
    from quasipsi.poset import LabeledPoset
    from quasipsi.poset import SkewShape


NATURAL_COLOR = "#1f9ce9"  # Blue
STRICT_COLOR = "#ff7700"  # Orange


def hasse_positions(poset: "LabeledPoset") -> dict[int, tuple[float, float]]:
    """Place every element at the height of the longest chain below it.

    Args:
        poset: The labeled poset.

    Returns:
        Dictionary of element -> (x, y) coordinates.
    """
    graph = poset.cover_graph
    rank = {x: 0 for x in poset.elements}
    for x in nx.topological_sort(graph):
        for y in graph.successors(x):
            rank[y] = max(rank[y], rank[x] + 1)
    positions = {}
    for level in sorted(set(rank.values())):
        row = sorted(x for x, r in rank.items() if r == level)
        offsets = np.arange(len(row)) - (len(row) - 1) / 2
        positions.update({x: (float(dx), float(level)) for x, dx in zip(row, offsets)})
    return positions


def plot_hasse(poset: "LabeledPoset", ax=None, show_labels: bool = True):
    """Draw the Hasse diagram of a labeled poset, with strict edges in bold.

    Args:
        poset: The labeled poset.
        ax: If a matplotlib axis object is passed, the plot will be generated in that
            axis. Otherwise a new figure is made.
        show_labels: If the labels should be written next to the elements.

    Returns:
        The matplotlib axis.
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))

    positions = hasse_positions(poset)
    for a, b in poset.covers:
        strict = a > b
        (xa, ya), (xb, yb) = positions[a], positions[b]
        ax.plot(
            [xa, xb],
            [ya, yb],
            color=STRICT_COLOR if strict else NATURAL_COLOR,
            linewidth=3 if strict else 1,
            zorder=1,
        )
    if positions:
        xy = np.array(list(positions.values()))
        ax.scatter(xy[:, 0], xy[:, 1], s=300, color="white", edgecolor="k", zorder=2)
    if show_labels:
        for x, (px, py) in positions.items():
            ax.text(px, py, str(x), ha="center", va="center", zorder=3)

    legend_elements = [
        Line2D([0], [0], color=NATURAL_COLOR, linewidth=1, label="natural"),
        Line2D([0], [0], color=STRICT_COLOR, linewidth=3, label="strict"),
    ]
    ax.legend(handles=legend_elements, loc="center left", bbox_to_anchor=(1, 0.5))
    ax.set_axis_off()
    ax.margins(0.2)
    return ax


def plot_tableau(
    shape: "SkewShape", fill: Optional[Mapping[tuple[int, int], int]] = None, ax=None
):
    """Draw a skew Young diagram in English convention.

    Args:
        shape: The skew shape.
        fill: Optional mapping of cells to the values written in them.
        ax: If a matplotlib axis object is passed, the plot will be generated in that
            axis. Otherwise a new figure is made.

    Returns:
        The matplotlib axis.
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))

    fill = {} if fill is None else fill
    for row, col in shape.cells:
        ax.add_patch(
            Rectangle(
                (col - 1, -row),
                1,
                1,
                facecolor="white",
                edgecolor="k",
                linewidth=1.5,
            )
        )
        if (row, col) in fill:
            value = str(fill[(row, col)])
            ax.text(col - 0.5, -row + 0.5, value, ha="center", va="center")

    width = shape.outer[0] if shape.outer else 0
    ax.set_xlim(-0.1, width + 0.1)
    ax.set_ylim(-len(shape.outer) - 0.1, 0.1)
    ax.set_aspect("equal")
    ax.set_axis_off()
    return ax
