"""File-rendering reports: a TSV verdict table plus PNG figures.

The report directory gets ``summary.tsv`` (one row per derivable literal,
with the warrant and grounded-acceptance verdicts of every engine), a
``defeats.png`` picture of the derivation-argument framework, and one
``tree_<goal>.png`` per requested goal showing its marked dialectical tree.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .afsem import grounded
from .aspic import AttackKind, build_framework
from .delp import Mark, TreeNode, delp_arguments, trees, warranted_literals
from .delp_gr import delp_framework, grounded_arguments
from .lang import Literal, Program
from .orderings import Ordering, ordering_for


def _verdict(flag: bool) -> str:
    return "yes" if flag else "no"


def write_summary_tsv(program: Program, path: Path,
                      ordering: Ordering | None = None) -> None:
    ordering = ordering or ordering_for(program)
    literals = sorted({a.conclusion for a in delp_arguments(program)},
                      key=lambda l: l.sort_key)
    warranted = warranted_literals(program, ordering)
    accepted_gr = {a.conclusion for a in grounded_arguments(program, ordering)}
    aspic_accepted: dict[AttackKind, set[Literal]] = {}
    for kind in AttackKind:
        framework = build_framework(program, kind, ordering)
        aspic_accepted[kind] = {a.conclusion for a in grounded(framework)}

    header = ["literal", "warrant", "warrant_gr",
              "aspic_rebut", "aspic_urebut", "aspic_dlprebut"]
    lines = ["\t".join(header)]
    for literal in literals:
        row = [
            str(literal),
            _verdict(literal in warranted),
            _verdict(literal in accepted_gr),
            _verdict(literal in aspic_accepted[AttackKind.REBUT]),
            _verdict(literal in aspic_accepted[AttackKind.UREBUT]),
            _verdict(literal in aspic_accepted[AttackKind.DLPREBUT]),
        ]
        lines.append("\t".join(row))
    path.write_text("\n".join(lines) + "\n")


def render_defeat_graph(program: Program, path: Path,
                        ordering: Ordering | None = None) -> None:
    ordering = ordering or ordering_for(program)
    framework = delp_framework(program, ordering)
    accepted = grounded(framework)
    graph = nx.DiGraph()
    for argument in framework.arguments:
        graph.add_node(argument.text)
    for source, target in sorted(framework.defeats,
                                 key=lambda p: (p[0].sort_key, p[1].sort_key)):
        graph.add_edge(source.text, target.text)
    positions = nx.spring_layout(graph, seed=11)
    colors = [
        "#b6e3b6" if any(a.text == node and a in accepted for a in framework.arguments)
        else "#dddddd"
        for node in graph.nodes
    ]
    figure, axis = plt.subplots(figsize=(9, 6))
    nx.draw_networkx(graph, positions, ax=axis, node_color=colors,
                     node_size=1800, font_size=7, edge_color="#666666",
                     arrows=True)
    axis.set_axis_off()
    figure.tight_layout()
    figure.savefig(path, dpi=120)
    plt.close(figure)


def _tree_layout(node: TreeNode) -> dict[int, tuple[float, float, TreeNode]]:
    """Positions by id(node): leaves at consecutive x, parents centred."""
    placed: dict[int, tuple[float, float, TreeNode]] = {}
    next_x = [0.0]

    def place(current: TreeNode, depth: int) -> float:
        if not current.children:
            x = next_x[0]
            next_x[0] += 1.0
        else:
            xs = [place(child, depth + 1) for child in current.children]
            x = sum(xs) / len(xs)
        placed[id(current)] = (x, -float(depth), current)
        return x

    place(node, 0)
    return placed


def render_tree(program: Program, goal: Literal, path: Path,
                ordering: Ordering | None = None) -> bool:
    """Draw the marked tree for the first argument concluding the goal;
    returns False when the goal has no argument."""
    ordering = ordering or ordering_for(program)
    forest = trees(program, goal, ordering)
    if not forest:
        return False
    tree = forest[0]
    placed = _tree_layout(tree)
    figure, axis = plt.subplots(figsize=(9, 6))

    def draw_edges(current: TreeNode) -> None:
        x0, y0, _ = placed[id(current)]
        for child in current.children:
            x1, y1, _ = placed[id(child)]
            axis.plot([x0, x1], [y0, y1], color="#888888", zorder=1)
            axis.text((x0 + x1) / 2, (y0 + y1) / 2, child.kind.value[0].upper(),
                      fontsize=7, color="#555555")
            draw_edges(child)

    draw_edges(tree)
    for x, y, node in placed.values():
        color = "#b6e3b6" if node.mark is Mark.U else "#f2b8b8"
        axis.text(x, y, f"{node.mark.value} {node.argument.text}",
                  ha="center", va="center", fontsize=7, zorder=2,
                  bbox={"boxstyle": "round", "facecolor": color,
                        "edgecolor": "#444444"})
    axis.set_axis_off()
    margin = 0.6
    xs = [x for x, _, _ in placed.values()]
    ys = [y for _, y, _ in placed.values()]
    axis.set_xlim(min(xs) - margin, max(xs) + margin)
    axis.set_ylim(min(ys) - margin, max(ys) + margin)
    figure.tight_layout()
    figure.savefig(path, dpi=120)
    plt.close(figure)
    return True


def write_report(program: Program, out_dir: Path,
                 goals: Iterable[Literal] = (),
                 ordering: Ordering | None = None) -> list[Path]:
    """Render the full report; returns the files written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ordering = ordering or ordering_for(program)
    written: list[Path] = []

    summary = out_dir / "summary.tsv"
    write_summary_tsv(program, summary, ordering)
    written.append(summary)

    defeats = out_dir / "defeats.png"
    render_defeat_graph(program, defeats, ordering)
    written.append(defeats)

    for goal in goals:
        target = out_dir / f"tree_{str(goal).replace('~', 'not_')}.png"
        if render_tree(program, goal, target, ordering):
            written.append(target)
    return written
