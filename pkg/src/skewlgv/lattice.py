"""The two weighted lattices carried by a skew diagram.

Coordinates follow the diagram convention: i grows downward (rows 0..n),
j grows rightward (columns).  The 1x1 box in row i and column j has its
bottom-right corner at the point (i, j); lattice nodes are the corners of
the diagram's boxes.

The left lattice ("L", blue) walks rightward along box sides and downward
along the right-hand side of each box; a descent in column j weighs x_j.
The right lattice ("R", red) walks leftward and down-leftward across each
box's top-right to bottom-left diagonal, again weighing x_j.  Horizontal
steps are free.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace as _dc_replace
from typing import NamedTuple

from .poly import Polynomial
from .shape import IndexSelection, SkewShape

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
DIAGONAL = "diagonal"


class Node(NamedTuple):
    i: int
    j: int


class Edge(NamedTuple):
    src: Node
    dst: Node
    kind: str
    weight: Polynomial


@dataclass(frozen=True, eq=False)
class Lattice:
    """Immutable weighted DAG with row-ordered sources and sinks."""

    flavor: str  # "L" or "R"
    shape: SkewShape
    nodes: frozenset[Node]
    edges: tuple[Edge, ...]
    sources: tuple[Node, ...]
    sinks: tuple[Node, ...]
    isolated_nodes: tuple[Node, ...]
    adjacency: dict[Node, tuple[tuple[Node, Polynomial], ...]] = field(repr=False)
    edge_map: dict[Node, dict[Node, Polynomial]] = field(repr=False)

    def successors(self, u: Node) -> tuple[tuple[Node, Polynomial], ...]:
        return self.adjacency.get(u, ())

    def edge_weight(self, u: Node, v: Node) -> Polynomial | None:
        """Weight of the edge u -> v, or None when absent."""
        row = self.edge_map.get(u)
        if row is None:
            return None
        return row.get(v)

    def edge_count(self, kind: str) -> int:
        return sum(1 for e in self.edges if e.kind == kind)


def _corner_nodes(shape: SkewShape) -> set[Node]:
    nodes: set[Node] = set()
    for i in range(1, shape.n + 1):
        lo, hi = shape.alpha[i - 1], shape.beta[i - 1]
        if lo >= hi:
            continue
        for j in range(lo, hi + 1):
            nodes.add(Node(i - 1, j))
            nodes.add(Node(i, j))
    return nodes


def _finish(
    flavor: str,
    shape: SkewShape,
    edge_dict: dict[tuple[Node, Node], Edge],
    sources: tuple[Node, ...],
    sinks: tuple[Node, ...],
    nodes: set[Node],
) -> Lattice:
    # designated endpoints that touch no box become isolated nodes;
    # a source stranded this way simply contributes zero paths
    isolated = tuple(
        sorted(set(p for p in (*sources, *sinks) if p not in nodes))
    )
    nodes.update(isolated)
    adjacency: dict[Node, list[tuple[Node, Polynomial]]] = {}
    edge_map: dict[Node, dict[Node, Polynomial]] = {}
    for (u, v), e in edge_dict.items():
        adjacency.setdefault(u, []).append((v, e.weight))
        edge_map.setdefault(u, {})[v] = e.weight
    # destination order doubles as the deterministic step order:
    # L walks rightward before downward, R leftward before diagonally
    # (node tuples compare first, and no two edges share src and dst)
    ordered = {}
    for u, lst in adjacency.items():
        lst.sort()
        ordered[u] = tuple(lst)
    edges = tuple(e for _, e in sorted(edge_dict.items()))
    return Lattice(
        flavor=flavor,
        shape=shape,
        nodes=frozenset(nodes),
        edges=edges,
        sources=sources,
        sinks=sinks,
        isolated_nodes=isolated,
        adjacency=ordered,
        edge_map=edge_map,
    )


def build_L(shape: SkewShape, sel: IndexSelection | None = None) -> Lattice:
    """Left lattice; sources sit at (a, alpha_{a+1}) for a in A and sinks
    at (b, beta_b) for b in B, rows read with the boundary conventions
    alpha_{n+1} = alpha_n and beta_0 = beta_1."""
    nodes = _corner_nodes(shape)
    one = Polynomial.one()
    edge_dict: dict[tuple[Node, Node], Edge] = {}
    for i, j in shape.boxes():
        w = Polynomial.variable(j)
        top = (Node(i - 1, j - 1), Node(i - 1, j))
        bot = (Node(i, j - 1), Node(i, j))
        right = (Node(i - 1, j), Node(i, j))
        edge_dict[top] = Edge(*top, HORIZONTAL, one)
        edge_dict[bot] = Edge(*bot, HORIZONTAL, one)
        edge_dict[right] = Edge(*right, VERTICAL, w)
    if sel is None:
        sources: tuple[Node, ...] = ()
        sinks: tuple[Node, ...] = ()
    else:
        sources = tuple(Node(a, shape.alpha_part(a + 1)) for a in sel.a_set)
        sinks = tuple(Node(b, shape.beta_part(b)) for b in sel.b_set)
    return _finish("L", shape, edge_dict, sources, sinks, nodes)


def build_R(shape: SkewShape, sel: IndexSelection | None = None) -> Lattice:
    """Right lattice; sources sit at (b', beta_{b'}) for b' outside B and
    sinks at (a', alpha_{a'+1}) for a' outside A, with the same boundary
    conventions as the left lattice."""
    nodes = _corner_nodes(shape)
    one = Polynomial.one()
    edge_dict: dict[tuple[Node, Node], Edge] = {}
    for i, j in shape.boxes():
        w = Polynomial.variable(j)
        top = (Node(i - 1, j), Node(i - 1, j - 1))
        bot = (Node(i, j), Node(i, j - 1))
        diag = (Node(i - 1, j), Node(i, j - 1))
        edge_dict[top] = Edge(*top, HORIZONTAL, one)
        edge_dict[bot] = Edge(*bot, HORIZONTAL, one)
        edge_dict[diag] = Edge(*diag, DIAGONAL, w)
    if sel is None:
        sources: tuple[Node, ...] = ()
        sinks: tuple[Node, ...] = ()
    else:
        sources = tuple(Node(b, shape.beta_part(b)) for b in sel.b_comp)
        sinks = tuple(Node(a, shape.alpha_part(a + 1)) for a in sel.a_comp)
    return _finish("R", shape, edge_dict, sources, sinks, nodes)


def with_selection(base: Lattice, sel: IndexSelection) -> Lattice:
    """Re-designate sources and sinks on a lattice built with sel=None.

    Edges and adjacency are shared; only the endpoint bookkeeping changes.
    Useful in sweeps, where one shape serves many selections.
    """
    shape = base.shape
    if base.flavor == "L":
        sources = tuple(Node(a, shape.alpha_part(a + 1)) for a in sel.a_set)
        sinks = tuple(Node(b, shape.beta_part(b)) for b in sel.b_set)
    else:
        sources = tuple(Node(b, shape.beta_part(b)) for b in sel.b_comp)
        sinks = tuple(Node(a, shape.alpha_part(a + 1)) for a in sel.a_comp)
    isolated = tuple(
        sorted(set(p for p in (*sources, *sinks) if p not in base.nodes))
    )
    return _dc_replace(
        base,
        sources=sources,
        sinks=sinks,
        isolated_nodes=isolated,
        nodes=base.nodes | frozenset(isolated),
    )


def _line_extreme(shape: SkewShape, t: int, want_left: bool, fallback: Node) -> Node:
    from .shape import line_runs

    runs = line_runs(shape, t)
    if not runs:
        return fallback
    return Node(t, runs[0][0]) if want_left else Node(t, runs[-1][1])


def with_line_extreme_endpoints(base: Lattice, sel: IndexSelection) -> Lattice:
    """Designate endpoints as the extreme nodes of each horizontal line.

    This is the literal endpoint rule; for partition pairs it coincides
    with the explicit coordinate formulas whenever those land on the line
    at all.  Composition pairs need this form for the connector bijection,
    since their explicit coordinates can sit strictly inside a line.
    Lines without nodes fall back to the explicit coordinates.
    """
    shape = base.shape
    if base.flavor == "L":
        sources = tuple(
            _line_extreme(shape, a, True, Node(a, shape.alpha_part(a + 1)))
            for a in sel.a_set
        )
        sinks = tuple(
            _line_extreme(shape, b, False, Node(b, shape.beta_part(b)))
            for b in sel.b_set
        )
    else:
        sources = tuple(
            _line_extreme(shape, b, False, Node(b, shape.beta_part(b)))
            for b in sel.b_comp
        )
        sinks = tuple(
            _line_extreme(shape, a, True, Node(a, shape.alpha_part(a + 1)))
            for a in sel.a_comp
        )
    isolated = tuple(
        sorted(set(p for p in (*sources, *sinks) if p not in base.nodes))
    )
    return _dc_replace(
        base,
        sources=sources,
        sinks=sinks,
        isolated_nodes=isolated,
        nodes=base.nodes | frozenset(isolated),
    )


def topological_potential(lat: Lattice) -> bool:
    """True when a strictly increasing potential orders every edge, which
    exhibits a topological order (hence acyclicity)."""
    if lat.flavor == "L":
        pot = lambda p: p.i + p.j
    else:
        pot = lambda p: p.i - p.j
    return all(pot(e.dst) > pot(e.src) for e in lat.edges)


def render(lat: Lattice) -> str:
    """Monospace picture: nodes '+', sources 'o', sinks 'x' (both: '*'),
    horizontal edges '---', vertical '|', diagonal '\\'."""
    if not lat.nodes:
        return ""
    max_i = max(p.i for p in lat.nodes)
    max_j = max(p.j for p in lat.nodes)
    height = 2 * max_i + 1
    width = 4 * max_j + 1
    grid = [[" "] * width for _ in range(height)]
    for e in lat.edges:
        u, v = e.src, e.dst
        if e.kind == HORIZONTAL:
            row = 2 * u.i
            left = min(u.j, v.j)
            for c in range(4 * left + 1, 4 * left + 4):
                grid[row][c] = "-"
        elif e.kind == VERTICAL:
            grid[2 * u.i + 1][4 * u.j] = "|"
        else:
            grid[2 * u.i + 1][4 * v.j + 2] = "\\"
    sources = set(lat.sources)
    sinks = set(lat.sinks)
    for p in sorted(lat.nodes):
        if p in sources and p in sinks:
            glyph = "*"
        elif p in sources:
            glyph = "o"
        elif p in sinks:
            glyph = "x"
        else:
            glyph = "+"
        grid[2 * p.i][4 * p.j] = glyph
    return "\n".join("".join(row).rstrip() for row in grid)
