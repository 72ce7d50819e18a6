"""Simple undirected graphs and the constructions behind the rectangle counts.

Vertices are the integers 0..vertex_count-1.  The central family is the
rook-style graph G(n) on 3 rows and n columns (two cells adjacent iff they
share a row or a column), which this module builds two independent ways and
checks against itself: as the Cartesian product K3 x Kn and as the line graph
of K_{3,n}.  Cell (row i, column j), both 1-based in labels, sits at vertex
index (i-1)*n + (j-1).

G(n,p,q) is the surgered variant: the first p columns lose their row-1/row-2
edge, and in the next q columns the row-1 and row-2 cells are identified
(the merged vertex for column j is labeled y<j>).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import GraphParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph: a vertex count and a frozenset of sorted edge pairs."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError(f"vertex_count must be >= 0, got {self.vertex_count}")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph, normalizing edge orientation and collapsing duplicates.

        Loops are rejected; (u, v) and (v, u) denote the same edge.
        """
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            normalized.add((u, v) if u < v else (v, u))
        return cls(vertex_count, frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Adjacency rows as bitmasks: bit u of row v is set iff uv is an edge."""
        rows = [0] * self.vertex_count
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 0:
        raise ValueError(f"complete: n must be >= 0, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: left part 0..a-1, right part a..a+b-1, all cross edges."""
    if a < 1 or b < 1:
        raise ValueError(f"complete_bipartite: parts must be >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def line_graph(g: Graph) -> Graph:
    """The line graph: one vertex per edge of g, adjacent iff the edges share an endpoint.

    Vertices are numbered by the lexicographic order of g's (sorted) edge pairs,
    which is what makes the G(n) cell labeling line up with K_{3,n}.
    """
    edge_list = sorted(g.edges)
    m = len(edge_list)
    out = []
    for i in range(m):
        a, b = edge_list[i]
        for j in range(i + 1, m):
            c, d = edge_list[j]
            if a in (c, d) or b in (c, d):
                out.append((i, j))
    return Graph.from_edges(m, out)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (u, x) ~ (v, y) iff (u = v and x ~ y) or (u ~ v and x = y).

    Vertex (u, x) gets index u * h.vertex_count + x.
    """
    nh = h.vertex_count
    edges = []
    for u in range(g.vertex_count):
        for x, y in h.edges:
            edges.append((u * nh + x, u * nh + y))
    for u, v in g.edges:
        for x in range(nh):
            edges.append((u * nh + x, v * nh + x))
    return Graph.from_edges(g.vertex_count * nh, edges)


def build_gn(n: int) -> Graph:
    """The 3-row rook graph G(n) = K3 x Kn on vertices (i-1)*n + (j-1).

    Built as a Cartesian product and cross-checked, vertex for vertex, against
    the line graph of K_{3,n}; the two constructions must agree exactly.
    """
    if n < 1:
        raise ValueError(f"build_gn: n must be >= 1, got {n}")
    g = cartesian_product(complete(3), complete(n))
    assert g == line_graph(complete_bipartite(3, n)), "G(n) constructions disagree"
    return g


def gn_labeling(n: int) -> dict[str, int]:
    """Structural names for G(n)'s vertices: 'x<row>_<col>' -> index, 1-based."""
    if n < 1:
        raise ValueError(f"gn_labeling: n must be >= 1, got {n}")
    return {f"x{i + 1}_{j + 1}": i * n + j for i in range(3) for j in range(n)}


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Remove edge uv; the edge must exist."""
    e = (u, v) if u < v else (v, u)
    if e not in g.edges:
        raise ValueError(f"delete_edge: ({u}, {v}) is not an edge")
    return Graph(g.vertex_count, g.edges - {e})


def identify_with_map(g: Graph, u: int, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Merge vertices u and v (u != v), returning the new graph and the index map.

    The merged vertex lands at min(u, v); vertices above max(u, v) shift down
    by one so indices stay compact.  Any u-v edge disappears and parallel
    edges collapse.  map[old_index] = new_index, with u and v both mapping to
    the merged vertex — the construction is symmetric in u and v.
    """
    if u == v:
        raise ValueError("identify: vertices must be distinct")
    for w in (u, v):
        if not 0 <= w < g.vertex_count:
            raise ValueError(f"identify: vertex {w} out of range")
    lo, hi = (u, v) if u < v else (v, u)
    index_map = tuple(
        lo if w in (u, v) else (w if w < hi else w - 1) for w in range(g.vertex_count)
    )
    edges = set()
    for a, b in g.edges:
        na, nb = index_map[a], index_map[b]
        if na != nb:
            edges.add((na, nb) if na < nb else (nb, na))
    return Graph(g.vertex_count - 1, frozenset(edges)), index_map


def identify(g: Graph, u: int, v: int) -> Graph:
    """Merge vertices u and v; see identify_with_map."""
    return identify_with_map(g, u, v)[0]


def _build_gnpq_labeled(n: int, p: int, q: int) -> tuple[Graph, dict[str, int]]:
    if n < 1:
        raise ValueError(f"build_gnpq: n must be >= 1, got {n}")
    if p < 0 or q < 0 or p + q > n:
        raise ValueError(f"build_gnpq: need p, q >= 0 and p + q <= n, got p={p} q={q} n={n}")
    g = build_gn(n)
    labels = gn_labeling(n)
    for j in range(p):
        g = delete_edge(g, labels[f"x1_{j + 1}"], labels[f"x2_{j + 1}"])
    for j in range(p, p + q):
        a, b = labels.pop(f"x1_{j + 1}"), labels.pop(f"x2_{j + 1}")
        g, index_map = identify_with_map(g, a, b)
        labels = {name: index_map[idx] for name, idx in labels.items()}
        labels[f"y{j + 1}"] = index_map[a]
    return g, labels


def build_gnpq(n: int, p: int, q: int) -> Graph:
    """G(n,p,q): G(n) with the row-1/row-2 edge deleted in columns 1..p and the
    row-1/row-2 cells identified in columns p+1..p+q.

    Has 3n - q vertices.  G(n,0,0) is G(n) itself.
    """
    return _build_gnpq_labeled(n, p, q)[0]


def gnpq_labeling(n: int, p: int, q: int) -> dict[str, int]:
    """Structural names for G(n,p,q): surviving cells keep 'x<row>_<col>'; the
    merged row-1/row-2 cell of column j is 'y<j>'."""
    return _build_gnpq_labeled(n, p, q)[1]


def parse_graph(text: str) -> Graph:
    """Parse the plain text graph format.

    First significant line: the vertex count.  Each further significant line:
    an edge 'u v' with 0-based endpoints.  Blank lines and lines starting with
    '#' are ignored.  Duplicate edges collapse; loops and out-of-range
    endpoints are errors (reported with their line number).
    """
    vertex_count = None
    edges = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if vertex_count is None:
            if len(fields) != 1:
                raise GraphParseError(line_number, f"expected a vertex count, got {line!r}")
            try:
                vertex_count = int(fields[0])
            except ValueError:
                raise GraphParseError(line_number, f"vertex count is not an integer: {fields[0]!r}") from None
            if vertex_count < 0:
                raise GraphParseError(line_number, f"vertex count must be >= 0, got {vertex_count}")
            continue
        if len(fields) != 2:
            raise GraphParseError(line_number, f"expected an edge 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(line_number, f"edge endpoints are not integers: {line!r}") from None
        if u == v:
            raise GraphParseError(line_number, f"loop at vertex {u} not allowed")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphParseError(line_number, f"endpoint out of range in {line!r}")
        edges.append((u, v))
    if vertex_count is None:
        raise GraphParseError(1, "empty document: no vertex count")
    return Graph.from_edges(vertex_count, edges)


def format_graph(g: Graph) -> str:
    """Serialize a graph in the text format parse_graph reads (edges sorted)."""
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
