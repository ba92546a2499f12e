"""Simple undirected graphs as immutable values.

Vertices are dense integers 0..n-1.  Adjacency is stored as one bitmask per
vertex (bit u of mask v is set when uv is an edge), which keeps copies and
neighbourhood queries cheap at the scales this package targets.  Every edit
returns a fresh Graph; nothing here mutates in place, so graph values can be
shared freely between pipeline stages.

The atomic edits (edge addition, edge subdivision, vertex split, edge flip)
are the building blocks of the generator.  The composite operations
(bridging a vertex and an edge, bridging two edges, adding a degree 3
vertex) are provided for the cubic generation mode and for validation
against the one-shot definitions.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalized edge key with endpoints in increasing order."""
    return (u, v) if u < v else (v, u)


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with value semantics.

    Equality and hashing are by labeled adjacency, so two Graph values
    compare equal exactly when they have the same vertex count and the same
    edge set.
    """

    __slots__ = ("_adj",)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(masks)

    @classmethod
    def _from_masks(cls, masks: Iterable[int]) -> "Graph":
        # Trusted constructor: callers guarantee symmetry and no loops.
        g = object.__new__(cls)
        g._adj = tuple(masks)
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self._adj) // 2

    @property
    def vertices(self) -> range:
        return range(len(self._adj))

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, in increasing order."""
        out = []
        for u, mask in enumerate(self._adj):
            out.extend((u, v) for v in _bits(mask >> (u + 1) << (u + 1)))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbor_mask(self, v: int) -> int:
        """Adjacency row of v as a bitmask (internal representation)."""
        return self._adj[v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


def mask_reachable(masks: list[int], start: int, target: int, forbidden: int) -> bool:
    """Is target reachable from start over bitmask adjacency rows,
    avoiding the forbidden vertex set?  Start and target must not be
    forbidden themselves."""
    if start == target:
        return True
    tbit = 1 << target
    frontier = 1 << start
    block = forbidden | frontier
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= masks[low.bit_length() - 1]
        if nxt & tbit:
            return True
        nxt &= ~block
        block |= nxt
        frontier = nxt
    return False


def _require_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return g + uv.  Rejects loops and parallel edges."""
    _require_vertex(g, u)
    _require_vertex(g, v)
    if u == v:
        raise ValueError(f"cannot add loop at vertex {u}")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    masks = list(g._adj)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph._from_masks(masks)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Return g - uv.  Both end vertices remain."""
    _require_vertex(g, u)
    _require_vertex(g, v)
    if u == v or not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    masks = list(g._adj)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph._from_masks(masks)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and its edges; vertices above v shift down to stay dense."""
    _require_vertex(g, v)
    low = (1 << v) - 1
    out = []
    for w in range(g.n):
        if w == v:
            continue
        mask = g._adj[w] & ~(1 << v)
        out.append((mask & low) | (mask >> (v + 1) << v))
    return Graph._from_masks(out)


def subdivide_edge(g: Graph, a: int, b: int) -> tuple[Graph, int]:
    """Replace edge ab by the path a, c, b through a new vertex c = n."""
    _require_vertex(g, a)
    _require_vertex(g, b)
    if a == b or not g.has_edge(a, b):
        raise ValueError(f"edge ({a},{b}) not present")
    c = g.n
    masks = list(g._adj)
    masks[a] = (masks[a] & ~(1 << b)) | (1 << c)
    masks[b] = (masks[b] & ~(1 << a)) | (1 << c)
    masks.append((1 << a) | (1 << b))
    return Graph._from_masks(masks), c


def split_vertex(g: Graph, v: int, u: int, w: int) -> tuple[Graph, int]:
    """Split v: a new vertex v' = n takes over the edges vu and vw.

    Edges vu and vw are replaced by v'u and v'w, and the edge vv' is added,
    so v' has degree exactly 3.  Requires deg(v) >= 3 so that v keeps
    degree >= 2 (the stronger deg >= 4 condition that preserves
    3-connectivity is the caller's business).
    """
    _require_vertex(g, v)
    _require_vertex(g, u)
    _require_vertex(g, w)
    if u == w:
        raise ValueError("split targets must be distinct")
    if not g.has_edge(v, u):
        raise ValueError(f"edge ({v},{u}) not present")
    if not g.has_edge(v, w):
        raise ValueError(f"edge ({v},{w}) not present")
    if g.degree(v) < 3:
        raise ValueError(f"vertex {v} has degree {g.degree(v)} < 3")
    vp = g.n
    masks = list(g._adj)
    masks[v] = (masks[v] & ~((1 << u) | (1 << w))) | (1 << vp)
    masks[u] = (masks[u] & ~(1 << v)) | (1 << vp)
    masks[w] = (masks[w] & ~(1 << v)) | (1 << vp)
    masks.append((1 << v) | (1 << u) | (1 << w))
    return Graph._from_masks(masks), vp


def flip_edge(g: Graph, a: int, b: int, c: int) -> Graph:
    """Return (g - ab) + ac.  Requires edges ab and bc and non-edge ac."""
    _require_vertex(g, a)
    _require_vertex(g, b)
    _require_vertex(g, c)
    if len({a, b, c}) != 3:
        raise ValueError("flip vertices must be distinct")
    if not g.has_edge(a, b):
        raise ValueError(f"edge ({a},{b}) not present")
    if not g.has_edge(b, c):
        raise ValueError(f"edge ({b},{c}) not present")
    if g.has_edge(a, c):
        raise ValueError(f"edge ({a},{c}) already present")
    masks = list(g._adj)
    masks[a] = (masks[a] & ~(1 << b)) | (1 << c)
    masks[b] &= ~(1 << a)
    masks[c] |= 1 << a
    return Graph._from_masks(masks)


def prism() -> Graph:
    """The triangular prism with the fixed labeling used throughout.

    Triangles {0,3,4} and {1,2,5}, joined by the rungs 01, 23, 45.  This is
    the generation seed; its 14 cycles are hard-coded next to the generator
    and re-checked against brute force at startup.
    """
    return Graph(
        6,
        [(0, 3), (3, 4), (0, 4), (1, 2), (2, 5), (1, 5), (0, 1), (2, 3), (4, 5)],
    )


def wheel(k: int) -> Graph:
    """Wheel with k rim vertices 0..k-1 and hub k (k+1 vertices, 2k edges)."""
    if k < 3:
        raise ValueError("wheel needs at least 3 rim vertices")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges.extend((i, k) for i in range(k))
    return Graph(k + 1, edges)


def complete_bipartite_3(t: int) -> Graph:
    """K_{3,t}: small class {0,1,2}, large class {3,...,t+2}."""
    if t < 3:
        raise ValueError("complete_bipartite_3 needs t >= 3")
    return Graph(3 + t, [(i, 3 + j) for i in range(3) for j in range(t)])


def bridge_vertex_edge(g: Graph, x: int, a: int, b: int) -> tuple[Graph, int]:
    """Bridge vertex x and edge ab: subdivide ab by y, add xy.

    This is operation D1 as a single graph edit (the generator reaches the
    same graphs through an edge addition and a vertex split).
    """
    if x == a or x == b:
        raise ValueError("bridge vertex must avoid the edge endpoints")
    g2, y = subdivide_edge(g, a, b)
    return add_edge(g2, x, y), y


def bridge_edges(g: Graph, e1: Edge, e2: Edge) -> tuple[Graph, int, int]:
    """Bridge two distinct edges: subdivide both, join the new vertices.

    This is operation D2 as a single graph edit; it is also the expansion
    step of the cubic generation mode.  Adjacent edge pairs are allowed.
    """
    if edge(*e1) == edge(*e2):
        raise ValueError("bridged edges must be distinct")
    g2, x = subdivide_edge(g, *e1)
    g3, y = subdivide_edge(g2, *e2)
    return add_edge(g3, x, y), x, y


def add_degree3_vertex(g: Graph, x: int, y: int, z: int) -> tuple[Graph, int]:
    """Join a new vertex w to three distinct existing vertices (operation D3)."""
    if len({x, y, z}) != 3:
        raise ValueError("attachment vertices must be distinct")
    for v in (x, y, z):
        _require_vertex(g, v)
    w = g.n
    masks = list(g._adj)
    masks[x] |= 1 << w
    masks[y] |= 1 << w
    masks[z] |= 1 << w
    masks.append((1 << x) | (1 << y) | (1 << z))
    return Graph._from_masks(masks), w
