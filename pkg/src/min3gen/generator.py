"""Exhaustive isomorph-free generation of minimally 3-connected graphs.

The pipeline grows graphs from the triangular prism along an infinite
bookshelf of (edge count m, vertex count n) shelves.  Each shelf holds up
to five classes:

- B entries are a minimally 3-connected graph plus one edge (procedure e1);
- C entries add a second edge sharing an endpoint with the first (e2);
- A1 entries split an endpoint of a B entry's added edge (c1);
- A2 entries split the remaining endpoint of an A1 entry's edge (c2);
- A3 entries split the common endpoint of a C entry's two edges (c3).

The splits contract the pending edge additions away, so A1, A2, A3 entries
are minimally 3-connected whenever the chording path gates pass; B and C
are scaffolding for the next shelf.  Certificates deduplicate within a
shelf across all classes.  Every cycle set rides along through the rewrite
rules, so nothing is re-enumerated.

Wheels and K_{3,t} are the minimally 3-connected graphs that no prism-rooted
chain reaches; they are constructed directly and merged into the output.
The cubic mode is separate and far simpler: it bridges every pair of
distinct edges, starting from K4.
"""

from __future__ import annotations

from typing import Callable

from .canonical import certificate
from .compat import no_chording_paths
from .cycles import (
    CycleSet,
    apply_add_edge,
    apply_flip_edge,
    apply_subdivide_edge,
    canonical_cycle,
    enumerate_cycles_bruteforce,
)
from .graphs import Graph, add_edge, bridge_edges, complete_bipartite_3, edge, prism, split_vertex, wheel
from .records import A_TAGS, GeneratedSet, Provenance, Shelf, ShelfEntry

# The 14 cycles of the prism under its fixed labeling, written as closed
# walks and canonicalized on import.  generate_min3 re-checks them against
# the brute-force enumerator before seeding the pipeline.
PRISM_CYCLE_WALKS = (
    "015430",
    "0125430",
    "0152340",
    "0321540",
    "123451",
    "012540",
    "015230",
    "012340",
    "23452",
    "1251",
    "032540",
    "01540",
    "0340",
    "01230",
)
PRISM_CYCLES: CycleSet = frozenset(
    canonical_cycle(tuple(int(ch) for ch in walk[:-1])) for walk in PRISM_CYCLE_WALKS
)

Progress = Callable[[str], None]


def _entry(graph: Graph, cycles: CycleSet, prov: Provenance) -> ShelfEntry:
    return ShelfEntry(graph, cycles, prov, certificate(graph))


def e1(entry: ShelfEntry) -> list[ShelfEntry]:
    """All single edge additions: one class B candidate per non-edge."""
    g, cs = entry.graph, entry.cycles
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                out.append(
                    _entry(
                        add_edge(g, u, v),
                        apply_add_edge(cs, u, v),
                        Provenance("B", ((u, v),)),
                    )
                )
    return out


def e2(entry: ShelfEntry) -> list[ShelfEntry]:
    """Second edge additions sharing an endpoint with the first (class C)."""
    (u, v) = entry.provenance.added_edges[0]
    g, cs = entry.graph, entry.cycles
    out = []
    for w in g.vertices:
        if w != u and not g.has_edge(w, u):
            out.append(
                _entry(
                    add_edge(g, u, w),
                    apply_add_edge(cs, u, w),
                    Provenance("C", ((u, v), edge(u, w))),
                )
            )
        if w != v and not g.has_edge(w, v):
            out.append(
                _entry(
                    add_edge(g, v, w),
                    apply_add_edge(cs, v, w),
                    Provenance("C", ((u, v), edge(v, w))),
                )
            )
    return out


def _split_and_propagate(
    g: Graph,
    cs: CycleSet,
    split_v: int,
    kept: int,
    moved: int,
) -> tuple[Graph, CycleSet, int]:
    """Split split_v so the new vertex takes the edges to kept and moved.

    Cycle propagation views this as subdividing the edge (split_v, kept)
    with the new vertex, then flipping the edge (moved, split_v) to
    (moved, new vertex).
    """
    g2, x = split_vertex(g, split_v, kept, moved)
    cs2 = apply_subdivide_edge(cs, split_v, kept, x)
    cs3 = apply_flip_edge(cs2, moved, split_v, x)
    return g2, cs3, x


def c1(entry: ShelfEntry) -> list[ShelfEntry]:
    """Split either endpoint of a B entry's added edge (class A1).

    With added edge bc and a neighbour a of b, the gate requires no
    chording ca- or bc-path once bc and ba are deleted; then b is split so
    the new vertex takes c and a.  The symmetric half splits c instead.
    """
    (b, c) = entry.provenance.added_edges[0]
    g, cs = entry.graph, entry.cycles
    out = []
    for split_v, kept in ((b, c), (c, b)):
        for moved in g.neighbors(split_v):
            if moved == kept:
                continue
            ok = no_chording_paths(
                cs,
                g,
                ((kept, moved), (split_v, kept)),
                (edge(split_v, kept), edge(split_v, moved)),
            )
            if ok:
                g2, cs3, x = _split_and_propagate(g, cs, split_v, kept, moved)
                prov = Provenance("A1", ((b, c),), ((x, edge(split_v, x)),))
                out.append(_entry(g2, cs3, prov))
    return out


def _a1_frame(entry: ShelfEntry) -> tuple[int, int, int, int]:
    """Recover (c, b, d, y) from an A1 entry.

    y is the vertex the first split created, c the vertex it split off
    from, b the surviving endpoint of the added edge, d the neighbour the
    split pulled over.  N(y) is exactly {c, b, d}.
    """
    (y, split_edge) = entry.provenance.splits[0]
    c = split_edge[0] if split_edge[1] == y else split_edge[1]
    added = entry.provenance.added_edges[0]
    if c not in added:
        raise RuntimeError(f"split vertex {c} not on added edge {added}")
    b = added[0] if added[1] == c else added[1]
    rest = set(entry.graph.neighbors(y)) - {b, c}
    if len(rest) != 1:
        raise RuntimeError(f"new vertex {y} should have one loose neighbour, got {rest}")
    return c, b, rest.pop(), y


def c2(entry: ShelfEntry) -> list[ShelfEntry]:
    """Split the surviving endpoint of an A1 entry's edge (class A2).

    In the recovered frame the new vertex y is adjacent to c, b, d.  The
    first loop pairs each remaining neighbour a of b with y itself; the
    second pairs two distinct remaining neighbours a, k of b.  Both delete
    the edges {ab, by, cy, dy} for their gates.
    """
    c, b, d, y = _a1_frame(entry)
    g, cs = entry.graph, entry.cycles
    banned = (edge(b, y), edge(c, y), edge(d, y))
    candidates = [w for w in g.neighbors(b) if w not in (c, d, y)]
    out = []
    for a in candidates:
        x_edges = (edge(a, b),) + banned
        if no_chording_paths(cs, g, ((c, a), (c, b), (d, b), (d, a)), x_edges):
            g2, cs3, x = _split_and_propagate(g, cs, b, y, a)
            prov = Provenance(
                "A2",
                entry.provenance.added_edges,
                entry.provenance.splits + ((x, edge(b, x)),),
            )
            out.append(_entry(g2, cs3, prov))
    for a in candidates:
        x_edges = (edge(a, b),) + banned
        for k in candidates:
            if k == a:
                continue
            if no_chording_paths(cs, g, ((k, a), (k, b)), x_edges):
                g2, cs3, x = _split_and_propagate(g, cs, b, k, a)
                prov = Provenance(
                    "A2",
                    entry.provenance.added_edges,
                    entry.provenance.splits + ((x, edge(b, x)),),
                )
                out.append(_entry(g2, cs3, prov))
    return out


def c3(entry: ShelfEntry) -> list[ShelfEntry]:
    """Split the shared endpoint of a C entry's two added edges (class A3)."""
    (e1_edge, e2_edge) = entry.provenance.added_edges
    shared = set(e1_edge) & set(e2_edge)
    if len(shared) != 1:
        raise RuntimeError(f"C entry edges {e1_edge}, {e2_edge} must share one endpoint")
    x_v = shared.pop()
    y_v = e1_edge[0] if e1_edge[1] == x_v else e1_edge[1]
    z_v = e2_edge[0] if e2_edge[1] == x_v else e2_edge[1]
    g, cs = entry.graph, entry.cycles
    out = []
    gate = no_chording_paths(
        cs,
        g,
        ((x_v, y_v), (x_v, z_v), (y_v, z_v)),
        (edge(x_v, y_v), edge(x_v, z_v)),
    )
    if gate:
        g2, cs3, w = _split_and_propagate(g, cs, x_v, z_v, y_v)
        prov = Provenance(
            "A3",
            entry.provenance.added_edges,
            ((w, edge(x_v, w)),),
        )
        out.append(_entry(g2, cs3, prov))
    return out


def run_shelf(
    state: dict[tuple[int, int], Shelf],
    m: int,
    n: int,
    produce_intermediates: bool = True,
) -> Shelf:
    """Produce the shelf at (m, n) from the shelves it depends on.

    Classes are filled in the order C, B, A1, A2, A3.  One certificate
    store spans the whole shelf, so a graph reached twice, by whatever
    chain, is kept once.  Sources the state does not hold contribute
    nothing.  When produce_intermediates is false the B and C classes are
    skipped; that is only sound on the final column, where nothing consumes
    them.
    """
    shelf = Shelf(m, n, {}, set())

    def admit(tag: str, candidates: list[ShelfEntry]) -> None:
        for cand in candidates:
            if cand.cert not in shelf.cert_store:
                shelf.cert_store.add(cand.cert)
                shelf.classes.setdefault(tag, []).append(cand)

    def source(key: tuple[int, int], *tags: str) -> list[ShelfEntry]:
        src = state.get(key)
        return src.entries(*tags) if src is not None else []

    same_col = (m - 1, n)
    diag = (m - 1, n - 1)
    if produce_intermediates:
        for ent in source(same_col, "B"):
            admit("C", e2(ent))
        for ent in source(same_col, *A_TAGS):
            admit("B", e1(ent))
    for ent in source(diag, "B"):
        admit("A1", c1(ent))
    for ent in source(diag, "A1"):
        admit("A2", c2(ent))
    for ent in source(diag, "C"):
        admit("A3", c3(ent))
    for bucket in shelf.classes.values():
        bucket.sort(key=lambda e: e.cert)
    shelf.cert_store = None
    return shelf


def _merge_exceptional(groups: dict, n: int, m: int, g: Graph) -> None:
    cert = certificate(g)
    bucket = groups.setdefault((n, m), [])
    if any(c == cert for c, _ in bucket):
        raise RuntimeError(f"exceptional graph at n={n} m={m} collided with pipeline output")
    bucket.append((cert, g))


def generate_min3(
    max_n: int,
    *,
    emit_intermediate: bool = False,
    keep_shelves: bool = False,
    progress: Progress | None = None,
    shelf_loader: Callable[[int, int], Shelf | None] | None = None,
    shelf_saver: Callable[[Shelf], None] | None = None,
) -> GeneratedSet:
    """All minimally 3-connected graphs with 6 to max_n vertices.

    Walks shelves column by column (n outer, m from n+4 to 3n-7), keeping
    one column of history.  Results arrive as (n, m) groups of
    certificate-sorted graphs: the shelf classes A1, A2, A3, the prism
    seed, and the two direct families, wheels and K_{3,t}.

    shelf_loader, when given, may supply a previously saved shelf instead
    of recomputing it; shelf_saver receives every newly computed shelf.
    keep_shelves retains the whole pipeline on the result for inspection.
    """
    if max_n < 6:
        raise ValueError("max_n must be at least 6")
    seed_graph = prism()
    if enumerate_cycles_bruteforce(seed_graph) != PRISM_CYCLES:
        raise RuntimeError("prism cycle table failed its brute-force check")
    seed_entry = ShelfEntry(seed_graph, PRISM_CYCLES, Provenance("A0"), certificate(seed_graph))
    seed = Shelf(9, 6, {"A0": [seed_entry]})
    state: dict[tuple[int, int], Shelf] = {(9, 6): seed}
    kept: dict[tuple[int, int], Shelf] | None = {(9, 6): seed} if keep_shelves else None
    groups: dict[tuple[int, int], list[tuple[bytes, Graph]]] = {
        (6, 9): [(seed_entry.cert, seed_graph)]
    }
    for n in range(6, max_n + 1):
        produce_bc = n < max_n or emit_intermediate or keep_shelves or shelf_saver is not None
        for m in range(n + 4, 3 * n - 6):
            shelf = shelf_loader(m, n) if shelf_loader is not None else None
            if shelf is None:
                shelf = run_shelf(state, m, n, produce_intermediates=produce_bc)
                if shelf_saver is not None:
                    shelf_saver(shelf)
            state[(m, n)] = shelf
            if kept is not None:
                kept[(m, n)] = shelf
            for tag in ("A1", "A2", "A3"):
                entries = shelf.classes.get(tag)
                if entries:
                    groups.setdefault((n, m), []).extend((e.cert, e.graph) for e in entries)
            if progress is not None:
                sizes = " ".join(
                    f"{tag}={len(shelf.classes.get(tag, ()))}" for tag in ("B", "C", "A1", "A2", "A3")
                )
                progress(f"min3 shelf n={n} m={m}: {sizes}")
        for key in [k for k in state if k[1] < n]:
            del state[key]
    for n in range(6, max_n + 1):
        _merge_exceptional(groups, n, 2 * (n - 1), wheel(n - 1))
        _merge_exceptional(groups, n, 3 * n - 9, complete_bipartite_3(n - 3))
    for bucket in groups.values():
        bucket.sort()
    return GeneratedSet("min3", dict(sorted(groups.items())), kept)


def generate_cubic(max_n: int, *, progress: Progress | None = None) -> GeneratedSet:
    """All 3-connected cubic graphs with 4 to max_n (even) vertices.

    Starting from K4, every unordered pair of distinct edges (adjacent
    pairs included) is bridged: both edges are subdivided and the two new
    vertices joined.  Certificates deduplicate each level.  Cycle sets are
    not needed here, so none are carried.
    """
    if max_n < 4:
        raise ValueError("max_n must be at least 4")
    if max_n % 2:
        raise ValueError("cubic graphs need an even vertex count")
    k4 = wheel(3)
    levels: dict[int, list[tuple[bytes, Graph]]] = {4: [(certificate(k4), k4)]}
    for n in range(6, max_n + 1, 2):
        store: set[bytes] = set()
        grown: list[tuple[bytes, Graph]] = []
        for _, g in levels[n - 2]:
            es = g.edges()
            for i in range(len(es)):
                for j in range(i + 1, len(es)):
                    h, _, _ = bridge_edges(g, es[i], es[j])
                    cert = certificate(h)
                    if cert not in store:
                        store.add(cert)
                        grown.append((cert, h))
        grown.sort()
        levels[n] = grown
        if progress is not None:
            progress(f"cubic n={n}: {len(grown)} graphs")
    return GeneratedSet("cubic", {(n, 3 * n // 2): bucket for n, bucket in levels.items()})
