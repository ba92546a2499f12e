"""Shared test utilities: random graphs and definition-level oracles.

The oracles here re-derive connectivity and chording paths straight from
their definitions with plain set arithmetic, sharing no bitmask machinery
with the package, so that agreement between the two is meaningful.
"""

from __future__ import annotations

import itertools
import random

from min3gen import Graph, chords, edge


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi graph on vertex set 0..n-1."""
    es = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, es)


def permuted_copy(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def cube_graph() -> Graph:
    es = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                es.append((v, w))
    return Graph(8, es)


def _components(adj: dict[int, set[int]], vertices: set[int]) -> int:
    unseen = set(vertices)
    count = 0
    while unseen:
        count += 1
        stack = [unseen.pop()]
        while stack:
            v = stack.pop()
            for w in adj[v] & unseen:
                unseen.discard(w)
                stack.append(w)
    return count


def _is_connected_without(g: Graph, removed: set[int]) -> bool:
    vertices = set(g.vertices) - removed
    if not vertices:
        return True
    adj = {v: set(g.neighbors(v)) - removed for v in vertices}
    return _components(adj, vertices) == 1


def def_3_connected(g: Graph) -> bool:
    """Literal definition: n >= 4 and no vertex cut of size <= 2."""
    if g.n < 4:
        return False
    for k in (0, 1, 2):
        for cut in itertools.combinations(g.vertices, k):
            if not _is_connected_without(g, set(cut)):
                return False
    return True


def def_minimally_3_connected(g: Graph) -> bool:
    if not def_3_connected(g):
        return False
    for u, v in g.edges():
        kept = [e for e in g.edges() if e != (u, v)]
        if def_3_connected(Graph(g.n, kept)):
            return False
    return True


def def_2_connected(g: Graph) -> bool:
    if g.n < 3:
        return False
    for k in (0, 1):
        for cut in itertools.combinations(g.vertices, k):
            if not _is_connected_without(g, set(cut)):
                return False
    return True


def chording_path_oracle(g: Graph, cycles, a: int, b: int, banned=()) -> bool:
    """Exhaustive scan: some simple a..b path contains a chord uv of some
    surviving cycle and meets that cycle in exactly {u, v}.

    Banned edges are removed from the graph first; cycles that used them
    are no longer cycles and drop out of consideration.
    """
    banned_set = {edge(u, v) for u, v in banned}
    adj = {
        v: [w for w in g.neighbors(v) if edge(v, w) not in banned_set]
        for v in g.vertices
    }
    live = []
    for cyc in cycles:
        k = len(cyc)
        if all(edge(cyc[i], cyc[(i + 1) % k]) not in banned_set for i in range(k)):
            live.append(cyc)

    def path_hits(path: list[int]) -> bool:
        pv = set(path)
        path_edges = {edge(path[i], path[i + 1]) for i in range(len(path) - 1)}
        for cyc in live:
            cv = set(cyc)
            for u, w in itertools.combinations(cyc, 2):
                if edge(u, w) in path_edges and chords(cyc, u, w) and pv & cv == {u, w}:
                    return True
        return False

    found = False

    def walk(path: list[int], seen: set[int]) -> None:
        nonlocal found
        if found:
            return
        v = path[-1]
        if v == b:
            if len(path) >= 2 and path_hits(path):
                found = True
            return
        for w in adj[v]:
            if w not in seen:
                walk(path + [w], seen | {w})
                if found:
                    return

    walk([a], {a})
    return found
