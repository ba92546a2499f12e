"""
Chording paths and the 3-compatibility gates
============================================

A Dawes operation preserves minimal 3-connectivity exactly when its input
set is 3-compatible, a condition phrased entirely in terms of chording
paths.  The gates let the generator test a candidate on the small graph
instead of building and oracle-checking the big one.
"""

from min3gen import (
    EdgePair,
    VertexEdge,
    VertexTriple,
    add_degree3_vertex,
    add_edge,
    bridge_edges,
    complete_bipartite_3,
    bridge_vertex_edge,
    enumerate_cycles_bruteforce,
    has_chording_path,
    is_3_compatible,
    is_minimally_3_connected,
    prism,
    wheel,
)

# A chording path contains a chord of some cycle and meets that cycle only
# at the chord's endpoints.  In prism + 02 the square (0,2,4,3) gains the
# chord 34's mate: 3 and 5 are joined through paths avoiding the square.
g = add_edge(prism(), 0, 2)
cycles = enumerate_cycles_bruteforce(g)
print("prism+02: chording path between 3 and 5:", has_chording_path(cycles, g, 3, 5))

# Banned edges model "after this edge is deleted" without rebuilding.
print("same query with edge 01 banned:", has_chording_path(cycles, g, 3, 5, banned=((0, 1),)))

# Gate shape 1: {x, ab} guards bridging vertex x to edge ab (operation D1).
k4 = wheel(3)
k4_cycles = enumerate_cycles_bruteforce(k4)
s = VertexEdge(3, (0, 1))
print("\nK4, {3, 01} 3-compatible:", is_3_compatible(k4_cycles, k4, s))
bridged, y = bridge_vertex_edge(k4, 3, 0, 1)
print("D1 result is minimally 3-connected:", is_minimally_3_connected(bridged))

# Gate shape 2: {ab, cd} guards bridging two edges (operation D2).
pr = prism()
pr_cycles = enumerate_cycles_bruteforce(pr)
pair = EdgePair((0, 1), (4, 5))
print("\nprism, {01, 45} 3-compatible:", is_3_compatible(pr_cycles, pr, pair))
bridged2, x, y = bridge_edges(pr, (0, 1), (4, 5))
print("D2 result is minimally 3-connected:", is_minimally_3_connected(bridged2))

# Gate shape 3: {x, y, z} guards attaching a new degree-3 vertex (D3).
# One side of K_{3,3} is compatible, and attaching there gives K_{3,4}.
k33 = complete_bipartite_3(3)
k33_cycles = enumerate_cycles_bruteforce(k33)
triple = VertexTriple(0, 1, 2)
print("\nK33, {0, 1, 2} 3-compatible:", is_3_compatible(k33_cycles, k33, triple))
attached, w = add_degree3_vertex(k33, 0, 1, 2)
print("D3 result is minimally 3-connected:", is_minimally_3_connected(attached))

# The gate verdict always matches the oracle on the applied result.  Scan
# every D1 candidate on W4: each compatible set gives a minimally
# 3-connected bridge, each incompatible set does not.
w4 = wheel(4)
w4_cycles = enumerate_cycles_bruteforce(w4)
agree = total = 0
for a, b in w4.edges():
    for x in w4.vertices:
        if x in (a, b):
            continue
        verdict = is_3_compatible(w4_cycles, w4, VertexEdge(x, (a, b)))
        result, _ = bridge_vertex_edge(w4, x, a, b)
        agree += verdict == is_minimally_3_connected(result)
        total += 1
print(f"\nW4 D1 candidates: gate agrees with oracle on {agree}/{total}")
