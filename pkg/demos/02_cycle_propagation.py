"""
Carrying the cycle space through graph edits
============================================

The generator never re-enumerates cycles from scratch.  Each edit has a
propagation rule turning the old cycle set into the new one, and brute
force is only an oracle.  This script shows the rules agreeing with the
oracle on the prism.
"""

from min3gen import (
    add_edge,
    apply_add_edge,
    apply_flip_edge,
    apply_subdivide_edge,
    canonical_cycle,
    chord_cycle,
    chords,
    enumerate_cycles_bruteforce,
    extract_pattern,
    flip_edge,
    prism,
    subdivide_edge,
)

g = prism()
cycles = enumerate_cycles_bruteforce(g)
print("prism has", len(cycles), "cycles:")
for cyc in sorted(cycles, key=lambda c: (len(c), c)):
    print("  ", cyc)

# Cycles are tuples in canonical rotation: smallest vertex first, then the
# lexicographically smaller direction.
print("\ncanonical form of 5-4-3-0:", canonical_cycle((5, 4, 3, 0)))

# Adding edge 02 chords some cycles; a chord splits its cycle in two.
hexagon = (0, 1, 2, 5, 4, 3)
print("\nchords of", hexagon, "after adding 02:", chords(hexagon, 0, 2))
print("the two halves:", chord_cycle(hexagon, 0, 2))

after_add = apply_add_edge(cycles, 0, 2)
print("propagated cycle count:", len(after_add))
print("matches brute force:", after_add == enumerate_cycles_bruteforce(add_edge(g, 0, 2)))

# Subdividing rung 01 renames both halves of every cycle through 01.
sub, c = subdivide_edge(g, 0, 1)
after_sub = apply_subdivide_edge(cycles, 0, 1, c)
print("\nafter subdividing 01 by", c, ":", len(after_sub), "cycles,",
      "matches brute force:", after_sub == enumerate_cycles_bruteforce(sub))

# A flip is dispatched per cycle by how the cycle meets {ab, bc, c}.  The
# pattern string names that relationship; these are the two standard cases.
print("\npattern of (0,1,5,4,3) at a=1 b=4 c=3:", extract_pattern((0, 1, 5, 4, 3), 1, 4, 3))
print("pattern of (0,1,2,5,4,3) at a=1 b=5 c=3:", extract_pattern((0, 1, 2, 5, 4, 3), 1, 5, 3))

after_flip = apply_flip_edge(after_sub, 3, 0, c)
target = flip_edge(sub, 3, 0, c)
print("\nflip 30 -> 3" + str(c), "propagates", len(after_flip), "cycles,",
      "matches brute force:", after_flip == enumerate_cycles_bruteforce(target))
