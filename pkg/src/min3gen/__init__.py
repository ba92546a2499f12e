"""Exhaustive isomorph-free generation of minimally 3-connected graphs.

The public surface: the Graph value type with its edit operations, cycle
set maintenance, the 3-compatibility gates, isomorphism certificates, the
two generators, and graph6 plus shelf serialization with independent
connectivity oracles.
"""

from .canonical import are_isomorphic_bruteforce, certificate
from .compat import (
    CompatSet,
    EdgePair,
    VertexEdge,
    VertexTriple,
    has_chording_path,
    is_3_compatible,
    no_chording_paths,
)
from .cycles import (
    Cycle,
    CycleSet,
    PatternError,
    apply_add_edge,
    apply_flip_edge,
    apply_subdivide_edge,
    canonical_cycle,
    chord_cycle,
    chords,
    enumerate_cycles_bruteforce,
    extract_pattern,
)
from .generator import (
    PRISM_CYCLES,
    c1,
    c2,
    c3,
    e1,
    e2,
    generate_cubic,
    generate_min3,
    run_shelf,
)
from .graphs import (
    Edge,
    Graph,
    add_degree3_vertex,
    add_edge,
    bridge_edges,
    bridge_vertex_edge,
    complete_bipartite_3,
    delete_edge,
    delete_vertex,
    edge,
    flip_edge,
    prism,
    split_vertex,
    subdivide_edge,
    wheel,
)
from .io_validate import (
    decode_graph6,
    encode_graph6,
    is_3_connected,
    is_minimally_3_connected,
    load_shelf,
    save_shelf,
    write_outputs,
)
from .records import GeneratedSet, Provenance, Shelf, ShelfEntry

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "CycleSet",
    "CompatSet",
    "Edge",
    "EdgePair",
    "GeneratedSet",
    "Graph",
    "PatternError",
    "PRISM_CYCLES",
    "Provenance",
    "Shelf",
    "ShelfEntry",
    "VertexEdge",
    "VertexTriple",
    "add_degree3_vertex",
    "add_edge",
    "apply_add_edge",
    "apply_flip_edge",
    "apply_subdivide_edge",
    "are_isomorphic_bruteforce",
    "bridge_edges",
    "bridge_vertex_edge",
    "c1",
    "c2",
    "c3",
    "canonical_cycle",
    "certificate",
    "chord_cycle",
    "chords",
    "complete_bipartite_3",
    "decode_graph6",
    "delete_edge",
    "delete_vertex",
    "e1",
    "e2",
    "edge",
    "encode_graph6",
    "enumerate_cycles_bruteforce",
    "extract_pattern",
    "flip_edge",
    "generate_cubic",
    "generate_min3",
    "has_chording_path",
    "is_3_compatible",
    "is_3_connected",
    "is_minimally_3_connected",
    "load_shelf",
    "no_chording_paths",
    "prism",
    "run_shelf",
    "save_shelf",
    "split_vertex",
    "subdivide_edge",
    "wheel",
    "write_outputs",
]
