"""Line graphs with at most two positive eigenvalues, bipartite complements of
line graphs, and the exact machinery to check statements about them."""
from .graph import (Graph, GraphError, complement, complete, complete_bipartite, connected_components,
                    cycle, disjoint_union, empty, induced_subgraph, is_bipartite, is_connected,
                    make_graph, path, standard)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .canon import are_isomorphic, canonical_form, contains_induced, find_induced
from .spectra import (CharPoly, Inertia, Spectrum, char_poly, count_roots_greater,
                      eigenvalues_float, inertia, lambda2_at_most_one, lambda3_nonpositive,
                      min_eigenvalue_at_least, spectrum_symmetric_about_zero)
from .linegraphs import KrauszPartition, is_line_graph, krausz_partitions, line_graph, root_graphs
from .families import (gen_b1, gen_b2, gen_b3, gen_b4, gen_cs1, gen_cs2, gen_cs3,
                       member_theorem1, member_theorem2)

__version__ = "0.1.0"
