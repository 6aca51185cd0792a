from .lower_bound import BoundReport, BoundVerdict, counting_check, min_vertices
from .gallery import (
    EightVertexCase,
    EightVertexVerdict,
    MaximalityWitness,
    OptimalWitness,
    SeparationWitness,
    eight_vertex_cases,
    k7_minus_e_decomposition,
    maximal_equals_optimal_on_eight,
    maximality_witness_k7e,
    one_planar_separation,
    optimal_ot_graph,
)
from .coloring import chromatic_number_exact, find_k_coloring
