from .gn import GnParameters, arc, gn_family, gn_graph, graph_zero, missing_matching
from .doubling import (
    StarGraph,
    Variant,
    base_family,
    check_claim1,
    check_claim2,
    double_graph,
    doubling_family,
    doubling_stars,
    figure_order,
    target_graph,
)
from .extension import ExtensionPlan, extend_family, extend_to, plan_extension
