import logging
from typing import List
from ..certify.mop import MopCertificate, MopRejection, certify_mop
from ..core.errors import ConstructionError
from ..core.graph_ops import edges_disjoint
from ..core.models import Family

# Set up logging
logger = logging.getLogger(__name__)


def require_mop_family(f: Family, label: str) -> List[MopCertificate]:
    """
    Certify every member and check pairwise disjointness of a constructed family.

    Args:
        f: The freshly constructed family.
        label: Name of the construction, used in error messages.

    Returns:
        The certificates of all members, in member order.
    """
    certificates = []
    for k, g in enumerate(f.graphs()):
        result = certify_mop(g)
        if isinstance(result, MopRejection):
            logger.error(f"{label}: member {k} rejected ({result.reason.value}: {result.detail})")
            raise ConstructionError(f"{label}: member {k} is not maximal outerplanar: {result.detail}")
        certificates.append(result)

    disjointness = edges_disjoint(f)
    if not disjointness.disjoint:
        i, j, edge = disjointness.witness
        raise ConstructionError(f"{label}: members {i} and {j} share edge {edge}")
    return certificates
