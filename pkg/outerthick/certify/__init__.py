from .mop import (
    EdgeClassification,
    MopCertificate,
    MopRejection,
    RejectionReason,
    certify_mop,
    classify_edges,
    cycle_edges,
    find_crossing,
    verify_certificate,
)
from .outerplanar import is_outerplanar_small
from .search import SearchResult, SearchVerdict, outerthickness_exact
