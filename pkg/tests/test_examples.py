import os
import sys
import logging
from dotenv import load_dotenv

# Add the parent directory to the path so we can import the outerthick package
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from outerthick.bounds.gallery import k7_minus_e_decomposition, optimal_ot_graph
from outerthick.constructions.doubling import doubling_family
from outerthick.constructions.extension import extend_to
from outerthick.constructions.gn import gn_family
from outerthick.flow import VerificationGraph
from outerthick.formats.family_file import emit_family, parse_family

# Load environment variables
load_dotenv()

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def test_example_families():
    """
    Run the verification pipeline on the example families: both
    constructions, their extensions and the K7 minus an edge decomposition.
    """
    verifier = VerificationGraph()

    examples = [
        ("gn t=2", gn_family(2), False),
        ("gn t=5", gn_family(5), False),
        ("doubling s=0", doubling_family(0), False),
        ("doubling s=3", doubling_family(3), False),
        ("gn t=3 extended to 20", extend_to(gn_family(3), 20), False),
        ("doubling s=1 extended to 13", extend_to(doubling_family(1), 13), False),
        ("optimal t=4 n=21", optimal_ot_graph(4, 21).family, False),
        ("K7-e", k7_minus_e_decomposition(), True),
    ]

    for i, (name, family, allow_nonmaximal) in enumerate(examples):
        logger.info(f"--- Example {i + 1}: {name} ---")

        # Families survive the text format unchanged
        assert parse_family(emit_family(family)) == family

        report = verifier.verify(family, allow_nonmaximal=allow_nonmaximal)

        logger.info(f"Members: {report.t}, order: {report.n}, mode: {report.mode.value}")
        logger.info(f"Union edges: {report.union_edge_count}, missing pairs: {report.missing_pair_count}")
        logger.info(f"Valid: {report.valid}")

        if not report.valid:
            logger.error(f"Errors: {report.errors}")
        assert report.valid, name


if __name__ == "__main__":
    test_example_families()
