import os
from typing import Dict, Optional
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError
from ..core.errors import ConfigError

# Load environment variables
load_dotenv()

# Single variable overriding the desk-scale budgets, e.g.
#   OUTERTHICK_BUDGETS="oracle_max_n=24,search_node_cap=1000000"
BUDGETS_ENV_VAR = "OUTERTHICK_BUDGETS"


class Budgets(BaseModel):
    """Size caps for the exhaustive oracles and constructions."""
    oracle_max_n: int = Field(default=32, ge=1, description="Largest order accepted by is_outerplanar_small")
    search_max_n: int = Field(default=10, ge=1, description="Largest order accepted by outerthickness_exact")
    search_max_m: int = Field(default=24, ge=0, description="Largest edge count accepted by outerthickness_exact")
    search_node_cap: int = Field(default=20_000_000, ge=1, description="Node cap for exhaustive searches")
    color_max_n: int = Field(default=12, ge=1, description="Largest order accepted by chromatic_number_exact")
    doubling_max_s: int = Field(default=7, ge=0, description="Largest level accepted by doubling_family")


class CliConfig(BaseModel):
    """Settings shared by every CLI subcommand."""
    budgets: Budgets = Field(default_factory=Budgets)
    strict: bool = Field(default=False, description="Verify every intermediate family during extension")
    strict_format: bool = Field(default=False, description="Reject unsorted or unordered edges in family files")
    output_format: str = Field(default="text", description="text or json for reports; edgelist, graph6 or dot for export")
    output_path: Optional[str] = Field(default=None, description="Write the artifact here instead of stdout")


def parse_budget_overrides(text: str) -> Dict[str, int]:
    """
    Parse a `key=value,key=value` budget string.

    Args:
        text: The override string; empty means no overrides.

    Returns:
        The overrides as a dictionary of integers.
    """
    overrides: Dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in Budgets.model_fields:
            raise ConfigError(f"unknown budget setting: {item!r}")
        try:
            overrides[key] = int(value.strip())
        except ValueError:
            raise ConfigError(f"budget {key} needs an integer value, got {value.strip()!r}") from None
    return overrides


def get_budgets(overrides: Optional[str] = None) -> Budgets:
    """
    Resolve budgets from defaults, the environment and an optional override string.

    The override string (from the CLI) wins over OUTERTHICK_BUDGETS.
    """
    values = parse_budget_overrides(os.getenv(BUDGETS_ENV_VAR, ""))
    if overrides:
        values.update(parse_budget_overrides(overrides))
    try:
        return Budgets(**values)
    except ValidationError as e:
        raise ConfigError(f"invalid budgets: {e.errors()[0]['msg']}") from None
