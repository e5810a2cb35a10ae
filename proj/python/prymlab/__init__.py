"""Exact Prym representation and cover analysis."""

from ._core import (
    SchemaError,
    StageError,
    action_matrix,
    catalog_names,
    cover_rank,
    hyperbolicity_index,
    quaternion_is_division,
    report_to_text,
    run_job,
)

__all__ = [
    "SchemaError",
    "StageError",
    "action_matrix",
    "catalog_names",
    "cover_rank",
    "hyperbolicity_index",
    "quaternion_is_division",
    "report_to_text",
    "run_job",
]

__version__ = "0.1.0"
