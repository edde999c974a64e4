# Input point sets and result documents.
from .points import PointSetDocument, load_document, parse_document
from .results import (
    conic_residuals,
    decimal,
    decimals,
    dumps,
    exact,
    exact_list,
    placement_residuals,
    quadric_residuals,
    read_result,
    translation_residuals,
    write_result,
)

__all__ = [
    "PointSetDocument",
    "conic_residuals",
    "decimal",
    "decimals",
    "dumps",
    "exact",
    "exact_list",
    "load_document",
    "parse_document",
    "placement_residuals",
    "quadric_residuals",
    "read_result",
    "translation_residuals",
    "write_result",
]
