"""Numerical semigroups, row-factorization matrices and almost symmetric censuses."""

from .configenum import ZeroConfig, count_configs, enumerate_configs
from .core import GapProfile, NumericalSemigroup, from_generators, parse_generators
from .rfmatrix import (
    LambdaTable,
    PairPropertyReport,
    PFClassification,
    RFMatrix,
    classify_pf,
    factorizations,
    lambda_table,
    pair_report,
    rf_matrices,
    shared_positive_rows,
    zero_configuration,
)

__all__ = [
    "GapProfile",
    "LambdaTable",
    "NumericalSemigroup",
    "PFClassification",
    "PairPropertyReport",
    "RFMatrix",
    "ZeroConfig",
    "classify_pf",
    "count_configs",
    "enumerate_configs",
    "factorizations",
    "from_generators",
    "lambda_table",
    "pair_report",
    "parse_generators",
    "rf_matrices",
    "shared_positive_rows",
    "zero_configuration",
]
