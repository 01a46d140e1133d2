"""High utility-occupancy pattern mining under length constraints."""

from .database import (
    MiningParams,
    Pattern,
    RevisedDatabase,
    TotalOrder,
    Transaction,
    TransactionDatabase,
    build_database,
    build_total_order,
    compute_tu,
    min_support_count,
    revise_database,
    support_counts,
)
from .io import (
    GeneratorSpec,
    generate_synthetic,
    parse_quantity_profit,
    parse_spmf_utility,
    write_quantity_profit,
    write_results,
    write_spmf_utility,
    write_stats_csv,
)
from .lists import FUOTable, PatternNode, UONList, UOTuple, build_initial_nodes, construct
from .oracle import OracleConfig, brute_force_mine, enumerate_supported
from .search import (
    HUOPResult,
    SearchStats,
    length_upper_bound,
    mine,
    search_subtree,
    unconstrained_maxlen,
)

__version__ = "0.1.0"

__all__ = [
    "FUOTable",
    "GeneratorSpec",
    "HUOPResult",
    "MiningParams",
    "OracleConfig",
    "Pattern",
    "PatternNode",
    "RevisedDatabase",
    "SearchStats",
    "TotalOrder",
    "Transaction",
    "TransactionDatabase",
    "UONList",
    "UOTuple",
    "brute_force_mine",
    "build_database",
    "build_initial_nodes",
    "build_total_order",
    "compute_tu",
    "construct",
    "enumerate_supported",
    "generate_synthetic",
    "length_upper_bound",
    "min_support_count",
    "mine",
    "parse_quantity_profit",
    "parse_spmf_utility",
    "revise_database",
    "search_subtree",
    "support_counts",
    "unconstrained_maxlen",
    "write_quantity_profit",
    "write_results",
    "write_spmf_utility",
    "write_stats_csv",
]
