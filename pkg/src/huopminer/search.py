"""Depth-first pattern search with support gating and a length-aware bound.

The search walks the set-enumeration tree induced by the mining order.
At every node it reads the summary table: infrequent nodes stop the walk
outright (support is anti-monotone), qualifying nodes are reported, and a
node's subtree is explored only when :func:`length_upper_bound` says some
extension could still reach the occupancy threshold.  Occupancy itself is
never used to prune, it is not anti-monotone.

``maxlen`` is enforced purely by the recursion depth guard (a subtree is
entered only while its patterns can stay within the cap) together with
the capped ``luo`` lists, which make the bound aware of how few items a
pattern may still absorb.  ``minlen`` only filters what is reported,
short prefixes are always explored.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .database import (
    MiningParams,
    Pattern,
    TransactionDatabase,
    build_total_order,
    min_support_count,
    revise_database,
    support_counts,
)
from .lists import PatternNode, UONList, build_initial_nodes, construct


@dataclass(frozen=True)
class HUOPResult:
    """One reported pattern with its support count and mean occupancy."""

    pattern: Pattern
    sup: int
    uo: float


@dataclass
class SearchStats:
    """Counters describing one mining run.

    ``visited_nodes`` counts every node whose summary table the search
    reads, the initial single items included.  ``constructions`` counts
    join attempts, ``early_aborts`` the joins that bailed out on the
    support bound, ``lub_prunes`` the subtrees cut by the length-aware
    bound and ``support_prunes`` the nodes dropped by the support gate.
    """

    visited_nodes: int = 0
    constructions: int = 0
    lub_prunes: int = 0
    support_prunes: int = 0
    early_aborts: int = 0
    runtime_ms: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.visited_nodes += other.visited_nodes
        self.constructions += other.constructions
        self.lub_prunes += other.lub_prunes
        self.support_prunes += other.support_prunes
        self.early_aborts += other.early_aborts


def length_upper_bound(uonl: UONList, min_sup_count: int) -> float:
    """Upper bound on the mean occupancy of any extension reachable from
    this node under the length cap its ``luo`` lists were built for.

    Per supporting transaction the pattern's own share plus everything
    an extension could still absorb is ``uo + sum(luo)``; any frequent
    extension is supported by at least ``min_sup_count`` of these
    transactions, so the mean of the ``min_sup_count`` largest such
    values bounds its occupancy.
    """
    values = sorted((t.uo + sum(t.luo) for t in uonl.tuples), reverse=True)
    return sum(values[:min_sup_count]) / min_sup_count


def _process_node(
    prefix: PatternNode | None,
    exten: list[PatternNode],
    pos: int,
    params: MiningParams,
    min_sc: int,
    results: list[HUOPResult],
    stats: SearchStats,
    bound_log: list[tuple[Pattern, float]] | None,
    trim_to: int | None,
) -> None:
    xa = exten[pos]
    stats.visited_nodes += 1
    if xa.fuot.sup < min_sc:
        stats.support_prunes += 1
        return
    if xa.fuot.uo >= params.beta and len(xa.pattern) >= params.minlen:
        results.append(HUOPResult(pattern=xa.pattern, sup=xa.fuot.sup, uo=xa.fuot.uo))
    bound = length_upper_bound(xa.uonl, min_sc)
    if bound_log is not None:
        bound_log.append((xa.pattern, bound))
    if bound < params.beta:
        stats.lub_prunes += 1
        return
    sub_exten: list[PatternNode] = []
    for j in range(pos + 1, len(exten)):
        stats.constructions += 1
        node = construct(prefix, xa, exten[j], min_sc, trim_to=trim_to)
        if node is None:
            stats.early_aborts += 1
        elif node.fuot.sup >= min_sc:
            sub_exten.append(node)
    # Enter the subtree only while joined patterns can stay within maxlen.
    if len(xa.pattern) + 1 <= params.maxlen:
        for sub_pos in range(len(sub_exten)):
            _process_node(
                xa, sub_exten, sub_pos, params, min_sc, results, stats, bound_log, trim_to
            )


def search_subtree(
    prefix: PatternNode | None,
    exten: list[PatternNode],
    params: MiningParams,
    db_size: int,
    results: list[HUOPResult],
    stats: SearchStats,
    bound_log: list[tuple[Pattern, float]] | None = None,
    trim_to: int | None = None,
) -> None:
    """Visit each extension of ``prefix`` in mining order and recurse.

    ``db_size`` must be the original database size; support thresholds
    are relative to it at every depth.
    """
    min_sc = min_support_count(params.alpha, db_size)
    for pos in range(len(exten)):
        _process_node(prefix, exten, pos, params, min_sc, results, stats, bound_log, trim_to)


def _result_sort_key(rdb_rank):
    def key(result: HUOPResult):
        return (len(result.pattern), tuple(rdb_rank[i] for i in result.pattern))

    return key


def mine(
    db: TransactionDatabase,
    params: MiningParams,
    threads: int = 1,
    bound_log: list[tuple[Pattern, float]] | None = None,
    tighten_luo: bool = False,
) -> tuple[list[HUOPResult], SearchStats]:
    """Mine all qualifying patterns of ``db`` under ``params``.

    Returns the results sorted by length, then by position in the mining
    order, plus the run's counters.  ``threads`` > 1 distributes the
    first-level subtrees over a thread pool; output is identical either
    way.  ``tighten_luo`` switches on the experimental trimming of
    inherited ``luo`` lists (off by default, and off for every documented
    result in this repository).
    """
    start = time.perf_counter()
    counts = support_counts(db)
    min_sc = min_support_count(params.alpha, db.size)
    order = build_total_order(counts, min_sc)
    rdb = revise_database(db, order)
    nodes = list(build_initial_nodes(rdb, params.maxlen))

    stats = SearchStats()
    results: list[HUOPResult] = []
    trim_to = params.maxlen if tighten_luo else None

    if params.maxlen >= 1:
        if threads <= 1 or len(nodes) <= 1:
            search_subtree(None, nodes, params, db.size, results, stats, bound_log, trim_to)
        else:
            def work(pos: int):
                local_results: list[HUOPResult] = []
                local_stats = SearchStats()
                local_log: list[tuple[Pattern, float]] | None = (
                    [] if bound_log is not None else None
                )
                _process_node(
                    None, nodes, pos, params, min_sc, local_results, local_stats, local_log, trim_to
                )
                return local_results, local_stats, local_log

            with ThreadPoolExecutor(max_workers=threads) as pool:
                for local_results, local_stats, local_log in pool.map(work, range(len(nodes))):
                    results.extend(local_results)
                    stats.merge(local_stats)
                    if bound_log is not None and local_log:
                        bound_log.extend(local_log)

    results.sort(key=_result_sort_key(order.rank))
    stats.runtime_ms = int((time.perf_counter() - start) * 1000)
    return results, stats


def unconstrained_maxlen(db: TransactionDatabase, alpha: float) -> int:
    """Length cap that imposes no constraint: the number of frequent
    items (at least 1 so parameters stay well formed)."""
    counts = support_counts(db)
    min_sc = min_support_count(alpha, db.size)
    return max(1, sum(1 for c in counts.values() if c >= min_sc))
