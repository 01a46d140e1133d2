"""Utility-occupancy measures computed directly from a database.

For a pattern ``X`` and a supporting transaction ``T``:

* ``uo(X, T)`` is the share of ``T``'s transaction utility contributed by
  the items of ``X``; ``uo(X)`` averages that share over all supporting
  transactions.
* ``ruo(X, T)`` is the share contributed by the retained items that come
  strictly after ``X`` in the mining order (the room left for
  extensions); ``ruo(X)`` is its average.
* ``luo(X, T, maxlen)`` keeps only the largest per-item shares after
  ``X``, as many as a pattern could still absorb before hitting
  ``maxlen``; ``rruo`` sums, then averages them.  By construction
  ``rruo <= ruo``.

These functions rescan the database on every call.  They are the slow,
obviously-correct counterpart of the list structures in
:mod:`huopminer.lists` and are used to cross-check them.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping

from .database import Pattern, RevisedDatabase, Transaction, TransactionDatabase
from .errors import PatternNotSupportedError, ZeroSupportError


def _pattern_utility(pattern: Iterable[int], tx: Transaction, table: Mapping[int, float]) -> float:
    total = 0.0
    for item in pattern:
        if item not in tx.entries:
            raise PatternNotSupportedError(
                f"transaction {tx.tid} does not contain item {item}"
            )
        total += tx.entries[item] * table[item]
    return total


def _supports(pattern: Iterable[int], tx: Transaction) -> bool:
    return all(item in tx.entries for item in pattern)


def uo_in_transaction(pattern: Iterable[int], tx: Transaction, table: Mapping[int, float]) -> float:
    """Utility share of ``pattern`` within one supporting transaction."""
    return _pattern_utility(pattern, tx, table) / tx.tu


def uo_of_pattern(pattern: Iterable[int], db: TransactionDatabase) -> float:
    """Mean utility share over all transactions containing ``pattern``."""
    pattern = tuple(pattern)
    total = 0.0
    count = 0
    for tx in db.transactions:
        if _supports(pattern, tx):
            total += uo_in_transaction(pattern, tx, db.utility_table)
            count += 1
    if count == 0:
        raise ZeroSupportError(f"no transaction contains pattern {pattern}")
    return total / count


def _tail_occupancies(pattern: tuple[int, ...], tx: Transaction, rdb: RevisedDatabase) -> list[float]:
    """Per-item utility shares of the retained items after ``pattern``,
    in ascending order rank."""
    rank = rdb.order.rank
    last = max(rank[i] for i in pattern)
    table = rdb.utility_table
    return [
        tx.entries[i] * table[i] / tx.tu
        for i in tx.entries
        if rank[i] > last
    ]


def ruo_in_transaction(pattern: Iterable[int], tx: Transaction, rdb: RevisedDatabase) -> float:
    """Utility share of everything after ``pattern`` in one transaction."""
    pattern = tuple(pattern)
    if not _supports(pattern, tx):
        raise PatternNotSupportedError(f"transaction {tx.tid} does not contain {pattern}")
    return sum(_tail_occupancies(pattern, tx, rdb))


def ruo_of_pattern(pattern: Iterable[int], rdb: RevisedDatabase) -> float:
    """Mean remaining utility share over supporting transactions."""
    pattern = tuple(pattern)
    total = 0.0
    count = 0
    for tx in rdb.transactions:
        if _supports(pattern, tx):
            total += ruo_in_transaction(pattern, tx, rdb)
            count += 1
    if count == 0:
        raise ZeroSupportError(f"no transaction contains pattern {pattern}")
    return total / count


def luo_in_transaction(
    pattern: Iterable[int], tx: Transaction, rdb: RevisedDatabase, maxlen: int
) -> tuple[float, ...]:
    """Largest utility shares after ``pattern``, capped by the room left
    under ``maxlen``, in descending order."""
    pattern = tuple(pattern)
    slots = maxlen - len(pattern)
    if slots < 0:
        raise ValueError(f"pattern longer than maxlen: {len(pattern)} > {maxlen}")
    if not _supports(pattern, tx):
        raise PatternNotSupportedError(f"transaction {tx.tid} does not contain {pattern}")
    if slots == 0:
        return ()
    return tuple(heapq.nlargest(slots, _tail_occupancies(pattern, tx, rdb)))


def rruo_in_transaction(
    pattern: Iterable[int], tx: Transaction, rdb: RevisedDatabase, maxlen: int
) -> float:
    """Sum of the capped largest shares after ``pattern`` in one transaction."""
    return sum(luo_in_transaction(pattern, tx, rdb, maxlen))


def rruo_of_pattern(pattern: Iterable[int], rdb: RevisedDatabase, maxlen: int) -> float:
    """Mean of :func:`rruo_in_transaction` over supporting transactions."""
    pattern = tuple(pattern)
    total = 0.0
    count = 0
    for tx in rdb.transactions:
        if _supports(pattern, tx):
            total += rruo_in_transaction(pattern, tx, rdb, maxlen)
            count += 1
    if count == 0:
        raise ZeroSupportError(f"no transaction contains pattern {pattern}")
    return total / count
