# -*- coding: utf-8 -*-
"""
Unit Index Census
Predicted and observed distribution of ind(eps_p mod q) over primes p = 1 mod 4
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from contextlib import ExitStack
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .persistence import CheckpointWriter, optional_checkpoint
from .records import FrequencyTable, ScanRecord
from ..arith import is_prime, jacobi, primes_up_to
from ..constants import (
    FILTER_1_MOD_4, FILTER_5_MOD_8, LOGGER_NAME, SCAN_FILTERS, SCAN_FLUSH_EVERY,
)
from ..errors import ParameterOutOfRange
from ..quadratic import QuadRing, is_inert, quad_index, unit_mod_q
from ..utils import TimeUtils, chunked

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class TableRow:
    """One published row: q, index, predicted and observed (p < 10^8) frequencies"""
    q: int
    index: int
    predicted: Fraction
    observed: float


_PUBLISHED = (
    (2, 1, Fraction(2, 3), 0.67497), (2, 3, Fraction(1, 3), 0.32503),
    (3, 1, Fraction(1), 1.0),
    (5, 2, Fraction(2, 3), 0.67359), (5, 6, Fraction(1, 3), 0.32641),
    (7, 3, Fraction(1), 1.0),
    (11, 5, Fraction(2, 3), 0.67325), (11, 15, Fraction(1, 3), 0.32675),
    (13, 6, Fraction(6, 7), 0.85795), (13, 42, Fraction(1, 7), 0.14205),
    (17, 8, Fraction(2, 3), 0.67236), (17, 24, Fraction(2, 9), 0.21849),
    (17, 72, Fraction(1, 9), 0.10914),
    (19, 9, Fraction(4, 5), 0.80082), (19, 45, Fraction(1, 5), 0.19918),
)


def table_rows(q: Optional[int] = None) -> List[TableRow]:
    rows = [TableRow(*row) for row in _PUBLISHED]
    return [r for r in rows if q is None or r.q == q]


def _check_q(q: int):
    if not is_prime(q):
        raise ParameterOutOfRange("q", q, f"q must be prime, got {q}")


def candidate_rings(q: int) -> List[QuadRing]:
    """O_K/qO_K for every residue class of p mod q leaving q inert"""
    _check_q(q)
    if q == 2:
        return [QuadRing.for_residue(5, 2)]
    return [QuadRing.for_residue(r, q) for r in range(1, q) if jacobi(r, q) == -1]


def predict_distribution(q: int) -> Dict[int, Fraction]:
    """
    Frequency of each index among the candidates for eps_p mod q

    A candidate is an element of norm -1 (for odd q this is (2a+b)^2 - p b^2 = -4 mod q,
    for q = 2 every unit of F_4); the candidates of all inert residue classes are pooled.
    """
    counts: Dict[int, int] = {}
    minus_one = (-1) % q
    for ring in candidate_rings(q):
        for element in ring.elements():
            if element.is_zero() or element.norm() != minus_one:
                continue
            index = quad_index(element, q)
            counts[index] = counts.get(index, 0) + 1
    total = sum(counts.values())
    return {index: Fraction(count, total) for index, count in sorted(counts.items())}


def candidate_primes(p_max: int, filter_name: str = FILTER_1_MOD_4, start_after: int = 0) -> List[int]:
    if filter_name not in SCAN_FILTERS:
        raise ParameterOutOfRange("filter", filter_name, f"filter must be one of {SCAN_FILTERS}")
    primes = primes_up_to(p_max)
    if filter_name == FILTER_5_MOD_8:
        primes = primes[primes % 8 == 5]
    else:
        primes = primes[primes % 4 == 1]
    primes = primes[primes > start_after]
    return [int(p) for p in primes]


def scan_prime(p: int, q: int) -> Optional[ScanRecord]:
    """Record for p, or None when q is not inert in Q(sqrt p)"""
    if not is_inert(p, q):
        return None
    index = quad_index(unit_mod_q(p, q), q)
    return ScanRecord(p=p, q=q, index_unit=index, p_mod_8=p % 8)


def _scan_batch(task: Tuple[int, Sequence[int]]) -> List[ScanRecord]:
    q, primes = task
    records = []
    for p in primes:
        record = scan_prime(p, q)
        if record is not None:
            records.append(record)
    return records


def _run_chunk(executor: Optional[ProcessPoolExecutor], q: int, chunk: List[int],
               jobs: int) -> List[ScanRecord]:
    if executor is None:
        return _scan_batch((q, chunk))
    batch = max(1, ceil(len(chunk) / (4 * jobs)))
    records: List[ScanRecord] = []
    # map preserves submission order, so the merge is independent of scheduling
    for part in executor.map(_scan_batch, [(q, b) for b in chunked(chunk, batch)]):
        records.extend(part)
    return records


def scan_records(q: int, p_max: int, filter_name: str = FILTER_1_MOD_4,
                 checkpoint: Optional[Union[str, Path]] = None, jobs: int = 1,
                 flush_every: int = SCAN_FLUSH_EVERY) -> List[ScanRecord]:
    """Every ScanRecord for p <= p_max, ascending in p"""
    _check_q(q)
    if p_max < 5:
        raise ParameterOutOfRange("p_max", p_max)
    if jobs < 1 or flush_every < 1:
        raise ParameterOutOfRange("jobs", jobs, "jobs and flush_every must be positive")

    records, last_completed = optional_checkpoint(checkpoint, q, filter_name)
    if last_completed > p_max:
        records = [r for r in records if r.p <= p_max]
        logger.info(f"Checkpoint reaches p={last_completed}; keeping the {len(records)} "
                    f"records with p <= {p_max}")
    pending = candidate_primes(p_max, filter_name, start_after=last_completed)
    logger.info(f"Scanning q={q} filter={filter_name} up to {p_max}: {len(pending)} primes "
                f"with {jobs} worker(s)")
    started = TimeUtils.monotonic()

    with ExitStack() as stack:
        writer = None
        if checkpoint is not None:
            writer = stack.enter_context(CheckpointWriter(checkpoint, q, filter_name))
        executor = None
        if jobs > 1 and pending:
            executor = stack.enter_context(ProcessPoolExecutor(max_workers=jobs))
        done = 0
        for chunk in chunked(pending, flush_every):
            found = _run_chunk(executor, q, chunk, jobs)
            records.extend(found)
            if writer is not None:
                writer.commit(found, chunk[-1])
            done += len(chunk)
            logger.info(f"q={q}: {done}/{len(pending)} primes through p={chunk[-1]} "
                        f"({TimeUtils.elapsed(started):.1f}s)")
    return records


def scan_observed(q: int, p_max: int, filter_name: str = FILTER_1_MOD_4,
                  checkpoint: Optional[Union[str, Path]] = None, jobs: int = 1,
                  flush_every: int = SCAN_FLUSH_EVERY) -> FrequencyTable:
    records = scan_records(q, p_max, filter_name, checkpoint, jobs, flush_every)
    return FrequencyTable.from_records(q, p_max, filter_name, records)


def outside_support(table: FrequencyTable, predicted: Dict[int, Fraction]) -> List[int]:
    """Observed indices the prediction gives no weight to"""
    return [index for index in table.counts if index not in predicted]


def check_ik_properties(records: Iterable[ScanRecord]) -> Optional[ScanRecord]:
    """
    First record violating (q-1)/2 | ind(eps) or the 2-part of ord(eps)

    ord(eps mod q) is 4 mod 8 for q = 1 mod 4 and 0 mod 8 for q = 3 mod 4. Records for
    q = 2 carry no condition.
    """
    for record in records:
        q = record.q
        if q == 2:
            continue
        if record.index_unit % ((q - 1) // 2):
            return record
        expected = 4 if q % 4 == 1 else 0
        if record.order_unit % 8 != expected:
            return record
    return None


def ik_scan(q: int, p_max: int, jobs: int = 1) -> bool:
    if q == 2:
        raise ParameterOutOfRange("q", q, "the index properties concern odd q")
    violation = check_ik_properties(scan_records(q, p_max, FILTER_1_MOD_4, jobs=jobs))
    if violation is not None:
        logger.error(f"Index property violated at p={violation.p} q={q}: "
                     f"index={violation.index_unit}, order={violation.order_unit}")
        return False
    return True
