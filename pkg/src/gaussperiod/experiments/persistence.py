# -*- coding: utf-8 -*-
"""
Scan Persistence
CSV rows, JSON summaries and the resumable checkpoint file

Checkpoint layout:
    # gaussperiod scan checkpoint
    # q=<q> filter=<filter>
    p,q,index_unit,p_mod_8
    <rows>
    last_completed_p=<p>
    <rows>
    last_completed_p=<p>
Only rows followed by a marker are committed; anything after the last marker is an
interrupted write and is truncated on resume.
"""

import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .records import FrequencyTable, ScanRecord, render_scan_csv
from ..constants import LOGGER_NAME, SCAN_CSV_HEADER
from ..errors import CheckpointCorrupt
from ..utils import atomic_write_text, ensure_dir, to_json_string

logger = logging.getLogger(LOGGER_NAME)

CHECKPOINT_BANNER = "# gaussperiod scan checkpoint"
CHECKPOINT_MARKER = "last_completed_p="


def _metadata_line(q: int, filter_name: str) -> str:
    return f"# q={q} filter={filter_name}"


def write_scan_csv(path: Union[str, Path], records: List[ScanRecord]) -> None:
    atomic_write_text(path, render_scan_csv(records))


def summary_dict(table: FrequencyTable, predicted: Dict[int, Fraction]) -> Dict[str, Any]:
    return {
        'q': table.q,
        'p_max': table.range_max,
        'filter': table.filter,
        'counts': {str(k): v for k, v in table.counts.items()},
        'fractions': {str(k): round(float(v), 6) for k, v in table.fractions.items()},
        'predicted': {str(k): f"{v.numerator}/{v.denominator}" for k, v in predicted.items()},
    }


def write_summary_json(path: Union[str, Path], table: FrequencyTable,
                       predicted: Dict[int, Fraction]) -> None:
    atomic_write_text(path, to_json_string(summary_dict(table, predicted), indent=2) + '\n')


def load_checkpoint(path: Union[str, Path], q: int,
                    filter_name: str) -> Tuple[List[ScanRecord], int]:
    """
    Committed records and the last completed prime

    A missing file is an empty checkpoint. A trailing uncommitted tail is truncated in place;
    malformed committed content raises CheckpointCorrupt.
    """
    path = Path(path)
    if not path.exists():
        return [], 0
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise CheckpointCorrupt(path, f"unreadable: {e}") from e
    if not text:
        return [], 0

    lines = text.split('\n')
    # a last element without its newline is a partial write
    complete = lines[:-1]
    expected = [CHECKPOINT_BANNER, _metadata_line(q, filter_name), SCAN_CSV_HEADER]
    if complete[:3] != expected:
        found = complete[1] if len(complete) > 1 else ''
        raise CheckpointCorrupt(path, f"header does not match q={q} filter={filter_name} "
                                      f"(found {found!r})")

    body = complete[3:]
    last_marker = max((i for i, line in enumerate(body) if line.startswith(CHECKPOINT_MARKER)),
                      default=-1)
    records: List[ScanRecord] = []
    last_completed = 0
    for number, line in enumerate(body[:last_marker + 1], start=4):
        try:
            if line.startswith(CHECKPOINT_MARKER):
                marker = int(line[len(CHECKPOINT_MARKER):])
                if marker < last_completed:
                    raise ValueError(f"marker {marker} goes backwards")
                last_completed = marker
                continue
            record = ScanRecord.from_row(line)
        except ValueError as e:
            raise CheckpointCorrupt(path, f"line {number}: {e}") from e
        if record.q != q or (records and record.p <= records[-1].p) or record.p <= last_completed:
            raise CheckpointCorrupt(path, f"line {number}: out of order row {line!r}")
        records.append(record)

    committed = expected + body[:last_marker + 1]
    dropped = len(complete) - len(committed) + (1 if lines[-1] else 0)
    if dropped:
        logger.warning(f"Truncating {dropped} uncommitted line(s) from checkpoint {path}")
        atomic_write_text(path, '\n'.join(committed) + '\n')

    logger.info(f"Resuming from checkpoint {path}: {len(records)} records, "
                f"last completed p={last_completed}")
    return records, last_completed


class CheckpointWriter:
    """Appends committed chunks to a checkpoint file"""

    def __init__(self, path: Union[str, Path], q: int, filter_name: str):
        self.path = Path(path)
        self.q = q
        self.filter_name = filter_name
        self._handle = None

    def __enter__(self) -> 'CheckpointWriter':
        if self.path.parent and str(self.path.parent) not in ('', '.'):
            ensure_dir(self.path.parent)
        fresh = not self.path.exists() or self.path.stat().st_size == 0
        self._handle = open(self.path, 'a', encoding='utf-8', newline='\n')
        if fresh:
            self._handle.write('\n'.join([CHECKPOINT_BANNER,
                                          _metadata_line(self.q, self.filter_name),
                                          SCAN_CSV_HEADER]) + '\n')
            self._flush()
        return self

    def __exit__(self, exc_type, exc, tb):
        if self._handle is not None:
            self._handle.close()
            self._handle = None

    def _flush(self):
        self._handle.flush()
        os.fsync(self._handle.fileno())

    def commit(self, records: List[ScanRecord], last_completed_p: int) -> None:
        if self._handle is None:
            raise RuntimeError("CheckpointWriter used outside its context")
        rows = ''.join(r.to_row() + '\n' for r in records)
        self._handle.write(rows + f"{CHECKPOINT_MARKER}{last_completed_p}\n")
        self._flush()
        logger.debug(f"Checkpoint {self.path}: committed {len(records)} records "
                     f"through p={last_completed_p}")


def optional_checkpoint(path: Optional[Union[str, Path]], q: int,
                        filter_name: str) -> Tuple[List[ScanRecord], int]:
    if path is None:
        return [], 0
    return load_checkpoint(path, q, filter_name)
