# -*- coding: utf-8 -*-
"""
Scan Records
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from ..constants import SCAN_CSV_HEADER
from ..errors import InvariantViolation


@dataclass(frozen=True)
class ScanRecord:
    """ind(eps_p mod q) for one prime p"""
    p: int
    q: int
    index_unit: int
    p_mod_8: int

    def __post_init__(self):
        if (self.q * self.q - 1) % self.index_unit:
            raise InvariantViolation("index divides q^2 - 1", f"p={self.p}, q={self.q}, "
                                                              f"index={self.index_unit}")

    @property
    def order_unit(self) -> int:
        return (self.q * self.q - 1) // self.index_unit

    def to_row(self) -> str:
        return f"{self.p},{self.q},{self.index_unit},{self.p_mod_8}"

    @classmethod
    def from_row(cls, row: str) -> 'ScanRecord':
        """Parse one CSV row; ValueError when malformed"""
        fields = row.strip().split(',')
        if len(fields) != 4:
            raise ValueError(f"expected 4 fields, got {len(fields)}")
        p, q, index_unit, p_mod_8 = (int(f) for f in fields)
        if index_unit < 1 or p_mod_8 != p % 8:
            raise ValueError(f"inconsistent row {row!r}")
        return cls(p=p, q=q, index_unit=index_unit, p_mod_8=p_mod_8)


@dataclass
class FrequencyTable:
    q: int
    range_max: int
    filter: str
    counts: Dict[int, int] = field(default_factory=dict)
    fractions: Dict[int, Fraction] = field(default_factory=dict)

    @classmethod
    def from_records(cls, q: int, range_max: int, filter_name: str,
                     records: Iterable[ScanRecord]) -> 'FrequencyTable':
        counts: Dict[int, int] = {}
        for record in records:
            counts[record.index_unit] = counts.get(record.index_unit, 0) + 1
        total = sum(counts.values())
        fractions = {index: Fraction(count, total) for index, count in sorted(counts.items())}
        return cls(q=q, range_max=range_max, filter=filter_name,
                   counts=dict(sorted(counts.items())), fractions=fractions)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def fraction(self, index: int) -> Optional[float]:
        value = self.fractions.get(index)
        return None if value is None else float(value)


def render_scan_csv(records: List[ScanRecord]) -> str:
    lines = [SCAN_CSV_HEADER] + [r.to_row() for r in sorted(records, key=lambda r: r.p)]
    return '\n'.join(lines) + '\n'
