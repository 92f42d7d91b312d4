# -*- coding: utf8 -*-

import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from gaussperiod.experiments import ScanRecord
from gaussperiod.utils import atomic_write_text, chunked, default_workers, to_json_string


class TestJsonUtils(unittest.TestCase):
    """Test deterministic JSON output"""

    def test_fractions_and_dataclasses(self):
        text = to_json_string({'b': Fraction(2, 3), 'a': ScanRecord(37, 2, 3, 5)})
        self.assertTrue(text.startswith('{"a"'))
        self.assertEqual(json.loads(text), {
            'a': {'p': 37, 'q': 2, 'index_unit': 3, 'p_mod_8': 5},
            'b': '2/3',
        })

    def test_fallback_to_str(self):
        self.assertEqual(json.loads(to_json_string([Path('x.csv')])), ['x.csv'])


class TestFileUtils(unittest.TestCase):
    """Test file and process helpers"""

    def test_atomic_write_creates_parents(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'a' / 'b.txt'
            atomic_write_text(target, 'first')
            atomic_write_text(target, 'second')
            self.assertEqual(target.read_text(), 'second')
            self.assertEqual([p.name for p in target.parent.iterdir()], ['b.txt'])

    def test_chunks_and_workers(self):
        self.assertEqual(chunked([1, 2, 3, 4, 5], 2), [[1, 2], [3, 4], [5]])
        with self.assertRaises(ValueError):
            chunked([1], 0)
        self.assertGreaterEqual(default_workers(), 1)


if __name__ == '__main__':
    unittest.main()
