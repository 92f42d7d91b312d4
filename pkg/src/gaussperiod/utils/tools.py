# -*- coding: utf-8 -*-
"""
Common Utility Module
Contains serialization, file and process helpers shared by the experiments and the CLI
"""

import dataclasses
import json
import logging
import os
import tempfile
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Union

import psutil

from ..constants import LOGGER_NAME

logger = logging.getLogger(LOGGER_NAME)


class TimeUtils:
    """Time Processing Utilities"""

    @staticmethod
    def monotonic() -> float:
        """Get monotonic clock in seconds"""
        return time.monotonic()

    @staticmethod
    def elapsed(start: float) -> float:
        """Seconds since start"""
        return time.monotonic() - start


class JsonUtils:
    """JSON Processing Utilities"""

    @staticmethod
    def to_json_string(obj: Any, indent: Optional[int] = None) -> str:
        """Convert object to a deterministic JSON string"""
        return json.dumps(obj, default=JsonUtils._json_serializer, sort_keys=True,
                          indent=indent, ensure_ascii=False)

    @staticmethod
    def _json_serializer(obj: Any) -> Any:
        """JSON serializer"""
        if isinstance(obj, Fraction):
            return f"{obj.numerator}/{obj.denominator}"
        if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return dataclasses.asdict(obj)
        return str(obj)


class FileUtils:
    """File Operation Utilities"""

    @staticmethod
    def ensure_dir(path: Union[str, Path]) -> bool:
        """Ensure directory exists"""
        try:
            os.makedirs(path, exist_ok=True)
            return True
        except OSError as e:
            logger.error(f"Failed to create directory {path}: {e}")
            return False

    @staticmethod
    def safe_remove(file_path: Union[str, Path]) -> bool:
        """Safely remove file"""
        try:
            if os.path.exists(file_path):
                os.remove(file_path)
            return True
        except OSError as e:
            logger.error(f"Failed to remove file {file_path}: {e}")
            return False

    @staticmethod
    def atomic_write_text(path: Union[str, Path], text: str) -> None:
        """Write text through a temporary file and rename it into place"""
        target = Path(path)
        if target.parent and str(target.parent) not in ('', '.'):
            FileUtils.ensure_dir(target.parent)
        fd, tmp = tempfile.mkstemp(dir=str(target.parent or '.'), prefix=f".{target.name}.")
        try:
            with os.fdopen(fd, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
            os.replace(tmp, target)
        except BaseException:
            FileUtils.safe_remove(tmp)
            raise


class ProcessUtils:
    """Process Related Utilities"""

    @staticmethod
    def default_workers() -> int:
        """Physical cores, falling back to logical cores, then 1"""
        count = psutil.cpu_count(logical=False) or psutil.cpu_count(logical=True) or 1
        return max(1, int(count))


def chunked(items: List[Any], size: int) -> List[List[Any]]:
    """Split a list into consecutive chunks of at most size elements"""
    if size <= 0:
        raise ValueError(f"Chunk size must be positive, got {size}")
    return [items[i:i + size] for i in range(0, len(items), size)]


# Convenient module-level functions
def to_json_string(obj: Any, indent: Optional[int] = None) -> str:
    """Convert object to JSON string"""
    return JsonUtils.to_json_string(obj, indent)


def ensure_dir(path: Union[str, Path]) -> bool:
    """Ensure directory exists"""
    return FileUtils.ensure_dir(path)


def atomic_write_text(path: Union[str, Path], text: str) -> None:
    """Write text atomically"""
    FileUtils.atomic_write_text(path, text)


def default_workers() -> int:
    """Default worker count"""
    return ProcessUtils.default_workers()
