# -*- coding: utf-8 -*-
"""
Utility Module
"""

from .tools import (
    JsonUtils, FileUtils, TimeUtils, ProcessUtils,
    to_json_string, ensure_dir, atomic_write_text, default_workers, chunked,
)

__all__ = ['JsonUtils', 'FileUtils', 'TimeUtils', 'ProcessUtils',
           'to_json_string', 'ensure_dir', 'atomic_write_text',
           'default_workers', 'chunked']
