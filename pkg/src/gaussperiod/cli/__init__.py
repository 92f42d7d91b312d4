# -*- coding: utf-8 -*-
"""
Command Line Module
"""

from .runner import CLIRunner, GaussPeriodArgumentParser, UsageError, main

__all__ = ['CLIRunner', 'GaussPeriodArgumentParser', 'UsageError', 'main']
