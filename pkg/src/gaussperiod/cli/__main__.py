# -*- coding: utf-8 -*-
"""
Main Module Entry
Supports command line startup with python -m gaussperiod.cli
"""

from .runner import main


if __name__ == '__main__':
    main()
