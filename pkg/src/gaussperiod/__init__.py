# -*- coding: utf-8 -*-
"""
Gauss Period Orders - multiplicative orders of Gauss periods and real quadratic fields

Computes indices of zeta + 1/zeta in F_q[x]/Phi_p, fundamental units and class numbers
of Q(sqrt p), and the experiments tying the two together.

Usage:
1. Command line: gauss-period-orders verify-theorem --p 37 --q 2
2. Module: python -m gaussperiod.cli predict --q 5
3. Configuration file: create gaussperiod.yaml in the working directory
"""

__version__ = "0.1.0"
