# -*- coding: utf-8 -*-
"""
Constants for Gauss Period Orders
"""

# Logger name shared by every module
LOGGER_NAME = "gaussperiod"

# Configuration file names, first existing one wins
CONFIG_FILE_NAMES = ['gaussperiod.yaml',
                     'gaussperiod.yml',
                     'gaussperiod.json']

# Environment variable prefix
ENV_PREFIX = 'GAUSSPERIOD_'

# Primality and factorization
MILLER_RABIN_64_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MILLER_RABIN_EXTRA_ROUNDS = 64  # 4**-64 = 2**-128
TRIAL_DIVISION_LIMIT = 1 << 16
FACTOR_MAX_ITERATIONS = 2_000_000

# Theorem harness
THEOREM_P_MAX = 1000
THEOREM_Q_SET = (2, 3, 5, 7, 11, 13, 17, 19)

# Class numbers
PRECISION_BITS = 128
MAX_PRECISION_BITS = 1 << 16
ROUNDING_CERTIFICATE = 2.0 ** -10

# Census scan
SCAN_P_MAX = 10 ** 6
SCAN_FLUSH_EVERY = 10 ** 4
SCAN_TOLERANCE = 0.02
FILTER_1_MOD_4 = '1mod4'
FILTER_5_MOD_8 = '5mod8'
SCAN_FILTERS = (FILTER_1_MOD_4, FILTER_5_MOD_8)
SCAN_CSV_HEADER = 'p,q,index_unit,p_mod_8'

# Ducci sequences
DUCCI_EXHAUSTIVE_MAX_P = 13
DUCCI_SAMPLES = 1000
DUCCI_ENTRY_BOUND = 1 << 16
DUCCI_SEED = 0

# Heuristics
TWIN_PRIME_CONSTANT = 0.66016181584686957392781211001455577843
ROUNDED_TWIN_PRIME_CONSTANT = 0.66
COHEN_LENSTRA_K_MAX = 60
GV_R_MIN = 593

# Exit codes
EXIT_OK = 0
EXIT_ASSERTION_FAILED = 1
EXIT_BAD_ARGUMENTS = 2
