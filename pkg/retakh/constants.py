"""
Tunables and identifiers shared by the library, the CLI and the scan script.
"""

# Largest semilength for which the brute-force oracle is allowed to run.
# Semilength 14 visits ~113K restricted paths and stays well under ten
# seconds on a desktop.
DEFAULT_BUDGET = 14

# Default truncation order (inclusive) for series computations
DEFAULT_ORDER = 200

# Environment variables overriding the two defaults above. Command line
# flags override the environment.
BUDGET_ENV_VAR = 'RETAKH_BUDGET'
ORDER_ENV_VAR = 'RETAKH_ORDER'

# Controls whether some expensive consistency checks are done or not.
# Turning this on makes the generating function routines compare their
# closed forms against the fixed point solutions on every call.
DO_SANITY_CHECKS = False

# Progress messages and timings are printed on stderr when set
VERBOSE = False

# Decimal places used by mpmath for the real-valued asymptotic formulas
MP_DPS = 40

# Significant digits when rendering real values
FLOAT_DIGITS = 12

# Largest order at which the bivariate closed form F(z, u) is compared with
# the fixed point of the leaf system by default. The fixed point costs a
# bivariate division per order and gets slow beyond this.
LEAVES_SYSTEM_CHECK_ORDER = 40

# Largest order for which the leaves numerator is taken from the bivariate
# total generating function; above it the univariate R route is used.
MAX_BIVARIATE_ORDER = 100

# Depth of the path prefixes handed to each worker by the parallel counter
DEFAULT_PREFIX_DEPTH = 6

# ########################### #
# Generally useful constants  #
# ########################### #

# Output formats
possible_formats = [
    'json',
    'csv',
    'plain'
]

# Counting methods for the count command
possible_count_methods = [
    'brute',
    'gf',
    'both'
]

# Series that can be dumped by the series command
possible_series = [
    'M',
    'v',
    'F',
    'G',
    'S',
    'R'
]

# Verification levels
possible_verify_levels = [
    'quick',
    'full'
]

# Asymptotic comparisons
comparison_motzkin = 'motzkin'
comparison_avg_height = 'avg_height'
comparison_avg_leaves = 'avg_leaves'
comparison_height_numerator = 'height_numerator'
possible_comparisons = [
    comparison_motzkin,
    comparison_avg_height,
    comparison_avg_leaves,
    comparison_height_numerator
]

# Geometric ladder used by the convergence scans
ASYMPTOTIC_LADDER = [125, 250, 500, 1000, 2000]

# Frozen tolerances on |ratio - 1|, with the semilength at which they apply
tolerances = {
    comparison_motzkin: (200, 0.05),
    comparison_avg_height: (2000, 0.15),
    comparison_avg_leaves: (1000, 0.02),
    comparison_height_numerator: (2000, 0.10)
}

# Rungs of the ladder allowed to break monotonicity of |ratio - 1|
allowed_ladder_violations = {
    comparison_motzkin: 0,
    comparison_avg_height: 1,
    comparison_avg_leaves: 0,
    comparison_height_numerator: 1
}

# Parameters of the verification suites
#   max_semilength: largest semilength checked against the brute-force oracle
#   order: truncation order of the univariate identities
#   leaves_order: truncation order of the bivariate (leaf counting) identities
#   system_order: truncation order of the leaf system fixed point check
#   g_k_max / g_k_order: range and order of the G_k recurrence check
#   formula_max: largest n for the trinomial/divisor extraction check
#   scans: run the asymptotic convergence scans
verify_levels = {
    'quick': {
        'max_semilength': 10,
        'order': 60,
        'leaves_order': 30,
        'system_order': 20,
        'g_k_max': 10,
        'g_k_order': 60,
        'formula_max': 40,
        'scans': False
    },
    'full': {
        'max_semilength': 14,
        'order': 200,
        'leaves_order': 100,
        'system_order': 40,
        'g_k_max': 50,
        'g_k_order': 120,
        'formula_max': 60,
        'scans': True
    }
}

# Human readable name mapping
human_mapping = {
    'M': 'Motzkin series M(z)',
    'v': 'Substitution series v(z) = zM(z)',
    'F': 'Triangle trees F(z)',
    'G': 'Even-level trees G(z)',
    'S': 'Height numerator S',
    'R': 'Leaves numerator R',

    comparison_motzkin: 'M_(n-1) vs 3^(n+1/2)/(2 sqrt(pi) n^(3/2))',
    comparison_avg_height: 'Average height vs 2 sqrt(pi n / 3)',
    comparison_avg_leaves: 'Average leaves vs 4/9 (n + 1)',
    comparison_height_numerator: '[z^(n+1)] S vs 3^(n+1)/(n+1)',

    'brute': 'Exhaustive enumeration',
    'gf': 'Generating function',
    'both': 'Exhaustive enumeration and generating function'
}
