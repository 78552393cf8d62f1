"""Static constants for reference

Rule of thumb: if it's an arbitrary value that will never be changed at runtime, it should go
in this module.

All constants should be type hinted.
"""
from typing import Tuple

from multiphoton_interference import __about__


# Prefix all reporter messages should include to indicate that they came from this package in
# the console output.
REPORTER_PREFIX: str = "multiphoton:"

# Name of the environment variable holding the default output directory for the CLI
OUTPUT_ENV_VAR: str = "MULTIPHOTON_OUT"

# Amplitudes with a magnitude at or below this value are dropped from sparse states
PRUNE_THRESHOLD: float = 1e-14

# Tolerance on the squared norm of a state flagged as normalized
NORM_TOLERANCE: float = 1e-12

# Largest total photon number a single state may carry
SHELL_LIMIT: int = 8

# Largest photon number accepted by the Hofmann merge construction
MERGE_LIMIT: int = 6

# Largest total photon number accepted by the partial-distinguishability engine
DISTINGUISHABILITY_LIMIT: int = 6

# Largest matrix accepted by the permanent kernel
PERMANENT_LIMIT: int = 12

# Gram matrix eigenvalues above this (negative) floor are clipped to zero; below it the
# matrix is rejected as indefinite
GRAM_EIGENVALUE_FLOOR: float = -1e-10

# Rank tolerance passed to the pivoted Cholesky factorization of a Gram matrix
GRAM_RANK_TOLERANCE: float = 1e-12

# Default number of points on each axis of a frequency grid
GRID_POINTS: int = 128

# Half-width of a frequency grid around each packet center, in units of the bandwidth
GRID_SPAN: float = 5.0

# Largest relative change of a pair quantity accepted when the grid is doubled
GRID_CONVERGENCE: float = 5e-3

# Largest imaginary residue tolerated in the HOM visibility quotient
VISIBILITY_IMAGINARY_TOLERANCE: float = 1e-9

# Default dimensionless delay scan (sigma * tau) for dip experiments
DELAY_SCAN: Tuple[float, float, int] = (-5.0, 5.0, 81)

# Delay (sigma * tau) used to place photons that must stay fully distinguishable
ORTHOGONAL_DELAY: float = 1e3

# Tolerance used by the root finders locating interference nulls
ROOT_TOLERANCE: float = 1e-13

# Largest weight of photon shells above the post-selected shell accepted for the truncated
# coherent/down-conversion input
TRUNCATION_LIMIT: float = 1e-8

# Number of worker threads used for independent scan points by default
DEFAULT_THREADS: int = 4

# Output formats understood by the CLI
OUTPUT_FORMATS: Tuple[str, ...] = ("csv", "json")

# Identifier written into every summary file
GENERATOR: str = f"{__about__.__title__} {__about__.__version__}"
