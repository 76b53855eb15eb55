APP_VERSION: str = "0.1.0"

# Construction tolerance on sums; multiplied by N for counting vectors.
TOL_SUM: float = 1e-9
TOL_EVAL: float = 1e-9
TOL_AXIOM: float = 1e-8
TOL_EXTRACT: float = 1e-9
TOL_NORM: float = 1e-9
TOL_ORTHO: float = 1e-8
TOL_RESIDUAL: float = 1e-8

# Slopes of tabulated counting functions may rise by this much between
# neighbouring segments before the table counts as non-concave.
TOL_CONCAVE: float = 1e-7

STANDARD_ALPHAS: tuple[float, ...] = (0.25, 0.5, 0.75)
