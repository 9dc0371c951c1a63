"""Green's function of the bounded-solutions problem x' = Ax + f and its norm bounds."""

from ._core import (
    AnalyticFn,
    BoundParams,
    BoundTerm,
    BoundedSolver,
    ContourError,
    DichotomyData,
    DichotomyViolation,
    DistinctnessViolation,
    EigenFailure,
    Error,
    EvaluationError,
    ForcingFn,
    GenerationError,
    InvalidInput,
    NewtonPolynomial,
    RangeError,
    TimeSign,
    WindowError,
    binom_conv,
    bound_tail_integral,
    bounded_solution,
    build_newton,
    cluster_eigenvalues,
    constant_forcing,
    dd_contour_oracle,
    dd_distinct_formula,
    divided_difference_table,
    eigenvalues,
    expm,
    expm_bound,
    fn,
    gaussian_pulse_forcing,
    gelfond_bound,
    green_bound,
    green_bound_terms,
    green_limit,
    green_newton,
    green_projector,
    hermite_check,
    lemma_derivative_bound,
    make_bound_params,
    matrix_function,
    op_norm,
    ordered_nodes,
    residual,
    sine_forcing,
    spectral_projector,
    split_spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
