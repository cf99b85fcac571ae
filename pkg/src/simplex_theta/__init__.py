"""Recursive Lovasz theta bounds for simplex-avoiding sets on spheres and in R^n."""
from .asymptotics import (
    DecayConstant,
    bernoulli_bound,
    best_constant,
    euclidean_decay_constant,
    largest_zero_bound,
    nonneg_degree_threshold,
    sphere_decay_constant,
)
from .bounds import (
    BoundCertificate,
    SimplexInstance,
    chromatic_lower,
    theta_euclidean,
    theta_sphere,
    theta_sphere_base,
)
from .errors import ConvergenceError, DomainError, InfeasibleError
from .minima import BesselMinimum, PolynomialMinimum, bessel_minimum, polynomial_minimum, tail_bound
from .oracle import TruncatedLP, lp_optimum, verify_chain
from .specfun import (
    PrecisionConfig,
    RadialProfile,
    UltrasphericalFamily,
    jacobi_eval,
    jacobi_scan,
    omega_eval,
)

__version__ = "0.1.0"
