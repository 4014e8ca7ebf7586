"""Exact computation and identity checking for degenerate Frobenius-Euler
polynomials and their Bernoulli and Genocchi relatives."""

__version__ = "0.1.0"

from .numeric import Poly, X, fmt_rational, genfall, parse_rational, poly_derivative
from .egf import (
    EgfSeq,
    egf_binom_kernel,
    egf_compose_scaled_exp,
    egf_compose_scaled_log,
    egf_inv,
    egf_mul,
    egf_pow,
)
from .families import (
    Families,
    Family,
    FamilySpec,
    NumberSeq,
    classical_fe_higher,
    classical_fe_poly,
    deg_bernoulli_numbers,
    deg_bernoulli_poly,
    deg_genocchi_poly,
    dfe_higher_numbers,
    dfe_higher_poly,
    dfe_numbers,
    dfe_oracle,
    dfe_poly,
)
from .stirling import H_to_h, genfall_expand, h_to_H, s1, s2
from .verify import Grid, IdentityId, VerifyReport, check_all
