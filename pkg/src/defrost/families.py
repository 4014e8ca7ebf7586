"""Degenerate Frobenius-Euler, Bernoulli and Genocchi families.

Each family has a recurrence path (the methods of :class:`Families`) and an
independent generating-function path (the ``*_oracle`` functions).  The
recurrence path lives on a class so that tests can subclass it with seeded
defects and check that the identity checkers notice.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import egf
from .errors import BadOrder, UEqualsOne
from .numeric import X, Poly, genfall


class Family(str, enum.Enum):
    DFE = "dfe"
    DFE_R = "dfe-r"
    DBERN = "dbern"
    DGEN = "dgen"
    CFE = "cfe"


_FE_FAMILIES = (Family.DFE, Family.DFE_R, Family.CFE)


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    u: Fraction | None = None
    lam: Fraction = Fraction(0)
    r: int = 1

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "lam", Fraction(self.lam))
        if fam is Family.DGEN:
            object.__setattr__(self, "u", Fraction(-1))
        if fam is Family.CFE:
            object.__setattr__(self, "lam", Fraction(0))
        if fam in _FE_FAMILIES:
            if self.u is None:
                raise ValueError(f"family {fam.value} needs u")
            object.__setattr__(self, "u", Fraction(self.u))
            _check_u(self.u)
        if self.r < 1:
            raise BadOrder(f"order must be >= 1, got {self.r}")
        if fam not in (Family.DFE_R, Family.CFE) and self.r != 1:
            raise BadOrder(f"family {fam.value} has fixed order 1")


@dataclass(frozen=True)
class NumberSeq:
    values: tuple
    spec: FamilySpec

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


def _check_u(u):
    if u == 1:
        raise UEqualsOne()


def _check_r(r):
    if r < 1:
        raise BadOrder(f"order must be >= 1, got {r}")


def binomial_convolve(a, b):
    n_max = min(len(a), len(b)) - 1
    return [
        sum((comb(n, k) * a[k] * b[n - k] for k in range(n + 1)), Fraction(0))
        for n in range(n_max + 1)
    ]


def falling_basis(lam, N: int) -> list:
    """``[(x|lam)_0, ..., (x|lam)_N]`` built incrementally."""
    lam = Fraction(lam)
    out = [Poly.const(1)]
    for k in range(N):
        out.append(out[-1] * (X - k * lam))
    return out


def expand_numbers(numbers, lam, n: int, basis=None) -> Poly:
    """``sum_l C(n,l) numbers[l] (x|lam)_{n-l}``."""
    if basis is None:
        basis = falling_basis(lam, n)
    return sum(
        (comb(n, l) * numbers[l] * basis[n - l] for l in range(n + 1)),
        Poly(),
    )


def expand_all(numbers, lam) -> list:
    basis = falling_basis(lam, len(numbers) - 1)
    return [expand_numbers(numbers, lam, n, basis) for n in range(len(numbers))]


class Families:
    """Recurrence-path constructors for every family."""

    def dfe_numbers(self, u, lam, N: int) -> NumberSeq:
        u, lam = Fraction(u), Fraction(lam)
        _check_u(u)
        ones = [genfall(1, lam, k) for k in range(N + 1)]
        h = [Fraction(1)]
        for n in range(1, N + 1):
            s = sum(comb(n, l) * h[l] * ones[n - l] for l in range(n))
            h.append(-s / (1 - u))
        return NumberSeq(tuple(h), FamilySpec(Family.DFE, u, lam))

    def dfe_poly_seq(self, N: int, u, lam) -> list:
        return expand_all(self.dfe_numbers(u, lam, N), lam)

    def dfe_poly(self, n: int, u, lam) -> Poly:
        return self.dfe_poly_seq(n, u, lam)[n]

    def dfe_higher_numbers(self, r: int, u, lam, N: int) -> NumberSeq:
        _check_r(r)
        base = list(self.dfe_numbers(u, lam, N))
        acc = base
        for _ in range(r - 1):
            acc = binomial_convolve(acc, base)
        return NumberSeq(tuple(acc), FamilySpec(Family.DFE_R, u, lam, r))

    def dfe_higher_poly_seq(self, N: int, r: int, u, lam) -> list:
        return expand_all(self.dfe_higher_numbers(r, u, lam, N), lam)

    def dfe_higher_poly(self, n: int, r: int, u, lam) -> Poly:
        return self.dfe_higher_poly_seq(n, r, u, lam)[n]

    def deg_bernoulli_numbers(self, lam, N: int) -> NumberSeq:
        lam = Fraction(lam)
        ones = [genfall(1, lam, k) for k in range(N + 2)]
        beta = [Fraction(1)]
        # coefficient of t^1/1! in t = ((1+lam t)^(1/lam) - 1) * sum beta_n t^n/n!
        assert ones[1] * beta[0] == 1
        for n in range(2, N + 2):
            s = sum(comb(n, m) * ones[m] * beta[n - m] for m in range(2, n + 1))
            beta.append(-s / n)
        return NumberSeq(tuple(beta[: N + 1]), FamilySpec(Family.DBERN, None, lam))

    def deg_bernoulli_poly_seq(self, N: int, lam) -> list:
        return expand_all(self.deg_bernoulli_numbers(lam, N), lam)

    def deg_bernoulli_poly(self, n: int, lam) -> Poly:
        return self.deg_bernoulli_poly_seq(n, lam)[n]

    def deg_genocchi_poly_seq(self, N: int, lam) -> list:
        out = [Poly()]
        if N >= 1:
            h = self.dfe_poly_seq(N - 1, -1, lam)
            out.extend(n * h[n - 1] for n in range(1, N + 1))
        return out

    def deg_genocchi_poly(self, n: int, lam) -> Poly:
        return self.deg_genocchi_poly_seq(n, lam)[n]

    def deg_genocchi_numbers(self, lam, N: int) -> NumberSeq:
        vals = tuple(p(0) for p in self.deg_genocchi_poly_seq(N, lam))
        return NumberSeq(vals, FamilySpec(Family.DGEN, None, lam))

    # Classical family at lam = 0, built in the monomial basis.

    def classical_fe_numbers(self, u, N: int, r: int = 1) -> NumberSeq:
        u = Fraction(u)
        _check_u(u)
        _check_r(r)
        H = [Fraction(1)]
        for n in range(1, N + 1):
            H.append(-sum(comb(n, l) * H[l] for l in range(n)) / (1 - u))
        acc = H
        for _ in range(r - 1):
            acc = binomial_convolve(acc, H)
        return NumberSeq(tuple(acc), FamilySpec(Family.CFE, u, 0, r))

    def classical_fe_higher_seq(self, N: int, r: int, u) -> list:
        H = self.classical_fe_numbers(u, N, r)
        return [
            Poly([comb(n, l) * H[n - l] for l in range(n + 1)]) for n in range(N + 1)
        ]

    def classical_fe_seq(self, N: int, u) -> list:
        return self.classical_fe_higher_seq(N, 1, u)

    def classical_fe_poly(self, n: int, u) -> Poly:
        return self.classical_fe_seq(n, u)[n]

    def classical_fe_higher(self, n: int, r: int, u) -> Poly:
        return self.classical_fe_higher_seq(n, r, u)[n]


DEFAULT = Families()

dfe_numbers = DEFAULT.dfe_numbers
dfe_poly = DEFAULT.dfe_poly
dfe_poly_seq = DEFAULT.dfe_poly_seq
dfe_higher_numbers = DEFAULT.dfe_higher_numbers
dfe_higher_poly = DEFAULT.dfe_higher_poly
dfe_higher_poly_seq = DEFAULT.dfe_higher_poly_seq
deg_bernoulli_numbers = DEFAULT.deg_bernoulli_numbers
deg_bernoulli_poly = DEFAULT.deg_bernoulli_poly
deg_bernoulli_poly_seq = DEFAULT.deg_bernoulli_poly_seq
deg_genocchi_poly = DEFAULT.deg_genocchi_poly
deg_genocchi_poly_seq = DEFAULT.deg_genocchi_poly_seq
deg_genocchi_numbers = DEFAULT.deg_genocchi_numbers
classical_fe_numbers = DEFAULT.classical_fe_numbers
classical_fe_poly = DEFAULT.classical_fe_poly
classical_fe_seq = DEFAULT.classical_fe_seq
classical_fe_higher = DEFAULT.classical_fe_higher
classical_fe_higher_seq = DEFAULT.classical_fe_higher_seq


# Generating-function oracles.  These never call into Families.

def _fe_kernel(u, lam, order: int) -> egf.EgfSeq:
    """EGF of ``(1-u) / ((1+lam t)^(1/lam) - u)``."""
    u = Fraction(u)
    _check_u(u)
    denom = egf.egf_binom_kernel(1, lam, order) - egf.constant(u, order)
    return (1 - u) * egf.egf_inv(denom)


def dfe_higher_oracle_seq(N: int, r: int, u, lam, x=None) -> egf.EgfSeq:
    _check_r(r)
    x = X if x is None else x
    prefactor = egf.egf_pow(_fe_kernel(u, lam, N), r)
    return egf.egf_mul(prefactor, egf.egf_binom_kernel(x, lam, N))


def dfe_oracle_seq(N: int, u, lam, x=None) -> egf.EgfSeq:
    return dfe_higher_oracle_seq(N, 1, u, lam, x)


def dfe_oracle(n: int, u, lam, x=None):
    """Entry n of the generating function of h_{n,lam}(x|u)."""
    return dfe_oracle_seq(n, u, lam, x)[n]


def dfe_higher_numbers_oracle(r: int, u, lam, N: int) -> egf.EgfSeq:
    _check_r(r)
    return egf.egf_pow(_fe_kernel(u, lam, N), r)


def dfe_higher_oracle(n: int, r: int, u, lam, x=None):
    return dfe_higher_oracle_seq(n, r, u, lam, x)[n]


def deg_bernoulli_oracle_seq(N: int, lam, x=None) -> egf.EgfSeq:
    x = X if x is None else x
    lam = Fraction(lam)
    # (E - 1)/t has entries (1|lam)_{n+1} / (n+1)
    quot = egf.EgfSeq(genfall(1, lam, n + 1) / (n + 1) for n in range(N + 1))
    return egf.egf_mul(egf.egf_inv(quot), egf.egf_binom_kernel(x, lam, N))


def deg_genocchi_oracle_seq(N: int, lam, x=None) -> egf.EgfSeq:
    x = X if x is None else x
    denom = egf.egf_binom_kernel(1, lam, N) + egf.one(N)
    two_t_over = egf.mul_t(2 * egf.egf_inv(denom))
    return egf.egf_mul(two_t_over, egf.egf_binom_kernel(x, lam, N))


def classical_fe_oracle_seq(N: int, u, r: int = 1, x=None) -> egf.EgfSeq:
    return dfe_higher_oracle_seq(N, r, u, 0, x)
