"""Exact checkers for the identities satisfied by the degenerate families.

Every check compares canonical :class:`Poly` (or Fraction) values; a report
records the first index where the two sides differ.  Inadmissible parameter
points are reported as skipped rather than raised.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import stirling
from .errors import BadD, BadOrder, DefrostError, RootOfUnityLikeU, UEqualsOne, UZero
from .families import (
    DEFAULT,
    Families,
    deg_genocchi_oracle_seq,
    dfe_oracle_seq,
)
from .numeric import X, Poly, affine, fmt_rational, genfall


class IdentityId(str, enum.Enum):
    T1_expansion = "T1_expansion"
    T1_shift = "T1_shift"
    T1_delta = "T1_delta"
    T2_reflection = "T2_reflection"
    T3_distribution = "T3_distribution"
    T4_addition = "T4_addition"
    T5_h_to_H = "T5_h_to_H"
    T6_H_to_h = "T6_H_to_h"
    T7_order_reduction = "T7_order_reduction"
    R_genocchi = "R_genocchi"
    L_lambda_zero_limit = "L_lambda_zero_limit"
    D_derivative_classical = "D_derivative_classical"
    B_bernoulli_limit = "B_bernoulli_limit"


PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def _text(v):
    if isinstance(v, Poly):
        return v.to_strings()
    return fmt_rational(v)


def _params_text(d):
    return {("lambda" if k == "lam" else k): _param_text(v) for k, v in d.items()}


def _param_text(v):
    if isinstance(v, Fraction):
        return fmt_rational(v)
    if isinstance(v, (list, tuple)):
        return [_param_text(a) for a in v]
    return v


@dataclass
class Failure:
    point: dict
    n: int
    lhs: object
    rhs: object

    def to_dict(self):
        return {
            "point": _params_text(self.point),
            "n": self.n,
            "lhs": _text(self.lhs),
            "rhs": _text(self.rhs),
        }


@dataclass
class VerifyReport:
    identity: IdentityId
    params: dict
    status: str = PASS
    first_failure: Failure | None = None
    reason: str | None = None
    checked: int = 0

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        out = {
            "identity": IdentityId(self.identity).value,
            "params": _params_text(self.params),
            "status": self.status,
        }
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure.to_dict()
        if self.reason is not None:
            out["reason"] = self.reason
        return out


class _Run:
    """Accumulates comparisons for one report, keeping the first mismatch."""

    def __init__(self, identity, params):
        self.report = VerifyReport(IdentityId(identity), dict(params))

    def compare(self, n, lhs, rhs, **point):
        self.report.checked += 1
        if lhs != rhs and self.report.first_failure is None:
            self.report.status = FAIL
            self.report.first_failure = Failure(point, n, lhs, rhs)
        return lhs == rhs

    @property
    def failed(self):
        return self.report.status == FAIL

    def done(self):
        return self.report


def skipped(identity, params, reason) -> VerifyReport:
    return VerifyReport(IdentityId(identity), dict(params), SKIPPED, reason=reason)


def _u_ok(u):
    if u == 1:
        raise UEqualsOne()


# Theorem 1

def check_T1_expansion(u, lam, maxN, fam: Families = DEFAULT) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _u_ok(u)
    run = _Run(IdentityId.T1_expansion, dict(u=u, lam=lam, max_n=maxN))
    lhs = fam.dfe_poly_seq(maxN, u, lam)
    rhs = dfe_oracle_seq(maxN, u, lam)
    for n in range(maxN + 1):
        run.compare(n, lhs[n], rhs[n], u=u, lam=lam)
    return run.done()


def check_T1_shift(u, lam, maxN, fam: Families = DEFAULT) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _u_ok(u)
    run = _Run(IdentityId.T1_shift, dict(u=u, lam=lam, max_n=maxN))
    seq = fam.dfe_poly_seq(maxN, u, lam)
    for n, h in enumerate(seq):
        lhs = h(X + 1) - u * h
        rhs = (1 - u) * genfall(X, lam, n)
        run.compare(n, lhs, rhs, u=u, lam=lam)
    return run.done()


def check_T1_delta(u, lam, maxN, fam: Families = DEFAULT) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _u_ok(u)
    run = _Run(IdentityId.T1_delta, dict(u=u, lam=lam, max_n=maxN))
    seq = fam.dfe_poly_seq(maxN, u, lam)
    numbers = fam.dfe_numbers(u, lam, maxN)
    for n, h in enumerate(seq):
        lhs = h(1) - u * numbers[n]
        rhs = (1 - u) if n == 0 else Fraction(0)
        run.compare(n, lhs, rhs, u=u, lam=lam)
    return run.done()


# Theorem 2

def check_T2_reflection(u, lam, maxN, fam: Families = DEFAULT) -> VerifyReport:
    """(-1)^n h_{n,-lam}(-x|u) = h_{n,lam}(x+1|1/u), coefficientwise in x."""
    u, lam = Fraction(u), Fraction(lam)
    if u == 0:
        raise UZero()
    _u_ok(u)
    run = _Run(IdentityId.T2_reflection, dict(u=u, lam=lam, max_n=maxN))
    neg = fam.dfe_poly_seq(maxN, u, -lam)
    inv = fam.dfe_poly_seq(maxN, 1 / u, lam)
    neg_numbers = fam.dfe_numbers(u, -lam, maxN)
    for n in range(maxN + 1):
        sign = (-1) ** n
        run.compare(n, sign * neg[n](-X), inv[n](X + 1), u=u, lam=lam)
        # x = 0 corollary of the general statement
        run.compare(n, sign * neg_numbers[n], inv[n](1), u=u, lam=lam, x=0)
    return run.done()


# Theorem 3

def distribution_rhs(n, u, lam, d, inner_seq) -> Poly:
    """d^n (u^-1 - 1)/(1 - u^d) sum_a u^(d-a) h_{n,lam/d}((a+x)/d | u^d)."""
    pref = Fraction(d) ** n * (1 / u - 1) / (1 - u ** d)
    total = sum(
        (u ** (d - a) * inner_seq[n](affine(Fraction(a, d), Fraction(1, d))) for a in range(d)),
        Poly(),
    )
    return pref * total


def _t3_admissible(u, d):
    if d < 1:
        raise BadD(f"d must be >= 1, got {d}")
    _u_ok(u)
    if u == 0:
        raise UZero()
    if u ** d == 1:
        raise RootOfUnityLikeU(f"u^d = 1 for u={fmt_rational(u)}, d={d}")


def check_T3_distribution(u, lam, d, maxN, fam: Families = DEFAULT, _run=None) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _t3_admissible(u, d)
    run = _run or _Run(IdentityId.T3_distribution, dict(u=u, lam=lam, d=d, max_n=maxN))
    lhs = fam.dfe_poly_seq(maxN, u, lam)
    inner = fam.dfe_poly_seq(maxN, u ** d, lam / d)
    for n in range(maxN + 1):
        run.compare(n, lhs[n], distribution_rhs(n, u, lam, d, inner), u=u, lam=lam, d=d)
    return run.done()


# Theorem 4 (second factor read as (y|lam)_{n-l})

T4_SAMPLES = ((Fraction(1, 2), Fraction(1, 3)), (Fraction(-1), Fraction(2)), (Fraction(0), None))


def check_T4_addition(u, lam, r, maxN, fam: Families = DEFAULT, _run=None) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _u_ok(u)
    if r < 1:
        raise BadOrder(f"order must be >= 1, got {r}")
    run = _run or _Run(IdentityId.T4_addition, dict(u=u, lam=lam, r=r, max_n=maxN))
    seq = fam.dfe_higher_poly_seq(maxN, r, u, lam)
    for x, y in T4_SAMPLES:
        # y = None: identity in a symbolic y (the polynomial variable)
        yv = X if y is None else y
        falls = [genfall(yv, lam, k) for k in range(maxN + 1)]
        at_x = [p(x) for p in seq]
        for n in range(maxN + 1):
            lhs = seq[n](x + yv)
            rhs = sum(
                (comb(n, l) * at_x[l] * falls[n - l] for l in range(n + 1)), Fraction(0)
            )
            run.compare(n, lhs, rhs, u=u, lam=lam, r=r, x=x, y="symbolic" if y is None else y)
    # symbolic x with a fixed y
    y = Fraction(1, 3)
    falls = [genfall(y, lam, k) for k in range(maxN + 1)]
    for n in range(maxN + 1):
        lhs = seq[n](X + y)
        rhs = sum((comb(n, l) * falls[n - l] * seq[l] for l in range(n + 1)), Poly())
        run.compare(n, lhs, rhs, u=u, lam=lam, r=r, x="symbolic", y=y)
    return run.done()


# Theorems 5 and 6 (free index m)

def check_T5_h_to_H(u, lam, r, maxN, fam: Families = DEFAULT, _run=None) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _u_ok(u)
    run = _run or _Run(IdentityId.T5_h_to_H, dict(u=u, lam=lam, r=r, max_n=maxN))
    got = stirling.h_to_H(fam.dfe_higher_poly_seq(maxN, r, u, lam), lam)
    want = fam.classical_fe_higher_seq(maxN, r, u)
    for m in range(maxN + 1):
        run.compare(m, got[m], want[m], u=u, lam=lam, r=r)
    return run.done()


def check_T6_H_to_h(u, lam, r, maxN, fam: Families = DEFAULT, _run=None) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _u_ok(u)
    run = _run or _Run(IdentityId.T6_H_to_h, dict(u=u, lam=lam, r=r, max_n=maxN))
    got = stirling.H_to_h(fam.classical_fe_higher_seq(maxN, r, u), lam)
    want = fam.dfe_higher_poly_seq(maxN, r, u, lam)
    for m in range(maxN + 1):
        run.compare(m, got[m], want[m], u=u, lam=lam, r=r)
    return run.done()


# Theorem 7

def lower_order_seq(maxN, r, u, lam, fam: Families = DEFAULT) -> list:
    """h^{(r)} for r >= 1, and (x|lam)_n for the order-0 convention."""
    if r == 0:
        return [genfall(X, lam, n) for n in range(maxN + 1)]
    return fam.dfe_higher_poly_seq(maxN, r, u, lam)


def check_T7_order_reduction(u, lam, r, maxN, fam: Families = DEFAULT, _run=None) -> VerifyReport:
    u, lam = Fraction(u), Fraction(lam)
    _u_ok(u)
    if r < 1:
        raise BadOrder(f"order must be >= 1, got {r}")
    run = _run or _Run(IdentityId.T7_order_reduction, dict(u=u, lam=lam, r=r, max_n=maxN))
    top = fam.dfe_higher_poly_seq(maxN, r, u, lam)
    low = lower_order_seq(maxN, r - 1, u, lam, fam)
    for n in range(maxN + 1):
        lhs = (top[n](X + 1) - u * top[n]) / (1 - u)
        run.compare(n, lhs, low[n], u=u, lam=lam, r=r)
    return run.done()


# Relatives and limits

def check_R_genocchi(lam, maxN, fam: Families = DEFAULT) -> VerifyReport:
    lam = Fraction(lam)
    run = _Run(IdentityId.R_genocchi, dict(lam=lam, fixed_u=Fraction(-1), max_n=maxN))
    g = fam.deg_genocchi_poly_seq(maxN + 1, lam)
    h = fam.dfe_poly_seq(maxN, -1, lam)
    oracle = deg_genocchi_oracle_seq(maxN + 1, lam)
    run.compare(0, g[0], Poly(), lam=lam, part="g0")
    for n in range(maxN + 1):
        run.compare(n, g[n + 1], (n + 1) * h[n], lam=lam, part="relation")
        run.compare(n + 1, g[n + 1], oracle[n + 1], lam=lam, part="generating function")
    return run.done()


def limit_at_zero(samples):
    """Value at lam = 0 of the polynomial in lam through ``samples``.

    ``samples`` is a list of ``(lam_j, value_j)`` with distinct nonzero lam_j;
    values may be Fractions or Polys.
    """
    total = Fraction(0)
    for i, (li, vi) in enumerate(samples):
        w = Fraction(1)
        for j, (lj, _) in enumerate(samples):
            if j != i:
                w *= lj / (lj - li)
        total = total + w * vi
    return total


# sample lam values used to extrapolate to lam = 0
def _limit_nodes(count):
    return [Fraction(k, 2) for k in range(1, count + 1)]


def check_L_lambda_zero_limit(u, maxN, fam: Families = DEFAULT, lam=None) -> VerifyReport:
    """h_{n,0} equals H_n, and the lam -> 0 extrapolation of h_{n,lam} equals H_n.

    The coefficients of h_{n,lam}(x|u) are polynomials in lam of degree < n,
    so Lagrange interpolation through n+1 nonzero nodes recovers the limit
    exactly; one extra node confirms the degree bound.
    """
    u = Fraction(u)
    _u_ok(u)
    params = dict(u=u, max_n=maxN)
    if lam is not None:
        params["lam"] = Fraction(lam)
    run = _Run(IdentityId.L_lambda_zero_limit, params)
    classical = fam.classical_fe_seq(maxN, u)
    at_zero = fam.dfe_poly_seq(maxN, u, 0)
    nodes = _limit_nodes(maxN + 2)
    sampled = [fam.dfe_poly_seq(maxN, u, l) for l in nodes]
    for n in range(maxN + 1):
        run.compare(n, at_zero[n], classical[n], u=u, part="lam=0 path")
        pts = [(nodes[j], sampled[j][n]) for j in range(n + 1)]
        run.compare(n, limit_at_zero(pts), classical[n], u=u, part="extrapolated limit")
        extra = nodes[n + 1]
        predicted = limit_at_zero_at(pts, extra)
        run.compare(n, predicted, sampled[n + 1][n], u=u, part="degree bound", lam=extra)
    return run.done()


def limit_at_zero_at(samples, t):
    """Lagrange interpolant through ``samples`` evaluated at ``t``."""
    total = Fraction(0)
    for i, (li, vi) in enumerate(samples):
        w = Fraction(1)
        for j, (lj, _) in enumerate(samples):
            if j != i:
                w *= (t - lj) / (li - lj)
        total = total + w * vi
    return total


def check_D_derivative_classical(u, maxN, fam: Families = DEFAULT, lam=None) -> VerifyReport:
    u = Fraction(u)
    _u_ok(u)
    params = dict(u=u, max_n=maxN)
    if lam is not None:
        params["lam"] = Fraction(lam)
    run = _Run(IdentityId.D_derivative_classical, params)
    H = fam.classical_fe_seq(maxN, u)
    for n in range(1, maxN + 1):
        run.compare(n, H[n].derivative(), n * H[n - 1], u=u)
    return run.done()


BERNOULLI_B0_B6 = (
    Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0),
    Fraction(-1, 30), Fraction(0), Fraction(1, 42),
)


def classical_bernoulli_numbers(N):
    """B_n from sum_{k<=n} C(n+1, k) B_k = 0."""
    B = [Fraction(1)]
    for n in range(1, N + 1):
        B.append(-sum(comb(n + 1, k) * B[k] for k in range(n)) / (n + 1))
    return B


def check_B_bernoulli_limit(maxN, fam: Families = DEFAULT, lam=None) -> VerifyReport:
    params = dict(max_n=maxN)
    if lam is not None:
        params["lam"] = Fraction(lam)
    run = _Run(IdentityId.B_bernoulli_limit, params)
    beta0 = fam.deg_bernoulli_numbers(0, maxN)
    B = classical_bernoulli_numbers(maxN)
    for n in range(min(len(BERNOULLI_B0_B6), maxN + 1)):
        run.compare(n, beta0[n], BERNOULLI_B0_B6[n], part="tabulated")
    for n in range(maxN + 1):
        run.compare(n, beta0[n], B[n], part="classical recurrence")
    at_zero = fam.deg_bernoulli_poly_seq(maxN, 0)
    classical_poly = [
        Poly([comb(n, l) * B[n - l] for l in range(n + 1)]) for n in range(maxN + 1)
    ]
    nodes = _limit_nodes(maxN + 2)
    sampled = [fam.deg_bernoulli_poly_seq(maxN, l) for l in nodes]
    for n in range(maxN + 1):
        run.compare(n, at_zero[n], classical_poly[n], part="lam=0 polynomial")
        pts = [(nodes[j], sampled[j][n]) for j in range(n + 1)]
        run.compare(n, limit_at_zero(pts), classical_poly[n], part="extrapolated limit")
    return run.done()


# Grid runner

@dataclass(frozen=True)
class Grid:
    us: tuple = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(-3, 5))
    lambdas: tuple = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-2, 3))
    orders: tuple = (1, 2, 3)
    ds: tuple = (1, 2, 3, 4)

    def points(self):
        return list(itertools.product(self.us, self.lambdas))


DEFAULT_GRID = Grid()


def _per_order(identity, fn, u, lam, orders, maxN, fam):
    run = _Run(identity, dict(u=u, lam=lam, r=list(orders), max_n=maxN))
    for r in orders:
        fn(u, lam, r, maxN, fam, _run=run)
        if run.failed:
            break
    return run.done()


def _t3_all(u, lam, ds, maxN, fam):
    usable = [d for d in ds if d >= 1 and u ** d != 1]
    dropped = [d for d in ds if d not in usable]
    params = dict(u=u, lam=lam, d=usable, max_n=maxN)
    if dropped:
        params["skipped_d"] = dropped
    if not usable:
        return skipped(IdentityId.T3_distribution, params, "u^d = 1 for every d in the grid")
    run = _Run(IdentityId.T3_distribution, params)
    for d in usable:
        check_T3_distribution(u, lam, d, maxN, fam, _run=run)
        if run.failed:
            break
    return run.done()


def run_identity(identity, u, lam, maxN, grid: Grid = DEFAULT_GRID, fam: Families = DEFAULT):
    identity = IdentityId(identity)
    u, lam = Fraction(u), Fraction(lam)
    base = dict(u=u, lam=lam, max_n=maxN)
    I = IdentityId
    needs_u = identity not in (I.R_genocchi, I.B_bernoulli_limit)
    if needs_u and u == 1:
        report = skipped(identity, base, "u = 1 is not admissible")
    else:
        report = _dispatch(identity, u, lam, maxN, grid, fam, base)
    # every report names its grid point, even where u or lam is unused
    report.params = {"u": u, "lam": lam, **report.params}
    return report


def _dispatch(identity, u, lam, maxN, grid, fam, base):
    I = IdentityId
    try:
        if identity is I.T1_expansion:
            return check_T1_expansion(u, lam, maxN, fam)
        if identity is I.T1_shift:
            return check_T1_shift(u, lam, maxN, fam)
        if identity is I.T1_delta:
            return check_T1_delta(u, lam, maxN, fam)
        if identity is I.T2_reflection:
            if u == 0:
                return skipped(identity, base, "u = 0 has no inverse")
            return check_T2_reflection(u, lam, maxN, fam)
        if identity is I.T3_distribution:
            if u == 0:
                return skipped(identity, base, "u = 0 has no inverse")
            return _t3_all(u, lam, grid.ds, maxN, fam)
        if identity is I.T4_addition:
            return _per_order(identity, check_T4_addition, u, lam, grid.orders, maxN, fam)
        if identity is I.T5_h_to_H:
            return _per_order(identity, check_T5_h_to_H, u, lam, grid.orders, maxN, fam)
        if identity is I.T6_H_to_h:
            return _per_order(identity, check_T6_H_to_h, u, lam, grid.orders, maxN, fam)
        if identity is I.T7_order_reduction:
            return _per_order(identity, check_T7_order_reduction, u, lam, grid.orders, maxN, fam)
        if identity is I.R_genocchi:
            return check_R_genocchi(lam, maxN, fam)
        if identity is I.L_lambda_zero_limit:
            return check_L_lambda_zero_limit(u, maxN, fam, lam=lam)
        if identity is I.D_derivative_classical:
            return check_D_derivative_classical(u, maxN, fam, lam=lam)
        if identity is I.B_bernoulli_limit:
            return check_B_bernoulli_limit(maxN, fam, lam=lam)
    except DefrostError as exc:
        return skipped(identity, base, str(exc))
    raise AssertionError(identity)


def check_all(grid: Grid = DEFAULT_GRID, maxN: int = 12, identities=None,
              fam: Families = DEFAULT) -> list:
    """One report per (identity, grid point), identity-major order."""
    identities = list(IdentityId) if identities is None else [IdentityId(i) for i in identities]
    points = grid.points()
    if not points:
        raise ValueError("grid is empty")
    return [
        run_identity(ident, u, lam, maxN, grid, fam)
        for ident in identities
        for u, lam in points
    ]


def reports_to_json(reports) -> list:
    return [r.to_dict() for r in reports]
