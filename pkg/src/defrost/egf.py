"""Truncated exponential generating functions.

An :class:`EgfSeq` stores ``a_n = n! [t^n] A(t)`` for ``n = 0..order``, so
products are binomial convolutions.  Entries are Fractions or Polys.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import LambdaZero, ZeroConstantTerm
from .numeric import Poly, genfall

DEFAULT_ORDER = 32


def _norm(v):
    return v if isinstance(v, Poly) else Fraction(v)


class EgfSeq:
    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(_norm(v) for v in entries)
        if not entries:
            raise ValueError("an EgfSeq needs at least one entry")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("EgfSeq is immutable")

    @property
    def order(self) -> int:
        return len(self.entries) - 1

    @property
    def kind(self) -> str:
        return "poly" if any(isinstance(v, Poly) for v in self.entries) else "scalar"

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, n):
        return self.entries[n]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, EgfSeq):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"EgfSeq({list(self.entries)!r})"

    def __add__(self, other):
        n = min(self.order, other.order)
        return EgfSeq(self.entries[k] + other.entries[k] for k in range(n + 1))

    def __sub__(self, other):
        n = min(self.order, other.order)
        return EgfSeq(self.entries[k] - other.entries[k] for k in range(n + 1))

    def __mul__(self, other):
        if isinstance(other, EgfSeq):
            return egf_mul(self, other)
        return EgfSeq(v * other for v in self.entries)

    def __rmul__(self, other):
        return EgfSeq(other * v for v in self.entries)

    def truncate(self, order: int) -> "EgfSeq":
        return EgfSeq(self.entries[: order + 1])


def constant(c, order: int) -> EgfSeq:
    return EgfSeq([c] + [0] * order)


def one(order: int) -> EgfSeq:
    return constant(1, order)


def identity_series(order: int) -> EgfSeq:
    """The series ``t``."""
    return EgfSeq([0, 1] + [0] * (order - 1)) if order >= 1 else EgfSeq([0])


def mul_t(a: EgfSeq) -> EgfSeq:
    """Multiply by ``t``: entry n becomes ``n * a_{n-1}``; order is kept."""
    return EgfSeq([0] + [n * a.entries[n - 1] for n in range(1, a.order + 1)])


def egf_binom_kernel(x, lam, order: int) -> EgfSeq:
    """EGF of ``(1 + lam t)^(x/lam)``: entries ``(x|lam)_m``; ``e^{xt}`` at lam = 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return EgfSeq(genfall(x, lam, m) for m in range(order + 1))


def egf_mul(a: EgfSeq, b: EgfSeq) -> EgfSeq:
    n_max = min(a.order, b.order)
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            acc = acc + comb(n, k) * a.entries[k] * b.entries[n - k]
        out.append(acc)
    return EgfSeq(out)


def egf_inv(a: EgfSeq) -> EgfSeq:
    if a.kind != "scalar":
        raise TypeError("egf_inv needs scalar coefficients")
    a0 = a.entries[0]
    if a0 == 0:
        raise ZeroConstantTerm()
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, a.order + 1):
        s = sum(comb(n, k) * a.entries[k] * b[n - k] for k in range(1, n + 1))
        b.append(-inv0 * s)
    return EgfSeq(b)


def egf_pow(a: EgfSeq, r: int) -> EgfSeq:
    if r < 1:
        raise ValueError("r must be at least 1")
    result = None
    base = a
    while r:
        if r & 1:
            result = base if result is None else egf_mul(result, base)
        r >>= 1
        if r:
            base = egf_mul(base, base)
    return result


def egf_compose(a: EgfSeq, inner: EgfSeq) -> EgfSeq:
    """EGF of ``A(g(t))`` for an inner series with zero constant term."""
    if inner.entries[0] != 0:
        raise ValueError("inner series must have zero constant term")
    order = min(a.order, inner.order)
    # Horner in raw coefficients c_k = a_k / k!
    acc = constant(a.entries[order] / factorial(order), order)
    for k in range(order - 1, -1, -1):
        acc = egf_mul(acc, inner) + constant(a.entries[k] / factorial(k), order)
    return acc


def scaled_exp_series(lam, order: int) -> EgfSeq:
    """EGF of ``(e^{lam t} - 1)/lam``: entries 0, then lam^(n-1)."""
    lam = Fraction(lam)
    if lam == 0:
        raise LambdaZero()
    return EgfSeq([0] + [lam ** (n - 1) for n in range(1, order + 1)])


def scaled_log_series(lam, order: int) -> EgfSeq:
    """EGF of ``log(1 + lam t)/lam``: entries 0, then (-1)^(n-1) (n-1)! lam^(n-1)."""
    lam = Fraction(lam)
    if lam == 0:
        raise LambdaZero()
    return EgfSeq(
        [0] + [(-1) ** (n - 1) * factorial(n - 1) * lam ** (n - 1) for n in range(1, order + 1)]
    )


def egf_compose_scaled_exp(a: EgfSeq, lam, order: int | None = None) -> EgfSeq:
    order = a.order if order is None else min(order, a.order)
    return egf_compose(a.truncate(order), scaled_exp_series(lam, order))


def egf_compose_scaled_log(a: EgfSeq, lam, order: int | None = None) -> EgfSeq:
    order = a.order if order is None else min(order, a.order)
    return egf_compose(a.truncate(order), scaled_log_series(lam, order))
