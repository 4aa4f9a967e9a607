"""Appell polynomial families driven by exponential generating seeds.

A family A_n(x) is determined by the series of its initial values
sum_n A_n(0) z^n / n!, the seed, which must have a nonzero constant term
so that it is invertible among truncated series. Binomial convolution of
two families multiplies their seeds; the k-fold convolution raises a seed
to the k-th power. The families here are the classical Bernoulli, Euler,
and probabilists' Hermite polynomials plus moment-generated families
E[(x + Y)^n] for catalog distributions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .distributions import Distribution, format_distribution, parse_distribution
from .exact_core import Polynomial, binomial, cnn_table
from .series import (
    EGFSeries,
    egf_coefficient,
    series_div,
    series_from_moments,
    series_mul,
    series_one,
    series_pow,
    series_scale,
)

__all__ = [
    "AppellSeed",
    "AppellSequence",
    "appell_eval",
    "appell_polynomial",
    "binomial_convolve",
    "kfold",
    "theorem12_check",
    "identity_seed",
    "bernoulli_seed",
    "euler_seed",
    "hermite_seed",
    "appell_moment_link",
    "family_seed",
]


@dataclass(frozen=True)
class AppellSeed:
    """Generating seed of an Appell family: the truncated series of initial
    values A_n(0) z^n / n!, required to have a nonzero constant term."""

    name: str
    g0: EGFSeries

    def __post_init__(self):
        if self.g0.coeffs[0] == 0:
            raise ValueError("Appell seed requires a nonzero constant term")


@dataclass(frozen=True)
class AppellSequence:
    """Evaluated view of the polynomial family determined by a seed."""

    seed: AppellSeed

    @property
    def order(self) -> int:
        return self.seed.g0.order


def appell_eval(seq: AppellSequence, n: int, x: Fraction | int) -> Fraction:
    """A_n(x) = sum_k C(n, k) A_k(0) x^(n-k); n must not exceed the seed's
    truncation order."""
    if n > seq.order:
        raise ValueError(f"family truncated at order {seq.order}, got n={n}")
    x = Fraction(x)
    g0 = seq.seed.g0
    return sum(
        (binomial(n, k) * egf_coefficient(g0, k) * x ** (n - k) for k in range(n + 1)),
        Fraction(0),
    )


def appell_polynomial(seq: AppellSequence, n: int) -> Polynomial:
    """A_n as a polynomial in x."""
    if n > seq.order:
        raise ValueError(f"family truncated at order {seq.order}, got n={n}")
    g0 = seq.seed.g0
    return Polynomial(
        [binomial(n, d) * egf_coefficient(g0, n - d) for d in range(n + 1)]
    )


def binomial_convolve(a: AppellSeed, c: AppellSeed) -> AppellSeed:
    """Binomial convolution of two families: the seed product."""
    return AppellSeed(f"{a.name}*{c.name}", series_mul(a.g0, c.g0))


def kfold(a: AppellSeed, k: int) -> AppellSeed:
    """k-fold binomial convolution: the seed raised to the k-th power.
    The 0-fold convolution is the identity family x^n."""
    if k == 0:
        return identity_seed(a.g0.order)
    if k == 1:
        return a
    return AppellSeed(f"{a.name}^{k}", series_pow(a.g0, k))


def theorem12_check(seed: AppellSeed, n: int, N: int, x: Fraction | int = 0):
    """Compare the full sum over k = 0..N of A_n(k; x) with the weighted
    short sum over k = 0..n; requires N >= n.

    Returns an IdentityReport; the identity is two-sided, so the report's
    middle member is None.
    """
    from .sums import make_report  # sums sits above this module in the layering

    if N < n:
        raise ValueError(f"requires N >= n, got n={n}, N={N}")
    values = []
    power = series_one(seed.g0.order)
    for _ in range(N + 1):
        values.append(appell_eval(AppellSequence(AppellSeed(seed.name, power)), n, x))
        power = series_mul(power, seed.g0)
    lhs = sum(values, Fraction(0))
    weights = cnn_table(n, N).values
    rhs = sum((weights[k] * values[k] for k in range(n + 1)), Fraction(0))
    params = {"family": seed.name, "n": n, "N": N, "x": Fraction(x)}
    return make_report("theorem12", params, lhs, None, rhs)


@lru_cache(maxsize=None)
def identity_seed(order: int) -> AppellSeed:
    """Seed of the identity family A_n(x) = x^n."""
    return AppellSeed("identity", series_one(order))


@lru_cache(maxsize=None)
def bernoulli_seed(order: int) -> AppellSeed:
    """Seed z/(e^z - 1), built by inverting (e^z - 1)/z, whose coefficients
    1/(j+1)! start from an invertible constant term."""
    ratio = EGFSeries(tuple(Fraction(1, factorial(j + 1)) for j in range(order + 1)))
    return AppellSeed("bernoulli", series_div(series_one(order), ratio))


@lru_cache(maxsize=None)
def euler_seed(order: int) -> AppellSeed:
    """Seed 2/(e^z + 1), the classical Euler normalization. A numerator of z
    instead of 2 would kill the constant term and admit no Appell seed."""
    denom = EGFSeries(
        tuple(Fraction(2) if j == 0 else Fraction(1, factorial(j)) for j in range(order + 1))
    )
    return AppellSeed("euler", series_div(series_scale(series_one(order), 2), denom))


@lru_cache(maxsize=None)
def hermite_seed(order: int) -> AppellSeed:
    """Seed e^(-z^2/2): the probabilists' Hermite polynomials."""
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(order // 2 + 1):
        coeffs[2 * k] = Fraction((-1) ** k, 2**k * factorial(k))
    return AppellSeed("hermite", EGFSeries(tuple(coeffs)))


def appell_moment_link(dist: Distribution, order: int) -> AppellSeed:
    """Seed of the moment family A_n(x) = E[(x + Y)^n] for a catalog law."""
    return AppellSeed(f"moment:{format_distribution(dist)}", series_from_moments(dist, order))


def family_seed(name: str, order: int) -> AppellSeed:
    """Parse the family string syntax used by the CLI: ``bernoulli``,
    ``euler``, ``hermite``, or ``moment:<dist>``."""
    if name == "bernoulli":
        return bernoulli_seed(order)
    if name == "euler":
        return euler_seed(order)
    if name == "hermite":
        return hermite_seed(order)
    if name.startswith("moment:"):
        return appell_moment_link(parse_distribution(name[len("moment:") :]), order)
    raise ValueError(f"unknown Appell family: {name!r}")
