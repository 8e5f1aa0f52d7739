"""Even-contact-order certificates for degree-2m polynomials with constant term 1.

A polynomial 1 + a_1*lam + ... + a_2m*lam^2m is the square of a degree-m
polynomial with constant term 1 exactly when its top coefficients are the
values of fixed weighted-homogeneous polynomials in the bottom ones:
a_k = A_k(a_1, ..., a_m) for k = m+1 .. 2m.  The A_k come from the
half-square recursion

    sigma_0 = 1,  sigma_k = (a_k - sum_{i=1}^{k-1} sigma_i*sigma_{k-i}) / 2,

whose symbolic solutions G_k(t_1..t_m) give sigma_k = G_k(a), and
A_k = sum_l G_l * G_{k-l} (with G_l = 0 for l > m).  Everything divides
only by 2, so the whole certificate stays inside the rationals.

Variable t_i carries weight i; G_k and A_k are weighted homogeneous of
weighted degree k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidInput
from .poly import SparsePoly

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class EcoFamily:
    """Cached symbolic certificate data for one half-degree m.

    root_polys[k] expresses the k-th square-root coefficient in the input
    coefficients (index 0 is the constant 1); tail_polys[k] predicts the
    k-th top coefficient for k = m+1 .. 2m; tail_partials[(k, j)] is the
    partial derivative of tail_polys[k] in its j-th argument.
    """

    m: int
    variables: tuple[str, ...]
    root_polys: tuple[SparsePoly, ...]
    tail_polys: dict[int, SparsePoly]
    tail_partials: dict[tuple[int, int], SparsePoly]


@dataclass(frozen=True)
class EcoCertificate:
    """Outcome of certifying one coefficient vector (a_1..a_2m).

    residuals[j] is a_{m+1+j} minus its predicted value; passed means all
    residuals vanish, equivalently the polynomial is a perfect square.
    """

    sigma: tuple[Fraction, ...]
    residuals: tuple[Fraction, ...]
    passed: bool

    @property
    def m(self) -> int:
        return len(self.sigma)


@lru_cache(maxsize=None)
def build_family(m: int) -> EcoFamily:
    """Solve the half-square recursion symbolically for half-degree m."""
    if not isinstance(m, int) or m < 1:
        raise InvalidInput("m must be a positive integer")
    variables = tuple(f"t{i}" for i in range(1, m + 1))
    one = SparsePoly.constant(variables, 1)
    g: list[SparsePoly] = [one]
    for k in range(1, m + 1):
        acc = SparsePoly.variable(variables, f"t{k}")
        for i in range(1, k):
            acc = acc - g[i] * g[k - i]
        g.append(acc * _HALF)
    tails: dict[int, SparsePoly] = {}
    for k in range(m + 1, 2 * m + 1):
        acc = SparsePoly.zero(variables)
        for ell in range(k - m, m + 1):
            acc = acc + g[ell] * g[k - ell]
        tails[k] = acc
    partials = {
        (k, j): tails[k].partial(f"t{j}")
        for k in tails
        for j in range(1, m + 1)
    }
    return EcoFamily(m, variables, tuple(g), tails, partials)


def certify(coeffs: Sequence) -> EcoCertificate:
    """Run the certificate recursion on (a_1, ..., a_2m).

    sigma solves the lower half exactly (so the square of the certified
    root always matches a_1..a_m); the residuals compare the upper half
    against its predicted values and vanish iff 1 + sum a_k lam^k is the
    square of a polynomial of degree at most m.
    """
    a = [Fraction(x) for x in coeffs]
    if not a or len(a) % 2:
        raise InvalidInput("coefficient vector must have even positive length 2m")
    m = len(a) // 2
    sigma = [Fraction(1)]
    for k in range(1, m + 1):
        s = a[k - 1]
        for i in range(1, k):
            s -= sigma[i] * sigma[k - i]
        sigma.append(s * _HALF)
    residuals = []
    for k in range(m + 1, 2 * m + 1):
        pred = Fraction(0)
        for ell in range(k - m, m + 1):
            pred += sigma[ell] * sigma[k - ell]
        residuals.append(a[k - 1] - pred)
    return EcoCertificate(
        sigma=tuple(sigma[1:]),
        residuals=tuple(residuals),
        passed=all(r == 0 for r in residuals),
    )


def is_weighted_homogeneous(p: SparsePoly, degree: int, weights: Sequence[int]) -> bool:
    """True iff every monomial satisfies sum(weight_j * exponent_j) == degree."""
    if len(weights) != len(p.vars):
        raise InvalidInput("one weight per variable required")
    if any(w <= 0 for w in weights):
        raise InvalidInput("weights must be positive")
    return all(
        sum(w * e for w, e in zip(weights, exp)) == degree for exp in p.terms
    )
