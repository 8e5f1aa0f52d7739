"""Variation of the tangent variety as the base point moves.

Work in the space V_k of degree-k forms in z1..zn with its monomial
coordinate basis.  The map mu sends an affine base point y to the
coefficient vector of the lowest defining equation B_{m+1}(y; .) in
V_{m+1}.  Its differential at the origin (under the normalization
f(1, 0, ..., 0) = 1, with f_{2m+1} = 0) has the closed form

    dB_k/dy_i |_0 = df_{k+1}/dt_i - f_k * df_1/dt_i
        - sum_j dA_k/dx_j(f_1..f_m) * (df_{j+1}/dt_i - f_j * df_1/dt_i),

implemented in dmu_formula and cross-checked by dmu_jet, which replays
the whole B_{m+1} pipeline over first-order jets and never touches the
formula.  Variation is maximal when dmu has rank n and its image meets
the tangent space of the GL(n) coordinate-change orbit (spanned by the
forms z_i * dh/dz_j) only in 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .eco import build_family
from .errors import InvalidInput, NormalizationViolated
from .jets import Jet1, restrict_to_line_jets
from .linalg import QMatrix, span_intersection
from .lines import Hypersurface, vmrt_equations
from .poly import SparsePoly, monomials_of_degree

_ZERO = Fraction(0)


class MonomialBasis:
    """Ordered monomial basis of the degree-k forms in z1..zn (grevlex, descending)."""

    __slots__ = ("n", "degree", "variables", "monomials", "_index")

    def __init__(self, n: int, degree: int):
        if n < 1 or degree < 0:
            raise InvalidInput("need n >= 1 and degree >= 0")
        self.n = n
        self.degree = degree
        self.variables = tuple(f"z{i}" for i in range(1, n + 1))
        self.monomials = tuple(monomials_of_degree(n, degree))
        self._index = {exp: i for i, exp in enumerate(self.monomials)}

    @property
    def size(self) -> int:
        return len(self.monomials)

    def index(self, exp) -> int:
        return self._index[tuple(exp)]

    def __repr__(self):
        return f"MonomialBasis(n={self.n}, degree={self.degree}, size={self.size})"


def coeff_vector(p: SparsePoly, basis: MonomialBasis) -> QMatrix:
    """Column of coordinates of a homogeneous form in the basis order."""
    if p.vars != basis.variables:
        raise InvalidInput(f"expected variables {basis.variables}")
    if not p.is_homogeneous(basis.degree):
        raise InvalidInput(f"polynomial is not homogeneous of degree {basis.degree}")
    col = [_ZERO] * basis.size
    for exp, c in p.terms.items():
        col[basis.index(exp)] = c
    return QMatrix.from_columns([col])


def vector_to_poly(column: Sequence[Fraction], basis: MonomialBasis) -> SparsePoly:
    """Inverse of coeff_vector."""
    if len(column) != basis.size:
        raise InvalidInput("column height does not match the basis")
    return SparsePoly(
        basis.variables,
        {exp: Fraction(c) for exp, c in zip(basis.monomials, column)},
    )


def mu(hyp: Hypersurface, point: Sequence) -> QMatrix:
    """Coefficient vector of the lowest defining equation at a base point."""
    system = vmrt_equations(hyp, point)
    return coeff_vector(system.equations[0], MonomialBasis(hyp.n, hyp.m + 1))


def _normalized_parts(hyp: Hypersurface) -> list[SparsePoly]:
    parts = hyp.graded_parts()
    if not (parts[0].is_constant and parts[0].constant_value() == 1):
        raise NormalizationViolated("requires f(1, 0, ..., 0) = 1")
    # convention f_{2m+1} = 0, so the k+1 index below never overflows
    parts.append(SparsePoly.zero(parts[0].vars))
    return parts


def dmu_formula(hyp: Hypersurface) -> QMatrix:
    """Differential of mu at the origin by the closed-form derivative identity."""
    m, n = hyp.m, hyp.n
    parts = _normalized_parts(hyp)
    fam = build_family(m)
    k = m + 1
    weights = [fam.tail_partials[(k, j)].compose(parts[1 : m + 1]) for j in range(1, m + 1)]
    basis = MonomialBasis(n, k)
    columns = []
    for i in range(1, n + 1):
        zi = f"z{i}"
        d1 = parts[1].partial(zi)
        col = parts[k + 1].partial(zi) - parts[k] * d1
        for j in range(1, m + 1):
            col = col - weights[j - 1] * (parts[j + 1].partial(zi) - parts[j] * d1)
        columns.append(coeff_vector(col, basis).column(0))
    return QMatrix.from_columns(columns)


def dmu_jet(hyp: Hypersurface) -> QMatrix:
    """Differential of mu at the origin by first-order jets (independent oracle).

    Column i replays the full equation pipeline at the jet base point
    y = eps*e_i: restriction, inversion of a_0 = 1 + eps*(...), and the
    certificate tail evaluated on jets.  The derivative component of the
    resulting jet is dB_{m+1}/dy_i at the origin.
    """
    m, n = hyp.m, hyp.n
    parts = hyp.graded_parts()
    if not (parts[0].is_constant and parts[0].constant_value() == 1):
        raise NormalizationViolated("requires f(1, 0, ..., 0) = 1")
    fam = build_family(m)
    basis = MonomialBasis(n, m + 1)
    columns = []
    for i in range(n):
        jets = [(_ZERO, Fraction(1) if j == i else _ZERO) for j in range(n)]
        a = restrict_to_line_jets(hyp.f, jets)
        inv0 = a[0].inverse()
        ratios = [a[j] * inv0 for j in range(1, m + 1)]
        tail: Jet1 = fam.tail_polys[m + 1].compose(ratios)
        bk = a[m + 1] * inv0 - tail
        columns.append(coeff_vector(bk.derivative, basis).column(0))
    return QMatrix.from_columns(columns)


def orbit_tangent(h: SparsePoly, degree: int | None = None) -> QMatrix:
    """Spanning set of the tangent space to the GL(n) orbit of a form.

    Columns are the coefficient vectors of z_i * dh/dz_j for all (i, j) in
    row-major order; they span the orbit tangent space at h and there are
    n^2 of them (not necessarily independent).
    """
    n = len(h.vars)
    if degree is None:
        degree = h.homogeneous_degree()
    elif not h.is_homogeneous(degree):
        raise InvalidInput(f"form is not homogeneous of degree {degree}")
    basis = MonomialBasis(n, degree)
    gens = [SparsePoly.variable(h.vars, v) for v in h.vars]
    columns = []
    for i in range(n):
        for j in range(n):
            columns.append(coeff_vector(gens[i] * h.partial(h.vars[j]), basis).column(0))
    return QMatrix.from_columns(columns)


@dataclass(frozen=True)
class VariationReport:
    """Exact linear-algebra verdict on the variation at the origin."""

    n: int
    m: int
    rank_dmu: int
    dim_orbit: int
    dim_intersection: int
    maximal: bool

    def basis_sizes(self) -> dict[str, int]:
        return {
            "target_space": comb(self.n + self.m, self.m + 1),
            "dmu_columns": self.n,
            "orbit_columns": self.n * self.n,
        }


def variation_report(hyp: Hypersurface) -> VariationReport:
    """Rank of dmu, orbit-tangent dimension and their intersection at the origin.

    Requires f_0 = 1.  Variation is maximal when dmu is injective (rank n)
    and its image meets the orbit tangent space only in 0.
    """
    parts = _normalized_parts(hyp)
    m, n = hyp.m, hyp.n
    fam = build_family(m)
    differential = dmu_formula(hyp)
    lowest = parts[m + 1] - fam.tail_polys[m + 1].compose(parts[1 : m + 1])
    orbit = orbit_tangent(lowest, degree=m + 1)
    rank_dmu = differential.rank()
    dim_orbit = orbit.rank()
    dim_intersection = span_intersection(differential, orbit)
    return VariationReport(
        n=n,
        m=m,
        rank_dmu=rank_dmu,
        dim_orbit=dim_orbit,
        dim_intersection=dim_intersection,
        maximal=(rank_dmu == n and dim_intersection == 0),
    )


def explicit_family(n: int, m: int, b, c) -> Hypersurface:
    """The two concrete families realizing maximal variation (n >= 4).

    For m = 2:
        f = t0^4 + b*(t1^3 + ... + tn^3)*t0 + (t1^4 + ... + tn^4)
            + c * sum over 4-subsets of t_{i1} t_{i2} t_{i3} t_{i4}.
    For m >= 3:
        f = t0^2m + b*(t1^{m+1} + ... + tn^{m+1})*t0^{m-1}
            + c*t1*t2*t3*(t4^{m-1} + ... + tn^{m-1})*t0^{m-2}
            + t1^2m + ... + tn^2m.
    """
    b, c = Fraction(b), Fraction(c)
    if not isinstance(n, int) or n < 4:
        raise InvalidInput("need n >= 4")
    if not isinstance(m, int) or not 2 <= m <= n - 1:
        raise InvalidInput("need 2 <= m <= n-1")
    if b == 0 or c == 0:
        raise InvalidInput("parameters b and c must be nonzero")
    tvars = tuple(f"t{i}" for i in range(n + 1))
    terms: dict[tuple, Fraction] = {}

    def put(exp, coeff):
        terms[tuple(exp)] = terms.get(tuple(exp), _ZERO) + coeff

    if m == 2:
        put((4,) + (0,) * n, Fraction(1))
        for i in range(1, n + 1):
            exp = [0] * (n + 1)
            exp[0], exp[i] = 1, 3
            put(exp, b)
            exp = [0] * (n + 1)
            exp[i] = 4
            put(exp, Fraction(1))
        for subset in combinations(range(1, n + 1), 4):
            exp = [0] * (n + 1)
            for i in subset:
                exp[i] = 1
            put(exp, c)
    else:
        put((2 * m,) + (0,) * n, Fraction(1))
        for i in range(1, n + 1):
            exp = [0] * (n + 1)
            exp[0], exp[i] = m - 1, m + 1
            put(exp, b)
            exp = [0] * (n + 1)
            exp[i] = 2 * m
            put(exp, Fraction(1))
        for i in range(4, n + 1):
            exp = [0] * (n + 1)
            exp[0] = m - 2
            exp[1] = exp[2] = exp[3] = 1
            exp[i] += m - 1
            put(exp, c)
    return Hypersurface(SparsePoly(tvars, terms))
