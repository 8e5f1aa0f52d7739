"""First-order jets over the polynomial ring: value + eps*derivative, eps^2 = 0.

A Jet1 carries a pair of SparsePoly in the same variables.  Running an
exact rational pipeline on jets yields the pipeline's directional
derivative for free, which gives an oracle for hand-derived derivative
formulas that never shares code with them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import InvalidInput
from .poly import SparsePoly

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Jet1:
    """Truncated first-order jet with SparsePoly components."""

    __slots__ = ("value", "derivative")

    def __init__(self, value: SparsePoly, derivative: SparsePoly):
        if value.vars != derivative.vars:
            raise InvalidInput("jet components must share a variable list")
        self.value = value
        self.derivative = derivative

    @classmethod
    def constant(cls, variables: Sequence[str], value, derivative=0) -> "Jet1":
        return cls(
            SparsePoly.constant(variables, value),
            SparsePoly.constant(variables, derivative),
        )

    @classmethod
    def lift(cls, p: SparsePoly) -> "Jet1":
        return cls(p, SparsePoly.zero(p.vars))

    def _coerce(self, other) -> "Jet1":
        if isinstance(other, Jet1):
            return other
        if isinstance(other, SparsePoly):
            return Jet1.lift(other)
        if isinstance(other, (int, Fraction)):
            return Jet1.constant(self.value.vars, other)
        raise InvalidInput(f"cannot mix Jet1 with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return Jet1(self.value + o.value, self.derivative + o.derivative)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Jet1(self.value - o.value, self.derivative - o.derivative)

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __neg__(self):
        return Jet1(-self.value, -self.derivative)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Jet1(self.value * other, self.derivative * other)
        o = self._coerce(other)
        return Jet1(
            self.value * o.value,
            self.value * o.derivative + self.derivative * o.value,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidInput("jet power must be a non-negative integer")
        result = Jet1.constant(self.value.vars, 1)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "Jet1":
        """Inverse when the value part is an invertible scalar (Leibniz-exact)."""
        if not self.value.is_constant:
            raise InvalidInput("jet inversion needs a constant value part")
        v = self.value.constant_value()
        if v == 0:
            raise InvalidInput("jet with zero value part is not invertible")
        inv = 1 / v
        return Jet1(
            SparsePoly.constant(self.value.vars, inv),
            self.derivative * (-inv * inv),
        )

    def __eq__(self, other):
        if not isinstance(other, Jet1):
            return NotImplemented
        return self.value == other.value and self.derivative == other.derivative

    def __repr__(self):
        return f"Jet1({self.value} + eps*({self.derivative}))"


def evaluate_on_jets(p: SparsePoly, args: Sequence[Jet1]) -> Jet1:
    """Evaluate a polynomial at jet arguments (generic compose)."""
    return p.compose(list(args))


def restrict_to_line_jets(f: SparsePoly, point_jets: Sequence[tuple]) -> list[Jet1]:
    """Line-restriction coefficients when the base point is a jet.

    `point_jets` holds one (value, derivative) Fraction pair per affine
    coordinate.  Substitutes t0 = 1, t_i = y_i + lam*z_i with y_i the given
    jet scalars and symbolic z, and returns the list of lam^k coefficients
    as Jet1 over z1..zn.  This is the same binomial expansion as the plain
    restriction, replayed through jet arithmetic.
    """
    n = len(f.vars) - 1
    if len(point_jets) != n:
        raise InvalidInput(f"need {n} jet coordinates")
    d = f.homogeneous_degree()
    y = [(Fraction(v), Fraction(dv)) for v, dv in point_jets]
    zvars = tuple(f"z{i}" for i in range(1, n + 1))
    vals: list[dict] = [dict() for _ in range(d + 1)]
    ders: list[dict] = [dict() for _ in range(d + 1)]

    def jet_pow(v, dv, p):
        if p == 0:
            return (_ONE, _ZERO)
        if v == 0:
            # eps^p with eps^2 = 0
            return (_ZERO, dv) if p == 1 else (_ZERO, _ZERO)
        return (v ** p, p * v ** (p - 1) * dv)

    for exp, c in f.terms.items():
        options = []
        dead = False
        for i in range(1, n + 1):
            e = exp[i]
            vi, di = y[i - 1]
            opts = []
            for k in range(e + 1):
                pv, pd = jet_pow(vi, di, e - k)
                if pv == 0 and pd == 0:
                    continue
                b = comb(e, k)
                opts.append((k, b * pv, b * pd))
            if not opts:
                dead = True
                break
            options.append(opts)
        if dead:
            continue
        stack = [((), _ONE, _ZERO)]
        for opts in options:
            nxt = []
            for zpart, av, ad in stack:
                for k, bv, bd in opts:
                    nxt.append((zpart + (k,), av * bv, av * bd + ad * bv))
            stack = nxt
        for zexp, av, ad in stack:
            k = sum(zexp)
            if av:
                vals[k][zexp] = vals[k].get(zexp, _ZERO) + c * av
            if ad:
                ders[k][zexp] = ders[k].get(zexp, _ZERO) + c * ad
    return [
        Jet1(SparsePoly(zvars, vals[k]), SparsePoly(zvars, ders[k]))
        for k in range(d + 1)
    ]
