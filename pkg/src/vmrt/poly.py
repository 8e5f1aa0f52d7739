"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent tuples (one slot per variable) to
nonzero Fraction coefficients, together with an ordered tuple of variable
names.  All arithmetic is exact and zero coefficients are never stored.
The canonical term order for printing, coefficient bases and leading-term
logic is graded reverse lexicographic (grevlex), highest term first; it is
fixed globally so every printed or serialized polynomial is deterministic.

Text format (whitespace-insensitive, round-trips through parse/format):

    t0^4 + 2*t1^2*t2^2 - 1/3*t3^4

Terms are joined by '+'/'-', a rational coefficient is attached with '*',
exponents use '^'.  Variables are families like t0..tn or z1..zn; the
parser rejects symbols outside the declared (or inferred) family.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput, ParseError, VariableMismatch

Exponent = tuple  # tuple[int, ...], one entry per variable

_ZERO = Fraction(0)
_ONE = Fraction(1)


def grevlex_key(exp: Exponent):
    """Sort key realizing grevlex: compare total degree, then reversed-negated exponents."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def monomials_of_degree(nvars: int, degree: int) -> list[Exponent]:
    """All exponent tuples of the given total degree, grevlex-descending."""
    if nvars < 1 or degree < 0:
        raise InvalidInput("need nvars >= 1 and degree >= 0")
    out: list[Exponent] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, nvars)
    out.sort(key=grevlex_key, reverse=True)
    return out


class SparsePoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Fraction]):
        self.vars = tuple(variables)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "SparsePoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "SparsePoly":
        c = Fraction(value)
        if c == 0:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "SparsePoly":
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"unknown variable {name!r}")
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): _ONE})

    @classmethod
    def from_terms(cls, variables: Sequence[str], items: Iterable[tuple[Exponent, Fraction]]) -> "SparsePoly":
        acc: dict[Exponent, Fraction] = {}
        nv = len(tuple(variables))
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nv or any(e < 0 for e in exp):
                raise InvalidInput(f"bad exponent tuple {exp} for {nv} variables")
            acc[exp] = acc.get(exp, _ZERO) + Fraction(c)
        return cls(variables, acc)

    # -- predicates and accessors ------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return _ZERO
        if not self.is_constant:
            raise InvalidInput("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self) -> int:
        """Common total degree of all terms; raises if inhomogeneous or zero."""
        if not self.terms:
            raise InvalidInput("zero polynomial has no homogeneous degree")
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            raise InvalidInput(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """True if all terms share one total degree (the zero poly passes any)."""
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return False
        return degree is None or degs.pop() == degree

    def degree_in(self, name: str) -> int:
        """Largest exponent of one variable; -1 for the zero polynomial."""
        i = self._var_index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), _ZERO)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical grevlex-descending order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise InvalidInput("zero polynomial has no leading term")
        exp = max(self.terms, key=grevlex_key)
        return exp, self.terms[exp]

    def _var_index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise VariableMismatch(f"unknown variable {name!r}") from None

    def _check_vars(self, other: "SparsePoly") -> None:
        if self.vars != other.vars:
            raise VariableMismatch(f"variable lists differ: {self.vars} vs {other.vars}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.vars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_vars(other)
        acc = dict(self.terms)
        for exp, c in other.terms.items():
            acc[exp] = acc.get(exp, _ZERO) + c
        return SparsePoly(self.vars, acc)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.vars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return SparsePoly.zero(self.vars)
            return SparsePoly(self.vars, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_vars(other)
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                acc[exp] = acc.get(exp, _ZERO) + c1 * c2
        return SparsePoly(self.vars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidInput("exponent must be a non-negative integer")
        result = SparsePoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.vars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus and substitution -------------------------------------------

    def partial(self, name: str) -> "SparsePoly":
        """Exact formal partial derivative with respect to one variable."""
        i = self._var_index(name)
        acc: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e == 0:
                continue
            new = exp[:i] + (e - 1,) + exp[i + 1:]
            acc[new] = acc.get(new, _ZERO) + c * e
        return SparsePoly(self.vars, acc)

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate at rational arguments, one per variable."""
        if len(values) != len(self.vars):
            raise InvalidInput("wrong number of values")
        vals = [Fraction(v) for v in values]
        pows: list[dict[int, Fraction]] = [{0: _ONE} for _ in vals]
        total = _ZERO
        for exp, c in self.terms.items():
            term = c
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                cache = pows[i]
                if e not in cache:
                    cache[e] = vals[i] ** e
                term *= cache[e]
            total += term
        return total

    def compose(self, args: Sequence):
        """Substitute one ring element per variable (Fraction, SparsePoly, Jet1, ...).

        Arguments only need +, * and integer powers, plus multiplication by
        Fraction, so the same code evaluates coefficients numerically,
        composes with polynomials, or pushes first-order jets through.
        """
        if len(args) != len(self.vars):
            raise InvalidInput("wrong number of substitution arguments")
        if not self.terms:
            return args[0] * 0 if args else _ZERO
        pows: list[dict[int, object]] = [dict() for _ in args]

        def power(i, e):
            cache = pows[i]
            if e not in cache:
                cache[e] = args[i] ** e
            return cache[e]

        total = None
        one = args[0] ** 0
        for exp, c in self.terms.items():
            term = one
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            term = term * c
            total = term if total is None else total + term
        return total

    def substitute(self, assignment: Mapping[str, Fraction]) -> "SparsePoly":
        """Partially evaluate some variables at rationals; the rest survive."""
        idx = {self._var_index(k): Fraction(v) for k, v in assignment.items()}
        keep = [i for i in range(len(self.vars)) if i not in idx]
        new_vars = tuple(self.vars[i] for i in keep)
        acc: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            val = c
            for i, v in idx.items():
                if exp[i]:
                    val *= v ** exp[i]
            if val == 0:
                continue
            new = tuple(exp[i] for i in keep)
            acc[new] = acc.get(new, _ZERO) + val
        return SparsePoly(new_vars, acc)

    def rename(self, new_vars: Sequence[str]) -> "SparsePoly":
        """Same terms over a renamed variable tuple (order preserved)."""
        new_vars = tuple(new_vars)
        if len(new_vars) != len(self.vars):
            raise VariableMismatch("renaming must preserve the variable count")
        return SparsePoly(new_vars, dict(self.terms))

    def exact_div(self, divisor: "SparsePoly") -> "SparsePoly":
        """Exact quotient self / divisor; raises InvalidInput if not divisible."""
        self._check_vars(divisor)
        if divisor.is_zero:
            raise InvalidInput("division by the zero polynomial")
        rem = dict(self.terms)
        quot: dict[Exponent, Fraction] = {}
        d_exp, d_coeff = divisor.leading_term()
        while rem:
            r_exp = max(rem, key=grevlex_key)
            diff = tuple(a - b for a, b in zip(r_exp, d_exp))
            if any(e < 0 for e in diff):
                raise InvalidInput("division is not exact")
            c = rem[r_exp] / d_coeff
            quot[diff] = quot.get(diff, _ZERO) + c
            for exp, k in divisor.terms.items():
                tgt = tuple(a + b for a, b in zip(diff, exp))
                val = rem.get(tgt, _ZERO) - c * k
                if val == 0:
                    rem.pop(tgt, None)
                else:
                    rem[tgt] = val
        return SparsePoly(self.vars, quot)

    # -- printing -------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SparsePoly({format_poly(self)!r}, vars={self.vars})"


def arith(p: SparsePoly, q: SparsePoly, op: str) -> SparsePoly:
    """Dispatch add/sub/mul by name; operands must share a variable list."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise InvalidInput(f"unknown operation {op!r}")


def graded_parts(f: SparsePoly, var: str) -> list[SparsePoly]:
    """Split a homogeneous form by powers of one distinguished variable.

    For f homogeneous of degree d, returns [f_0, ..., f_d] in the remaining
    variables with f = sum(var^(d-k) * f_k) and each f_k homogeneous of
    degree k.  Raises InvalidInput when f is zero or inhomogeneous.
    """
    d = f.homogeneous_degree()
    i = f._var_index(var)
    rest = tuple(v for j, v in enumerate(f.vars) if j != i)
    buckets: list[dict[Exponent, Fraction]] = [dict() for _ in range(d + 1)]
    for exp, c in f.terms.items():
        k = d - exp[i]
        rexp = exp[:i] + exp[i + 1:]
        buckets[k][rexp] = c
    return [SparsePoly(rest, b) for b in buckets]


def assemble_graded(parts: Sequence[SparsePoly], var: str, position: int = 0) -> SparsePoly:
    """Inverse of graded_parts: rebuild sum(var^(d-k) * parts[k])."""
    d = len(parts) - 1
    rest = parts[0].vars
    new_vars = rest[:position] + (var,) + rest[position:]
    acc: dict[Exponent, Fraction] = {}
    for k, part in enumerate(parts):
        for exp, c in part.terms.items():
            full = exp[:position] + (d - k,) + exp[position:]
            acc[full] = acc.get(full, _ZERO) + c
    return SparsePoly(new_vars, acc)


def expand_line_substitution(f: SparsePoly, point: Sequence[Fraction]):
    """Coefficients of f(1, y_1 + s*z_1, ..., y_n + s*z_n) in the line parameter s.

    The direction z stays symbolic: entry k of the returned list is the
    degree-k part in z, as a SparsePoly over z1..zn.  Used by the line
    restriction; kept here so the binomial bookkeeping lives next to the
    term representation.
    """
    n = len(f.vars) - 1
    if len(point) != n:
        raise InvalidInput(f"point must have {n} coordinates")
    d = f.homogeneous_degree()
    y = [Fraction(v) for v in point]
    zvars = tuple(f"z{i}" for i in range(1, n + 1))
    buckets: list[dict[Exponent, Fraction]] = [dict() for _ in range(d + 1)]
    for exp, c in f.terms.items():
        options = []
        for i in range(1, n + 1):
            e = exp[i]
            yi = y[i - 1]
            if yi == 0:
                options.append(((e, _ONE),))
            else:
                options.append(tuple((k, comb(e, k) * yi ** (e - k)) for k in range(e + 1)))
        for combo in product(*options):
            val = c
            for _, w in combo:
                val *= w
            zexp = tuple(k for k, _ in combo)
            bucket = buckets[sum(zexp)]
            bucket[zexp] = bucket.get(zexp, _ZERO) + val
    return [SparsePoly(zvars, b) for b in buckets]


# -- text format --------------------------------------------------------------

_FACTOR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$")
_NUMBER_RE = re.compile(r"^\d+(/\d+)?$")
_FAMILY_RE = re.compile(r"^([tz])(\d+)$")


def format_poly(p: SparsePoly) -> str:
    """Canonical text form: grevlex-descending terms, '+'/'-' separated."""
    if p.is_zero:
        return "0"
    chunks: list[str] = []
    for exp, c in p.sorted_terms():
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(p.vars, exp) if e
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def _infer_variables(names: set[str]) -> tuple[str, ...]:
    if not names:
        raise ParseError("cannot infer variables from a constant polynomial")
    letters = set()
    indices = []
    for nm in names:
        mt = _FAMILY_RE.match(nm)
        if not mt:
            raise ParseError(f"unknown symbol {nm!r} (expected t0..tn or z1..zn)")
        letters.add(mt.group(1))
        indices.append(int(mt.group(2)))
    if len(letters) != 1:
        raise ParseError("mixed variable families; pass an explicit variable list")
    letter = letters.pop()
    start = 0 if letter == "t" else 1
    return tuple(f"{letter}{i}" for i in range(start, max(indices) + 1))


def parse_poly(text: str, variables: Sequence[str] | None = None) -> SparsePoly:
    """Parse the textual polynomial format; inverse of format_poly.

    When `variables` is omitted the list is inferred: symbols must form a
    single family t0..tn (projective coordinates) or z1..zn (directions).
    """
    compact = text.replace("**", "^")
    compact = "".join(compact.split())
    if not compact:
        raise ParseError("empty polynomial text")
    # split into signed terms at top level (no parentheses in this format)
    terms: list[tuple[int, str]] = []
    sign, start = 1, 0
    if compact[0] in "+-":
        sign = -1 if compact[0] == "-" else 1
        start = 1
    cur = []
    i = start
    while i <= len(compact):
        if i == len(compact) or compact[i] in "+-":
            body = "".join(cur)
            if not body:
                raise ParseError(f"dangling sign in {text!r}")
            terms.append((sign, body))
            if i < len(compact):
                sign = -1 if compact[i] == "-" else 1
                cur = []
        else:
            cur.append(compact[i])
        i += 1

    raw: list[tuple[int, dict[str, int], Fraction]] = []
    seen: set[str] = set()
    for sgn, body in terms:
        coeff = _ONE
        powers: dict[str, int] = {}
        for factor in body.split("*"):
            if not factor:
                raise ParseError(f"empty factor in term {body!r}")
            if _NUMBER_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            mt = _FACTOR_RE.match(factor)
            if not mt:
                raise ParseError(f"bad factor {factor!r}")
            name, exp = mt.group(1), int(mt.group(2) or 1)
            powers[name] = powers.get(name, 0) + exp
            seen.add(name)
        raw.append((sgn, powers, coeff))

    if variables is None:
        variables = _infer_variables(seen)
    variables = tuple(variables)
    unknown = seen - set(variables)
    if unknown:
        raise ParseError(f"unknown symbols {sorted(unknown)}; variables are {list(variables)}")

    items = []
    for sgn, powers, coeff in raw:
        exp = tuple(powers.get(v, 0) for v in variables)
        items.append((exp, sgn * coeff))
    return SparsePoly.from_terms(variables, items)
