"""
Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial lives in a fixed ambient ring described by an ordered tuple of
variable names. Each variable may carry a denominator ``d``: a stored
exponent ``e`` then stands for ``var^(e/d)``. This is how the Jones
polynomial, which can have half-integer powers of ``t``, is kept in an
integral ring (stored exponents are powers of ``t^(1/2)``).

Values are immutable and hashable; arithmetic is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

try:
    import flint
    from flint.utils.flint_exceptions import DomainError
except ImportError:  # pragma: no cover - pure Python fallback
    flint = None

__all__ = [
    "LaurentPoly",
    "InexactDivisionError",
    "divide_exact",
    "is_positive",
    "substitute",
    "canonical_text",
    "parse_poly",
]

Exponents = tuple[int, ...]

# operand-size product above which multiplication and division go through FLINT
FAST_PATH_THRESHOLD = 4096


class InexactDivisionError(ArithmeticError):
    """Raised when a quotient does not exist in the Laurent ring."""


class LaurentPoly:
    __slots__ = ("variables", "denominators", "_terms", "_hash")

    def __init__(
        self,
        variables: Iterable[str],
        terms: Mapping[Exponents, int] | None = None,
        denominators: Iterable[int] | None = None,
    ):
        self.variables: tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if denominators is None:
            self.denominators: tuple[int, ...] = (1,) * len(self.variables)
        else:
            self.denominators = tuple(int(d) for d in denominators)
            if len(self.denominators) != len(self.variables) or min(self.denominators, default=1) < 1:
                raise ValueError("denominators must be positive, one per variable")
        clean: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent vector {exps} does not match variables {self.variables}")
            if coeff:
                clean[exps] = clean.get(exps, 0) + int(coeff)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables, denominators=None) -> LaurentPoly:
        return cls(variables, {}, denominators)

    @classmethod
    def constant(cls, value: int, variables, denominators=None) -> LaurentPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value}, denominators)

    @classmethod
    def monomial(cls, exponents: Exponents, variables, coeff: int = 1, denominators=None) -> LaurentPoly:
        return cls(variables, {tuple(exponents): coeff}, denominators)

    @classmethod
    def variable(cls, name: str, variables, power: int = 1, denominators=None) -> LaurentPoly:
        """The monomial ``name^power`` (power counted in stored units)."""
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return cls(variables, {tuple(exps): 1}, denominators)

    def _like(self, terms: Mapping[Exponents, int]) -> LaurentPoly:
        return LaurentPoly(self.variables, terms, self.denominators)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``±`` a single monomial, the units of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def min_exponents(self) -> Exponents:
        return tuple(min(e[i] for e in self._terms) for i in range(len(self.variables)))

    def max_exponents(self) -> Exponents:
        return tuple(max(e[i] for e in self._terms) for i in range(len(self.variables)))

    def coefficient(self, exponents: Exponents) -> int:
        return self._terms.get(tuple(exponents), 0)

    # -- arithmetic -------------------------------------------------------

    def _check_ring(self, other: LaurentPoly) -> None:
        if self.variables != other.variables or self.denominators != other.denominators:
            raise ValueError(
                f"variable sets differ: {self.variables}/{self.denominators} "
                f"vs {other.variables}/{other.denominators}"
            )

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._check_ring(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables, self.denominators)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return self._like({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) == 1 or len(self._terms) == 1:
            big, small = (self, other) if len(other._terms) == 1 else (other, self)
            (e0, c0), = small._terms.items()
            return self._like({tuple(a + b for a, b in zip(e, e0)): c * c0 for e, c in big._terms.items()})
        if flint is not None and self.variables and len(self._terms) * len(other._terms) > FAST_PATH_THRESHOLD:
            return _flint_mul(self, other)
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit():
                raise InexactDivisionError(f"cannot invert non-unit {canonical_text(self)}")
            (e, c), = self._terms.items()
            return self._like({tuple(-x for x in e): c}) ** (-k)
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return LaurentPoly.constant(1, self.variables, self.denominators) if result is None else result

    def shift(self, exponents: Exponents) -> LaurentPoly:
        """Multiply by the monomial with the given exponent vector."""
        return self._like({tuple(a + b for a, b in zip(e, exponents)): c for e, c in self._terms.items()})

    def __truediv__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return divide_exact(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.variables, self.denominators)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.denominators == other.denominators
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, self.denominators, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({canonical_text(self)!r}, variables={self.variables})"

    def __str__(self) -> str:
        return canonical_text(self)


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``r * q == p``.

    Long division on lexicographic leading terms. Any exact quotient has its
    support inside the box ``[min(p) - min(q), max(p) - max(q)]`` (Newton
    polytopes add under multiplication), so a quotient term leaving that box
    proves the division inexact and keeps the loop finite.
    """
    p._check_ring(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return p
    if q.is_monomial():
        (eq, cq), = q.items()
        if any(c % cq for _, c in p.items()):
            raise InexactDivisionError(f"{canonical_text(p)} is not divisible by {canonical_text(q)}")
        return p._like({tuple(a - b for a, b in zip(e, eq)): c // cq for e, c in p.items()})

    if flint is not None and len(p) * len(q) > FAST_PATH_THRESHOLD:
        return _flint_divide(p, q)

    lo = tuple(a - b for a, b in zip(p.min_exponents(), q.min_exponents()))
    hi = tuple(a - b for a, b in zip(p.max_exponents(), q.max_exponents()))
    if any(a > b for a, b in zip(lo, hi)):
        raise InexactDivisionError(f"{canonical_text(p)} is not divisible by {canonical_text(q)}")

    q_terms = list(q.items())
    lead_q = max(q_terms)
    lead_e, lead_c = lead_q
    remainder = p.terms
    quotient: dict[Exponents, int] = {}
    while remainder:
        e = max(remainder)
        c = remainder[e]
        if c % lead_c:
            raise InexactDivisionError(f"{canonical_text(p)} is not divisible by {canonical_text(q)}")
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if any(s < l or s > h for s, l, h in zip(shift, lo, hi)):
            raise InexactDivisionError(f"{canonical_text(p)} is not divisible by {canonical_text(q)}")
        factor = c // lead_c
        quotient[shift] = factor
        for eq, cq in q_terms:
            key = tuple(a + b for a, b in zip(eq, shift))
            value = remainder.get(key, 0) - factor * cq
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return p._like(quotient)


def _flint_context(p: LaurentPoly):
    return flint.fmpz_mpoly_ctx.get(p.variables, "lex")


def _to_flint(p: LaurentPoly, offset: Exponents):
    ctx = _flint_context(p)
    return ctx.from_dict({tuple(a - b for a, b in zip(e, offset)): c for e, c in p.items()})


def _from_flint(f, like: LaurentPoly, offset: Exponents) -> LaurentPoly:
    return like._like({tuple(a + b for a, b in zip(e, offset)): int(c) for e, c in f.to_dict().items()})


def _flint_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    lp, lq = p.min_exponents(), q.min_exponents()
    offset = tuple(a + b for a, b in zip(lp, lq))
    return _from_flint(_to_flint(p, lp) * _to_flint(q, lq), p, offset)


def _flint_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    # After shifting both to have all minimal exponents zero, no variable divides
    # the shifted divisor, so Laurent divisibility equals polynomial divisibility.
    lp, lq = p.min_exponents(), q.min_exponents()
    try:
        quotient = _to_flint(p, lp) / _to_flint(q, lq)
    except (DomainError, ZeroDivisionError):
        raise InexactDivisionError(f"{canonical_text(p)} is not divisible by {canonical_text(q)}") from None
    return _from_flint(quotient, p, tuple(a - b for a, b in zip(lp, lq)))


def is_positive(p: LaurentPoly) -> bool:
    """Nonzero with every coefficient strictly positive."""
    return bool(p) and all(c > 0 for _, c in p.items())


def substitute(p: LaurentPoly, assignment: Mapping[str, LaurentPoly]) -> LaurentPoly:
    """Image of ``p`` under the ring map sending each variable to ``assignment[var]``.

    Variables that occur with negative exponents must map either to units, or
    to elements that divide the image exactly: negative powers of non-units
    are cleared by a monomial shift and divided out with :func:`divide_exact`.
    ``InexactDivisionError`` signals a non-invertible assignment.
    """
    missing = [v for v in p.variables if v not in assignment]
    if missing:
        raise ValueError(f"no assignment for variables {missing}")
    values = [assignment[v] for v in p.variables]
    if not values:
        raise ValueError("cannot infer the target ring of a substitution without variables")
    target = values[0]
    for v in values:
        target._check_ring(v)
    if not p:
        return LaurentPoly.zero(target.variables, target.denominators)

    lows = p.min_exponents()
    clear = tuple(
        -lo if lo < 0 and not val.is_unit() else 0 for lo, val in zip(lows, values)
    )
    power_cache: dict[tuple[int, int], LaurentPoly] = {}

    def power(i: int, k: int) -> LaurentPoly:
        key = (i, k)
        if key not in power_cache:
            power_cache[key] = values[i] ** k
        return power_cache[key]

    image = LaurentPoly.zero(target.variables, target.denominators)
    for exps, coeff in p.items():
        term = LaurentPoly.constant(coeff, target.variables, target.denominators)
        for i, e in enumerate(exps):
            e += clear[i]
            if e:
                term = term * power(i, e)
        image = image + term
    divisor = LaurentPoly.constant(1, target.variables, target.denominators)
    for i, k in enumerate(clear):
        if k:
            divisor = divisor * power(i, k)
    try:
        return divide_exact(image, divisor)
    except InexactDivisionError as exc:
        raise InexactDivisionError(f"non-invertible assignment for {canonical_text(p)}") from exc


# -- canonical text ---------------------------------------------------------


def _exponent_text(e: int, den: int) -> str:
    f = Fraction(e, den)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _sort_key(exps: Exponents):
    return (sum(exps), exps)


def canonical_text(p: LaurentPoly) -> str:
    """Render ``p`` as ``term ( ' ' ('+'|'-') ' ' term )*`` in ascending graded-lex order.

    Every variable factor is written ``var^exp``; a unit coefficient is omitted
    unless the term is a constant.
    """
    if not p:
        return "0"
    parts: list[str] = []
    for exps in sorted((e for e, _ in p.items()), key=_sort_key):
        coeff = p.coefficient(exps)
        factors = [
            f"{v}^{_exponent_text(e, d)}"
            for v, e, d in zip(p.variables, exps, p.denominators)
            if e
        ]
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not parts:
            parts.append(("-" if coeff < 0 else "") + body)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(parts)


_SEPARATOR = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+)(?:/(\d+))?)?$")


def parse_poly(text: str, variables, denominators=None) -> LaurentPoly:
    """Inverse of :func:`canonical_text` for the given ambient ring."""
    variables = tuple(variables)
    result = LaurentPoly.zero(variables, denominators)
    dens = result.denominators
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].lstrip()
    chunks = _SEPARATOR.split(text)
    signed_terms = [(sign, chunks[0])]
    for op, term in zip(chunks[1::2], chunks[2::2]):
        signed_terms.append((1 if op == "+" else -1, term))

    terms: dict[Exponents, int] = {}
    for s, term in signed_terms:
        coeff = s
        exps = [0] * len(variables)
        for factor in term.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
                continue
            m = _FACTOR.match(factor)
            if not m or m.group(1) not in variables:
                raise ValueError(f"malformed token {factor!r} in {text!r}")
            i = variables.index(m.group(1))
            power = Fraction(int(m.group(2) or 1), int(m.group(3) or 1)) * dens[i]
            if power.denominator != 1:
                raise ValueError(f"exponent of {factor!r} not representable with denominator {dens[i]}")
            exps[i] += int(power)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(variables, terms, dens)
