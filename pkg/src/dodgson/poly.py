"""Sparse multivariate polynomials over exact rationals.

These polynomials carry the symbolic variables used to nudge degenerate
matrices: every matrix entry in the condensation pipeline is one.  The
representation is a mapping

    Monomial = ((var, exp), ...)     sorted by var index, all exps > 0
    terms    = {Monomial: Fraction}  no zero coefficients stored

so the zero polynomial is the empty mapping and equality is plain dict
equality.  Variables are identified by small non-negative integers and
display as "x0", "x1", ...; fresh indices are handed out consecutively by
the repair layer and never reused within a run.

Division is single-divisor multivariate division under graded
lexicographic order ("x0" largest) and demands a zero remainder: in a
sound condensation every division is exact, so a nonzero remainder means
the pipeline itself is broken and raises InexactDivisionError rather than
degrading to rational functions.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Monomial = tuple[tuple[int, int], ...]

_CONST_MONO: Monomial = ()


class DivisorZeroError(ZeroDivisionError):
    """Exact division by the identically-zero polynomial."""


class InexactDivisionError(ArithmeticError):
    """Division left a nonzero remainder; the calling pipeline is unsound."""


class UnboundVariableError(LookupError):
    """Evaluation point does not bind every variable of the polynomial."""


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    # merge of var-sorted pair tuples
    out: list[tuple[int, int]] = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b as a monomial, or None when some exponent would go negative."""
    exps = dict(a)
    for var, exp in b:
        have = exps.get(var, 0)
        if have < exp:
            return None
        if have == exp:
            del exps[var]
        else:
            exps[var] = have - exp
    return tuple(sorted(exps.items()))


def _grlex_key(mono: Monomial, width: int) -> tuple[int, tuple[int, ...]]:
    # Total degree first, then the dense exponent row: tuple comparison of
    # (e0, e1, ...) is exactly lex with x0 > x1 > ... among equal degrees.
    dense = [0] * width
    total = 0
    for var, exp in mono:
        dense[var] = exp
        total += exp
    return total, tuple(dense)


def _width(monos: Iterable[Monomial]) -> int:
    return 1 + max((var for m in monos for var, _ in m), default=-1)


class Poly:
    """An immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        cleaned: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    cleaned[mono] = c
        self._terms = cleaned

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> Poly:
        # Internal fast path: terms already canonical (Fraction coefficients,
        # no zeros).  Skips the validating pass of __init__.
        p = object.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def const(cls, value: Fraction | int | str) -> Poly:
        c = Fraction(value)
        return cls({_CONST_MONO: c}) if c else cls()

    @classmethod
    def variable(cls, index: int) -> Poly:
        if index < 0:
            raise ValueError("variable indices are non-negative")
        return cls({((index, 1),): Fraction(1)})

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_CONST_MONO}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; ValueError when symbolic."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {_CONST_MONO}:
            return self._terms[_CONST_MONO]
        raise ValueError(f"not a constant polynomial: {self}")

    def variables(self) -> set[int]:
        return {var for mono in self._terms for var, _ in mono}

    def degree(self) -> int:
        """Total degree; 0 for constants including the zero polynomial."""
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other: Poly | Fraction | int) -> Poly:
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other: Poly | Fraction | int) -> Poly:
        other = self._coerce(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = out.get(mono)
            value = coeff if value is None else value + coeff
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Poly | Fraction | int) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Poly | Fraction | int) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other: Poly | Fraction | int) -> Poly:
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                value = out.get(mono)
                value = c1 * c2 if value is None else value + c1 * c2
                if value:
                    out[mono] = value
                else:
                    del out[mono]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def exact_div(self, den: Poly) -> Poly:
        """Quotient q with q * den == self, exactly.

        Raises DivisorZeroError for den == 0 and InexactDivisionError when
        no such polynomial quotient exists.  The fail-fast step (leading
        term of the remainder not divisible by the divisor's leading term)
        is only a valid exactness test under a genuine monomial order,
        hence the graded-lex key.
        """
        if den.is_zero():
            raise DivisorZeroError("exact division by the zero polynomial")
        if self.is_zero():
            return Poly.zero()
        width = max(_width(self._terms), _width(den._terms))

        # The remainder's leading monomial strictly decreases each step, so
        # keep candidates in a max-heap (keys negated for heapq) and skip
        # entries that a subtraction already cancelled.
        def heap_key(mono: Monomial) -> tuple[int, tuple[int, ...]]:
            total, dense = _grlex_key(mono, width)
            return -total, tuple(-e for e in dense)

        lead_den = max(den._terms, key=lambda m: _grlex_key(m, width))
        den_coeff = den._terms[lead_den]
        quotient: dict[Monomial, Fraction] = {}
        rem = dict(self._terms)
        heap = [(heap_key(m), m) for m in rem]
        heapq.heapify(heap)
        while rem:
            lead = heapq.heappop(heap)[1]
            if lead not in rem:
                continue
            mono = _mono_div(lead, lead_den)
            if mono is None:
                raise InexactDivisionError(
                    f"({self}) is not divisible by ({den})"
                )
            coeff = rem[lead] / den_coeff
            quotient[mono] = coeff
            for dm, dc in den._terms.items():
                key = _mono_mul(mono, dm)
                old = rem.get(key)
                val = -coeff * dc if old is None else old - coeff * dc
                if val:
                    if old is None:
                        heapq.heappush(heap, (heap_key(key), key))
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return Poly._raw(quotient)

    def evaluate(self, point: Mapping[int, Fraction]) -> Fraction:
        """Total substitution; every variable of self must be bound."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for var, exp in mono:
                try:
                    value *= point[var] ** exp
                except KeyError:
                    raise UnboundVariableError(
                        f"no binding for x{var} in evaluation point"
                    ) from None
            total += value
        return total

    # -- canonical text ------------------------------------------------------

    def _sorted_terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        width = _width(self._terms)
        for mono in sorted(self._terms, key=lambda m: _grlex_key(m, width), reverse=True):
            yield mono, self._terms[mono]

    def to_text(self) -> str:
        """Graded-lex descending form, e.g. "-55*x0 + 213".  Re-parseable."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for i, (mono, coeff) in enumerate(self._sorted_terms()):
            mag = -coeff if coeff < 0 else coeff
            factors = [
                f"x{var}" if exp == 1 else f"x{var}^{exp}" for var, exp in mono
            ]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag), *factors])
            if i == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")
_NUMBER = re.compile(r"[+-]?\d+(?:\.\d+)?(?:/\d+)?$")


def parse_poly(text: str) -> Poly:
    """Parse the canonical text form back into a Poly.

    Accepts exactly what to_text emits, plus harmless slack (any rational
    literal as a coefficient, missing "*" between coefficient and first
    variable is not allowed).  Raises ValueError on malformed input.
    """
    from .rational import parse_rational

    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Poly.zero()
    # Normalize to a list of (sign, term-body) pairs.  Signs only occur at
    # term boundaries: exponents and variable indices are unsigned.
    if not s.startswith(("+", "-")):
        s = "+" + s
    parts = re.split(r"\s*([+-])\s*", s)
    # re.split yields ['', sign, body, sign, body, ...]
    if parts[0] != "" or len(parts) < 3 or len(parts) % 2 == 0:
        raise ValueError(f"malformed polynomial text: {text!r}")
    total = Poly.zero()
    for sign, body in zip(parts[1::2], parts[2::2]):
        if not body.strip():
            raise ValueError(f"malformed polynomial text: {text!r}")
        coeff = Fraction(1)
        mono: dict[int, int] = {}
        saw_coeff = False
        for token in body.strip().split("*"):
            token = token.strip()
            factor = _FACTOR.match(token)
            if factor:
                var, exp = int(factor.group(1)), int(factor.group(2) or 1)
                if exp <= 0 or var in mono:
                    raise ValueError(f"malformed term {body!r} in {text!r}")
                mono[var] = exp
            elif _NUMBER.match(token) and not saw_coeff and not mono:
                coeff = parse_rational(token)
                saw_coeff = True
            else:
                raise ValueError(f"malformed term {body!r} in {text!r}")
        if sign == "-":
            coeff = -coeff
        total = total + Poly({tuple(sorted(mono.items())): coeff})
    return total
