from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import sympy
from sympy import ZZ, Poly


def _trim(low: int, coeffs: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    values = [int(c) for c in coeffs]
    start = 0
    while start < len(values) and values[start] == 0:
        start += 1
    end = len(values)
    while end > start and values[end - 1] == 0:
        end -= 1
    if start == end:
        return 0, ()
    return low + start, tuple(values[start:end])


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """Integer Laurent polynomial ``sum coeffs[i] * var^(low + i)``.

    Stored trimmed, so equal polynomials compare equal; the zero polynomial
    has ``low == 0`` and no coefficients.
    """

    low: int
    coeffs: tuple[int, ...]
    var: str = field(default="s", compare=False)

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0, var: str = "s"):
        low, coeffs = _trim(low, coeffs)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "var", var)

    # construction

    @classmethod
    def zero(cls, var: str = "s") -> "LaurentPoly":
        return cls((), 0, var)

    @classmethod
    def one(cls, var: str = "s") -> "LaurentPoly":
        return cls((1,), 0, var)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1, var: str = "s") -> "LaurentPoly":
        return cls((coefficient,), degree, var)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], var: str = "s") -> "LaurentPoly":
        nonzero = {d: c for d, c in terms.items() if c}
        if not nonzero:
            return cls.zero(var)
        low, high = min(nonzero), max(nonzero)
        return cls([nonzero.get(d, 0) for d in range(low, high + 1)], low, var)

    @classmethod
    def from_poly(cls, poly: Poly, var: str | None = None) -> "LaurentPoly":
        name = var or str(poly.gen)
        if poly.is_zero:
            return cls.zero(name)
        return cls([int(c) for c in reversed(poly.all_coeffs())], 0, name)

    @classmethod
    def from_expr(cls, expr, var: str = "s") -> "LaurentPoly":
        """Read a sympy expression or string such as ``(s-1)**2*(s-4)`` or ``s^-1 + 3``."""
        if isinstance(expr, str):
            expr = sympy.sympify(expr.replace("^", "**"))
        sym = sympy.Symbol(var)
        terms: dict[int, int] = {}
        for term in sympy.Add.make_args(sympy.expand(expr)):
            coeff, exp = term.as_coeff_exponent(sym)
            if not (coeff.is_Integer and exp.is_Integer):
                raise ValueError(f"{term} is not an integer Laurent monomial in {var}")
            terms[int(exp)] = terms.get(int(exp), 0) + int(coeff)
        return cls.from_terms(terms, var)

    @classmethod
    def from_json(cls, data: Mapping, var: str = "s") -> "LaurentPoly":
        return cls([int(c) for c in data["coeffs"]], int(data["lowest"]), var)

    # shape

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Degree of the canonical form, ``-1`` for zero."""
        return len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def coefficient(self, degree: int) -> int:
        i = degree - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # arithmetic

    def _other(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly((other,), 0, self.var)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._other(other)
        if other is NotImplemented:
            return other
        terms = self.terms()
        for d, c in other.terms().items():
            terms[d] = terms.get(d, 0) + c
        return LaurentPoly.from_terms(terms, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([-c for c in self.coeffs], self.low, self.var)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero(self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.low + other.low, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers are only defined for units")
        result = LaurentPoly.one(self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var^k``."""
        return LaurentPoly(self.coeffs, self.low + k, self.var)

    def with_var(self, var: str) -> "LaurentPoly":
        return LaurentPoly(self.coeffs, self.low, var)

    def normalized(self) -> "LaurentPoly":
        """Canonical representative up to ``+-var^k``: lowest degree 0, lowest coefficient positive."""
        if self.is_zero():
            return self
        sign = 1 if self.coeffs[0] > 0 else -1
        return LaurentPoly([sign * c for c in self.coeffs], 0, self.var)

    def reciprocal(self) -> "LaurentPoly":
        """``f(var^-1)``."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.high, self.var)

    def evaluate(self, value):
        """Exact value at an integer or ``Fraction`` point (any number type works)."""
        if self.is_zero():
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        if self.low >= 0:
            return acc * value**self.low
        return Fraction(acc) / Fraction(value) ** (-self.low)

    # sympy bridge

    def symbol(self) -> sympy.Symbol:
        return sympy.Symbol(self.var)

    def to_poly(self) -> Poly:
        """The polynomial part after shifting the lowest term to degree 0."""
        return Poly(list(reversed(self.coeffs)) or [0], self.symbol(), domain=ZZ)

    def to_expr(self):
        s = self.symbol()
        return sympy.Add(*[c * s**d for d, c in self.terms().items()])

    # rendering

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for d, c in sorted(self.terms().items()):
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = self.var if d == 1 else f"{self.var}^{d}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"lowest": self.low, "coeffs": [str(c) for c in self.coeffs]}


def gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Canonical gcd in ``Z[s^+-1]``; ``gcd(f, 0)`` is ``f`` normalized."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    return LaurentPoly.from_poly(f.to_poly().gcd(g.to_poly()), f.var).normalized()


def _quotient(g: LaurentPoly, f: LaurentPoly) -> LaurentPoly | None:
    q, r = g.to_poly().div(f.to_poly())
    if not r.is_zero:
        return None
    coeffs = q.all_coeffs()
    if not all(c.is_Integer for c in coeffs):
        return None
    return LaurentPoly([int(c) for c in reversed(coeffs)], g.low - f.low, g.var)


def divides(f: LaurentPoly, g: LaurentPoly) -> bool:
    """Whether ``g = f*q`` for some ``q`` in ``Z[s^+-1]``."""
    if f.is_zero():
        raise ValueError("division by the zero polynomial")
    if g.is_zero():
        return True
    return _quotient(g, f) is not None


def exact_quotient(g: LaurentPoly, f: LaurentPoly) -> LaurentPoly:
    """``g / f``, raising ``ArithmeticError`` unless the division is exact."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_zero():
        return g
    q = _quotient(g, f)
    if q is None:
        raise ArithmeticError(f"{f} does not divide {g}")
    return q


def multiplicity(f: LaurentPoly, g: LaurentPoly) -> int:
    """Largest ``k`` with ``g^k | f``; ``f`` nonzero and ``g`` not a unit."""
    if f.is_zero():
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    if g.is_zero() or g.is_unit():
        raise ValueError(f"multiplicity of {g} is undefined")
    k = 0
    while True:
        q = _quotient(f, g)
        if q is None:
            return k
        f, k = q, k + 1


def resultant(f: LaurentPoly, g: LaurentPoly) -> int:
    """Integer resultant of the polynomial parts of ``f`` and ``g`` (``g`` read in ``f``'s variable)."""
    return int(sympy.resultant(f.to_poly(), g.with_var(f.var).to_poly()))


def power_transform(f: LaurentPoly, r: int, var: str = "s") -> LaurentPoly:
    """``f^(r)``: roots raised to the ``r``-th power, leading coefficient to the ``r``-th.

    Computed exactly as ``Res_t(f(t), t^r - s)``.
    """
    if f.is_zero():
        raise ValueError("power transform of the zero polynomial")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if r == 1:
        return f.with_var(var).normalized()
    t, s = sympy.Symbol("_t"), sympy.Symbol(var)
    ft = Poly(list(reversed(f.coeffs)), t, domain=ZZ)
    res = sympy.resultant(ft.as_expr(), t**r - s, t)
    return LaurentPoly.from_poly(Poly(res, s, domain=ZZ), var).normalized()


def is_reciprocal(f: LaurentPoly) -> bool:
    if f.is_zero():
        raise ValueError("reciprocality of the zero polynomial")
    rev = tuple(reversed(f.coeffs))
    return f.coeffs == rev or f.coeffs == tuple(-c for c in rev)


def cyclotomic_power(n: int, var: str = "s") -> LaurentPoly:
    """``var^n - 1``."""
    return LaurentPoly([-1] + [0] * (n - 1) + [1], 0, var)
