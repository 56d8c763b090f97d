"""Exact scalars over the rationals and prime fields.

Rational values are plain :class:`fractions.Fraction` objects.  Prime-field
values are :class:`Residue` objects carrying their modulus.  A
:class:`FieldSpec` ties the two together and is what the rest of the package
passes around.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union


class ScalarError(ValueError):
    """Malformed scalar text or an operation outside a field's domain."""


class Residue:
    """An element of the prime field F_p, stored as a reduced residue."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ScalarError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Residue]

_INT = r"-?[0-9]+"
_SCALAR_RE = re.compile(rf"^({_INT})(?:/([0-9]+))?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q when ``modulus`` is None, else F_modulus."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not _is_prime(self.modulus):
            raise ScalarError(f"modulus {self.modulus} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, tag: str) -> "FieldSpec":
        """Parse ``Q``, ``F5``, ``F 5`` or ``Fp``-style tags."""
        t = tag.strip()
        if t == "Q":
            return cls.rationals()
        m = re.fullmatch(r"F\s*([0-9]+)", t)
        if not m:
            raise ScalarError(f"unknown field tag {tag!r}")
        return cls.prime(int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction, Residue or scalar text into this field."""
        if isinstance(x, str):
            return parse_scalar(x, self)
        if self.modulus is None:
            if isinstance(x, Residue):
                raise ScalarError("cannot coerce a residue into Q")
            return Fraction(x)
        if isinstance(x, Residue):
            if x.p != self.modulus:
                raise ScalarError(f"residue mod {x.p} is not in {self}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.modulus == 0:
                raise ScalarError(f"{x} has no image in {self}")
            return Residue(x.numerator, self.modulus) / x.denominator
        return Residue(int(x), self.modulus)

    def elements(self) -> Iterator[Scalar]:
        if self.modulus is None:
            raise ScalarError("Q is infinite")
        return (Residue(v, self.modulus) for v in range(self.modulus))

    def nonzero_elements(self) -> Iterator[Scalar]:
        if self.modulus is None:
            raise ScalarError("Q is infinite")
        return (Residue(v, self.modulus) for v in range(1, self.modulus))

    def tag(self) -> str:
        """File-format tag, ``Q`` or ``F <p>``."""
        return "Q" if self.modulus is None else f"F {self.modulus}"

    def __str__(self):
        return "Q" if self.modulus is None else f"F{self.modulus}"


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse ``int`` or ``int/posint`` into an exact field element.

    >>> parse_scalar("3/6", FieldSpec.rationals())
    Fraction(1, 2)
    >>> parse_scalar("7", FieldSpec.prime(5))
    Residue(2, 5)
    """
    m = _SCALAR_RE.match(text.strip())
    if not m:
        raise ScalarError(f"malformed scalar {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return field(num)
    if field.modulus is not None:
        raise ScalarError(f"fractions are not allowed over {field}: {text!r}")
    den = int(m.group(2))
    if den == 0:
        raise ScalarError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _int_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_in_field(a: Scalar, field: FieldSpec) -> Scalar | None:
    """Return some ``g`` with ``g*g == a``, or None when ``a`` is not a square.

    Over F_p the smallest such residue is returned.
    """
    a = field(a)
    if field.modulus is None:
        num, den = _int_sqrt(a.numerator), _int_sqrt(a.denominator)
        if num is None or den is None:
            return None
        return Fraction(num, den)
    p = field.modulus
    if p == 2 or a.value == 0:
        return a
    if pow(a.value, (p - 1) // 2, p) != 1:
        return None
    for r in range(1, p):
        if r * r % p == a.value:
            return Residue(r, p)
    raise AssertionError("Euler criterion passed but no root found")


def is_square(a: Scalar, field: FieldSpec) -> bool:
    return sqrt_in_field(a, field) is not None


def _squarefree_part(n: int) -> int:
    out, d = 1, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return out * n


def smallest_nonresidue(p: int) -> int:
    for r in range(2, p):
        if pow(r, (p - 1) // 2, p) == p - 1:
            return r
    raise ScalarError(f"F{p} has no quadratic non-residue")


def square_class_rep(a: Scalar, field: FieldSpec) -> Scalar:
    """Canonical representative of the class of ``a`` in K^x / (K^x)^2.

    Over Q this is the signed squarefree integer; over odd F_p it is 1 or the
    smallest non-residue; over F_2 it is always 1.
    """
    a = field(a)
    if not a:
        raise ScalarError("zero has no square class")
    if field.modulus is None:
        n = a.numerator * a.denominator
        sign = -1 if n < 0 else 1
        return Fraction(sign * _squarefree_part(abs(n)))
    p = field.modulus
    if p == 2 or is_square(a, field):
        return field.one
    return Residue(smallest_nonresidue(p), p)
