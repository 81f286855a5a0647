"""Exact complex-rational scalars built on :class:`fractions.Fraction`.

Every coefficient in this package is a ``ComplexRational``: a pair of
arbitrary-precision rationals (real, imaginary).  Field operations are exact,
so algebraic identities can be asserted with ``==`` instead of tolerances.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def as_fraction(x: int | str | Fraction) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    """Render ``p/q`` with the denominator omitted when it is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class ComplexRational:
    """An exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def coerce(x) -> "ComplexRational":
        if isinstance(x, ComplexRational):
            return x
        return ComplexRational(as_fraction(x))

    @staticmethod
    def _try_coerce(x):
        if isinstance(x, ComplexRational):
            return x
        if isinstance(x, (int, Fraction)):
            return ComplexRational(x)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = ComplexRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ComplexRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = ComplexRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = ComplexRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ComplexRational.coerce(other)
        d = other.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero ComplexRational")
        return ComplexRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return ComplexRational.coerce(other) / self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conj(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|x|^2 as an exact non-negative rational; zero iff x == 0."""
        return self.re * self.re + self.im * self.im

    # -- predicates and conversions ----------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def real_part(self) -> Fraction:
        return self.re

    def imag_part(self) -> Fraction:
        return self.im

    def as_real(self) -> Fraction:
        """The value as a Fraction; raises if the imaginary part is nonzero."""
        if self.im != 0:
            raise ValueError(f"{self} is not real")
        return self.re

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    # -- formatting ----------------------------------------------------------

    def __str__(self):
        if self.im == 0:
            return format_fraction(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{format_fraction(self.im)}*i"
        sign = "-" if self.im < 0 else "+"
        imag = abs(self.im)
        istr = "i" if imag == 1 else f"{format_fraction(imag)}*i"
        return f"{format_fraction(self.re)} {sign} {istr}"

    def __repr__(self):
        return f"ComplexRational({self.re!r}, {self.im!r})"

    def to_json(self) -> dict:
        return {"re": format_fraction(self.re), "im": format_fraction(self.im)}

    @staticmethod
    def from_json(obj: dict) -> "ComplexRational":
        return ComplexRational(as_fraction(obj["re"]), as_fraction(obj["im"]))


ZERO = ComplexRational(0)
ONE = ComplexRational(1)
I = ComplexRational(0, 1)


def cplx(re=0, im=0) -> ComplexRational:
    """Shorthand constructor used throughout the package."""
    return ComplexRational(re, im)
