"""Exact univariate polynomials in the field-size parameter q.

Coefficients are kept ascending (constant term first) with no trailing
zeros.  Integer coefficients stay ints; intermediate results of exact
division may hold Fractions, which collapse back to ints the moment the
denominator clears.  All arithmetic is exact; nothing here ever rounds.

The (q-1)-basis expansion writes an integer polynomial as
sum c_k (q-1)^k with integer c_k, by repeated synthetic division.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["QPoly", "exact_div", "gaussian_binomial"]


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class QPoly:
    """A polynomial in q with exact (int or Fraction) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_clean(Fraction(c) if not isinstance(c, (int, Fraction)) else c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def q(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def q_power(cls, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power of q")
        return cls((0,) * k + (1,))

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = QPoly.one()
        square = self
        while k:
            if k & 1:
                result = result * square
            square = square * square
            k >>= 1
        return result

    def exact_div(self, other) -> "QPoly":
        """Polynomial quotient self / other, required to be exact."""
        other = _coerce(other)
        if other is NotImplemented or other.is_zero():
            raise ZeroDivisionError("zero divisor")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.coeffs[-1])
        dn = other.degree
        quot = [Fraction(0)] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            f = rem[i] / lead
            quot[i - dn] = f
            if f:
                for j, bc in enumerate(other.coeffs):
                    rem[i - dn + j] -= f * bc
        if any(rem):
            raise ValueError("not divisible")
        return QPoly(quot)

    def eval_at(self, q0: int) -> int:
        """Evaluate at an integer; the result must be an integer."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        if acc.denominator != 1:
            raise ValueError("non-integer evaluation")
        return int(acc)

    # -- bases and presentation -------------------------------------------

    def to_qminus1_basis(self) -> list[int]:
        """Coefficients c_k with self = sum c_k (q-1)^k, constant first."""
        if not self.is_integral():
            raise ValueError("non-integral coefficients")
        cs = list(self.coeffs)
        out = []
        while cs:
            # divide by (x - 1): remainder is the next coefficient
            b = [0] * (len(cs) - 1)
            acc = 0
            for i in range(len(cs) - 1, 0, -1):
                acc += cs[i]
                b[i - 1] = acc
            out.append(cs[0] + (b[0] if b else 0))
            cs = b
        return out

    @classmethod
    def from_qminus1_basis(cls, coeffs) -> "QPoly":
        qm1 = cls((-1, 1))
        total = cls.zero()
        for k, c in enumerate(coeffs):
            total = total + cls.const(c) * qm1 ** k
        return total

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, constant term first."""
        if not self.is_integral():
            raise ValueError("non-integral coefficients")
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "QPoly":
        return cls([int(s) for s in data])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}q" if k == 1 else f"{head}q^{k}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly((x,))
    return NotImplemented


def exact_div(a: QPoly, b: QPoly) -> QPoly:
    return _coerce(a).exact_div(b)


def gaussian_binomial(n: int, r: int) -> QPoly:
    """The q-binomial coefficient [n choose r]_q as an exact polynomial."""
    if not 0 <= r <= n:
        raise ValueError("binomial index out of range")
    num = QPoly.one()
    for i in range(n - r + 1, n + 1):
        num = num * (QPoly.q_power(i) - 1)
    den = QPoly.one()
    for s in range(1, r + 1):
        den = den * (QPoly.q_power(s) - 1)
    return num.exact_div(den)
