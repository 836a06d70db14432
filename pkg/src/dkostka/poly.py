"""Integer Laurent polynomials in one variable ``t`` and rational functions over Q.

Both types are immutable and hashable so they can sit inside dictionaries and
``functools.cache`` keys.  Arithmetic is exact; there is no floating point
anywhere in this module.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from sympy.polys.domains import ZZ
from sympy.polys.densetools import dup_primitive
from sympy.polys.euclidtools import dup_gcd

__all__ = ["IntPoly", "RatFn", "T", "parse_poly"]

Number = Union[int, Fraction]


def _trim(coeffs: list[int], low: int) -> tuple[tuple[int, ...], int]:
    start = 0
    end = len(coeffs)
    while start < end and not coeffs[start]:
        start += 1
    while end > start and not coeffs[end - 1]:
        end -= 1
    if start == end:
        return (), 0
    return tuple(coeffs[start:end]), low + start


class IntPoly:
    """A Laurent polynomial with integer coefficients.

    Stored densely as ``coeffs[i]`` = coefficient of ``t**(low + i)`` with the
    first and last stored coefficients nonzero.  The zero polynomial has no
    stored coefficients.
    """

    __slots__ = ("_c", "_low", "_hash")

    def __init__(self, coeffs: Iterable[int] | Mapping[int, int] | int = (), low: int = 0):
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        elif isinstance(coeffs, Mapping):
            items = {k: v for k, v in coeffs.items() if v}
            if not items:
                coeffs, low = [], 0
            else:
                lo, hi = min(items), max(items)
                dense = [0] * (hi - lo + 1)
                for k, v in items.items():
                    dense[k - lo] = int(v)
                coeffs, low = dense, lo
        c = [int(x) for x in coeffs]
        self._c, self._low = _trim(c, low)
        self._hash = None

    @classmethod
    def _raw(cls, c: tuple[int, ...], low: int) -> IntPoly:
        p = object.__new__(cls)
        p._c, p._low, p._hash = c, low, None
        return p

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls._raw((c,), k) if c else cls._raw((), 0)

    # -- inspection -------------------------------------------------------
    @property
    def coefficients(self) -> dict[int, int]:
        """Exponent -> coefficient, zero coefficients omitted."""
        return {self._low + i: c for i, c in enumerate(self._c) if c}

    def items(self):
        return sorted(self.coefficients.items())

    def coeff(self, k: int) -> int:
        i = k - self._low
        return self._c[i] if 0 <= i < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return self._low + len(self._c) - 1

    @property
    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return self._low

    @property
    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def is_polynomial(self) -> bool:
        """True if there are no negative powers of t."""
        return not self._c or self._low >= 0

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and self._low == 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c)

    def content(self) -> int:
        return reduce(gcd, self._c, 0)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> IntPoly | None:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.monomial(0, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._c:
            return self
        if not self._c:
            return o
        low = min(self._low, o._low)
        high = max(self._low + len(self._c), o._low + len(o._c))
        res = [0] * (high - low)
        off = self._low - low
        for i, c in enumerate(self._c):
            res[off + i] = c
        off = o._low - low
        for i, c in enumerate(o._c):
            res[off + i] += c
        return IntPoly._raw(*_trim(res, low))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly._raw(tuple(-c for c in self._c), self._low)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntPoly._raw((), 0)
            return IntPoly._raw(tuple(c * other for c in self._c), self._low)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntPoly._raw((), 0)
        if len(a) < len(b):
            a, b = b, a
        res = [0] * (len(a) + len(b) - 1)
        for j, y in enumerate(b):
            if y:
                for i, x in enumerate(a):
                    res[i + j] += x * y
        return IntPoly._raw(tuple(res), self._low + other._low)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            if len(self._c) == 1 and self._c[0] in (1, -1):
                return IntPoly._raw((self._c[0] ** k,), self._low * k)
            raise ValueError("only monomials +-t^k can be inverted")
        result = IntPoly.monomial(0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by t**k."""
        return IntPoly._raw(self._c, self._low + k) if self._c else self

    def subs_power(self, k: int) -> IntPoly:
        """Substitute t -> t**k (k may be negative)."""
        if not self._c:
            return self
        if k == 0:
            return IntPoly.monomial(0, sum(self._c))
        return IntPoly({(self._low + i) * k: c for i, c in enumerate(self._c) if c})

    def invert_variable(self) -> IntPoly:
        """Substitute t -> 1/t."""
        return self.subs_power(-1)

    def exact_div(self, other: IntPoly | int) -> IntPoly:
        """Quotient in Z[t, 1/t]; raises ArithmeticError if not exact."""
        if isinstance(other, int):
            if not other:
                raise ZeroDivisionError("division by zero polynomial")
            if any(c % other for c in self._c):
                raise ArithmeticError("inexact integer division")
            return IntPoly._raw(tuple(c // other for c in self._c), self._low)
        if not other._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return self
        num = list(self._c)
        den = other._c
        lead = den[-1]
        dq = len(num) - len(den)
        if dq < 0:
            raise ArithmeticError("inexact polynomial division")
        quot = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = num[i + len(den) - 1]
            if c:
                q, r = divmod(c, lead)
                if r:
                    raise ArithmeticError("inexact polynomial division")
                quot[i] = q
                for j, d in enumerate(den):
                    num[i + j] -= q * d
        if any(num):
            raise ArithmeticError("inexact polynomial division")
        return IntPoly._raw(*_trim(quot, self._low - other._low))

    def __call__(self, x: Number) -> Number:
        if not self._c:
            return 0
        if self._low < 0 and x == 0:
            raise ZeroDivisionError("negative power evaluated at 0")
        acc: Number = 0
        for c in reversed(self._c):
            acc = acc * x + c
        if self._low >= 0:
            return acc * x**self._low
        return Fraction(acc) / Fraction(x) ** (-self._low)

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, RatFn):
                return other == self
            return NotImplemented
        return self._c == o._c and self._low == o._low

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like ints so IntPoly(3) and 3 collide in dicts
            if not self._c:
                self._hash = 0
            elif self.is_constant():
                self._hash = hash(self._c[0])
            else:
                self._hash = hash((self._c, self._low))
        return self._hash

    def __repr__(self) -> str:
        return f"IntPoly({self})"

    def __str__(self) -> str:
        return format_poly(self.coefficients)


def format_poly(coeffs: Mapping[int, int], var: str = "t") -> str:
    """Render descending powers: ``t^8 + t^6 + 2t^4``, ``-t``, ``3``."""
    terms = [(k, c) for k, c in sorted(coeffs.items(), reverse=True) if c]
    if not terms:
        return "0"
    out = []
    for idx, (k, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}" if k > 0 else f"{var}^({k})"
            body = mono if a == 1 else f"{a}{mono}"
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM = re.compile(r"^(\d*)(?:t(?:\^\(?(-?\d+)\)?)?)?$")


def parse_poly(text: str) -> IntPoly:
    """Inverse of ``str(IntPoly)``; also accepts the empty string as 0."""
    s = text.replace(" ", "")
    if not s or s == "0":
        return IntPoly()
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    # protect the minus sign inside negative exponents t^(-k) from the split
    s = s.replace("^(-", "^(~")
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        body = body.replace("~", "-")
        m = _TERM.match(body)
        if not m or (not m.group(1) and "t" not in body):
            raise ValueError(f"cannot parse polynomial term {body!r} in {text!r}")
        if "t" in body:
            k = int(m.group(2)) if m.group(2) is not None else 1
            c = int(m.group(1)) if m.group(1) else 1
        else:
            k, c = 0, int(m.group(1))
        coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
    return IntPoly(coeffs)


T = IntPoly.monomial(1)


# ---------------------------------------------------------------------------
# rational functions

def _poly_gcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """gcd over Z[t] of two ordinary polynomials given low-to-high."""
    g = dup_gcd([ZZ(x) for x in reversed(a)], [ZZ(x) for x in reversed(b)], ZZ)
    return tuple(int(x) for x in reversed(g))


class RatFn:
    """An element of Q(t), kept as num/den with num, den in Z[t] coprime.

    Normal form: the denominator is an ordinary polynomial with positive
    leading coefficient, numerator and denominator have no common factor in
    Z[t] (including integer content), and zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: IntPoly | int | Fraction = 0, den: IntPoly | int = 1):
        if isinstance(num, Fraction):
            num, den = IntPoly(num.numerator) * IntPoly._coerce(den), IntPoly(num.denominator)
        num = IntPoly._coerce(num) if not isinstance(num, IntPoly) else num
        den = IntPoly._coerce(den) if not isinstance(den, IntPoly) else den
        if num is None or den is None:
            raise TypeError("RatFn wants IntPoly/int/Fraction parts")
        self.num, self.den = self._normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> RatFn:
        r = object.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @staticmethod
    def _normalize(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            return IntPoly(), IntPoly(1)
        # move powers of t so that both are polynomials with nonzero constant in den
        shift = num._low - den._low
        n_c, d_c = num._c, den._c
        if len(d_c) > 1:
            g = _poly_gcd(n_c, d_c)
            if len(g) > 1 or g[0] != 1:
                gp = IntPoly._raw(g, 0)
                n_c = IntPoly._raw(n_c, 0).exact_div(gp)._c
                d_c = IntPoly._raw(d_c, 0).exact_div(gp)._c
        else:
            g = gcd(reduce(gcd, n_c, 0), d_c[0])
            if g != 1:
                n_c = tuple(x // g for x in n_c)
                d_c = (d_c[0] // g,)
        if d_c[-1] < 0:
            n_c = tuple(-x for x in n_c)
            d_c = tuple(-x for x in d_c)
        if shift >= 0:
            return IntPoly._raw(n_c, shift), IntPoly._raw(d_c, 0)
        return IntPoly._raw(n_c, 0), IntPoly._raw(d_c, -shift)

    @staticmethod
    def _coerce(other) -> RatFn | None:
        if isinstance(other, RatFn):
            return other
        if isinstance(other, IntPoly):
            if other.is_polynomial():
                return RatFn._raw(other, IntPoly._raw((1,), 0))
            return RatFn(other)
        if isinstance(other, (int, Fraction)):
            return RatFn(other)
        return None

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        """True when the value lies in Z[t] (denominator 1)."""
        return self.den.is_constant() and self.den.coeff(0) == 1

    def is_laurent(self) -> bool:
        """True when the value lies in Z[t, 1/t]."""
        return len(self.den._c) == 1 and self.den._c[0] == 1

    def to_poly(self) -> IntPoly:
        """Return the value as a Laurent polynomial in Z[t, 1/t]; raise otherwise."""
        if not self.is_laurent():
            raise ArithmeticError(f"{self} is not a Laurent polynomial over Z")
        return self.num.shift(-self.den._low)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            if self.den.is_constant() and self.den._c == (1,):
                return RatFn._raw(self.num + o.num, self.den) if (self.num + o.num) else RatFn()
            return RatFn(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFn:
        return RatFn._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFn()
        if self.is_polynomial() and o.is_polynomial():
            return RatFn._raw(self.num * o.num, self.den)
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFn:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFn(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> RatFn:
        if k < 0:
            return self.inverse() ** (-k)
        return RatFn._raw(self.num**k, self.den**k)

    def subs_power(self, k: int) -> RatFn:
        """Substitute t -> t**k."""
        return RatFn(self.num.subs_power(k), self.den.subs_power(k))

    def invert_variable(self) -> RatFn:
        return self.subs_power(-1)

    def __call__(self, x: Number) -> Fraction:
        """Evaluate at a rational point; raises ZeroDivisionError at a pole."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at t={x}")
        return Fraction(self.num(x)) / Fraction(d)

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.num) if self.is_polynomial() else hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFn({self})"


def primitive(p: IntPoly) -> tuple[int, IntPoly]:
    """Split an ordinary polynomial into content and primitive part."""
    if p.is_zero():
        return 0, p
    cont, prim = dup_primitive([ZZ(x) for x in reversed(p._c)], ZZ)
    return int(cont), IntPoly([int(x) for x in reversed(prim)], p._low)


def poly_lcm(polys: Iterable[IntPoly]) -> IntPoly:
    """Least common multiple (primitive, positive leading coefficient) of ordinary polynomials."""
    acc = IntPoly(1)
    for p in polys:
        if p.is_zero():
            raise ValueError("lcm with zero polynomial")
        g = IntPoly(_poly_gcd(acc._c, p._c))
        acc = (acc * p).exact_div(g)
        _, acc = primitive(acc)
        if acc.leading < 0:
            acc = -acc
    return acc


def fraction_lcm(values: Iterable[Fraction]) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)
