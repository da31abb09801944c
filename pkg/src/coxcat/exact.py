"""Exact scalar and polynomial arithmetic.

Scalars are either `fractions.Fraction` or `GoldenNumber` (elements of the
quadratic field Q(phi), phi**2 = phi + 1, needed for the non-crystallographic
root coordinates).  Polynomials come in two flavours: `UniPoly` (one variable
t, dense coefficient tuple) and `BiPoly` (two variables x, y, sparse term
dict).  Everything is immutable and hashable, so values can be shared freely
across threads and memo tables.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import DegreeOverflow, NotDivisible

Rational = Fraction

Scalar = Union[int, Fraction]


def format_rational(q: Fraction) -> str:
    """Render a rational as the canonical "num/den" string."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


class GoldenNumber:
    """An element a + b*phi of Q(phi), with a, b rational and phi = (1+sqrt5)/2.

    Comparisons are exact: the sign of a + b*phi is decided by rational
    arithmetic alone, never by floating-point evaluation.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Scalar = 0, b: Scalar = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    def _coerce(self, other) -> "GoldenNumber":
        if isinstance(other, GoldenNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return GoldenNumber(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GoldenNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GoldenNumber(o.a - self.a, o.b - self.b)

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1
        return GoldenNumber(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GoldenNumber":
        # conjugate of a + b phi is (a + b) - b phi; their product is the norm
        norm = self.a * self.a + self.a * self.b - self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("GoldenNumber division by zero")
        return GoldenNumber((self.a + self.b) / norm, -self.b / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self) -> int:
        """Exact sign of a + b*phi, written as x + y*sqrt5 with x=a+b/2, y=b/2."""
        x = self.a + self.b / 2
        y = self.b / 2
        if y == 0:
            return (x > 0) - (x < 0)
        if x == 0:
            return 1 if y > 0 else -1
        if x > 0 and y > 0:
            return 1
        if x < 0 and y < 0:
            return -1
        # mixed signs: compare x^2 against 5 y^2 (sqrt5 is irrational, no tie)
        if x > 0:  # y < 0: positive iff x > -y*sqrt5
            return 1 if x * x > 5 * y * y else -1
        return 1 if 5 * y * y > x * x else -1

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __float__(self):
        return float(self.a) + float(self.b) * (1 + 5 ** 0.5) / 2

    def __repr__(self):
        if self.b == 0:
            return f"G({self.a})"
        return f"G({self.a} + {self.b}*phi)"


GOLDEN_ZERO = GoldenNumber(0)
GOLDEN_ONE = GoldenNumber(1)
PHI = GoldenNumber(0, 1)


class UniPoly:
    """Dense polynomial in t with Fraction coefficients, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def t() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def constant(c: Scalar) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def monomial(c: Scalar, k: int) -> "UniPoly":
        return UniPoly((0,) * k + (Fraction(c),))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, value):
        """Evaluate at a scalar by Horner's rule."""
        acc = Fraction(0) if isinstance(value, (int, Fraction)) else value * 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def subs_t_power(self, d: int) -> "UniPoly":
        """Substitute t -> t**d."""
        if d == 1 or self.is_zero():
            return self
        out = [Fraction(0)] * (self.degree * d + 1)
        for k, c in enumerate(self.coeffs):
            out[k * d] = c
        return UniPoly(out)

    def truncate(self, degree: int) -> "UniPoly":
        return UniPoly(self.coeffs[: degree + 1])

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data: Mapping) -> "UniPoly":
        return UniPoly(tuple(parse_rational(s) for s in data["coeffs"]))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def unipoly_divide_exact(p: UniPoly, q: UniPoly) -> UniPoly:
    """Return p/q when q divides p exactly; raise NotDivisible otherwise."""
    if q.is_zero():
        raise ValueError("division by the zero polynomial")
    if p.is_zero():
        return UniPoly()
    rem = list(p.coeffs)
    qc = q.coeffs
    dq = len(qc) - 1
    lead = qc[-1]
    if len(rem) - 1 < dq:
        raise NotDivisible(f"{p!r} is not divisible by {q!r}")
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = c / lead
        quot[k - dq] = f
        for j in range(dq + 1):
            rem[k - dq + j] -= f * qc[j]
    if any(c != 0 for c in rem):
        raise NotDivisible(f"{p!r} is not divisible by {q!r}")
    return UniPoly(quot)


class BiPoly:
    """Sparse polynomial in x, y: dict (xdeg, ydeg) -> Fraction, zeros dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Scalar] = ()):
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (k, l), c in items:
            c = Fraction(c)
            if c:
                clean[(int(k), int(l))] = c
        object.__setattr__(self, "terms", dict(clean))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly({(0, 0): 1})

    @staticmethod
    def monomial(c: Scalar, k: int, l: int = 0) -> "BiPoly":
        return BiPoly({(k, l): c})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, k: int, l: int = 0) -> Fraction:
        return self.terms.get((k, l), Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.monomial(other, 0, 0)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.monomial(other, 0, 0)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BiPoly({key: -c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({key: c * other for key, c in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict = {}
        for (k1, l1), c1 in self.terms.items():
            for (k2, l2), c2 in other.terms.items():
                key = (k1 + k2, l1 + l2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, x: Fraction, y: Fraction) -> Fraction:
        total = Fraction(0)
        for (k, l), c in self.terms.items():
            total += c * x ** k * y ** l
        return total

    def substitute_y(self, y: Scalar) -> "BiPoly":
        """Collapse the y variable to a scalar, keeping the x grading."""
        out: dict = {}
        y = Fraction(y)
        for (k, l), c in self.terms.items():
            val = c * y ** l
            if val:
                out[(k, 0)] = out.get((k, 0), Fraction(0)) + val
        return BiPoly(out)

    def x_degree(self) -> int:
        return max((k for (k, _) in self.terms), default=-1)

    def reverse_x(self, n: int) -> "BiPoly":
        """Return x**n * P(1/x, y); requires every x-degree to be at most n."""
        if any(k > n for (k, _) in self.terms):
            raise DegreeOverflow(f"x-degree exceeds {n}")
        return BiPoly({(n - k, l): c for (k, l), c in self.terms.items()})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {
            "terms": [
                [k, l, format_rational(c)] for (k, l), c in self.sorted_terms()
            ]
        }

    @staticmethod
    def from_json(data: Mapping) -> "BiPoly":
        return BiPoly({(k, l): parse_rational(c) for k, l, c in data["terms"]})

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (k, l), c in self.sorted_terms():
            mono = ""
            if k:
                mono += "x" if k == 1 else f"x^{k}"
            if l:
                mono += "y" if l == 1 else f"y^{l}"
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def bipoly_substitute(f: BiPoly, n: int) -> BiPoly:
    """Clear denominators in (1-x)**n * f(x/(1-x), x*y/(1-x)).

    Each term c*x^k*y^l maps to c * x^(k+l) * y^l * (1-x)^(n-k-l), so the
    result is again a polynomial provided k + l <= n for every term.
    """
    out = BiPoly.zero()
    for (k, l), c in f.terms.items():
        m = n - k - l
        if m < 0:
            raise DegreeOverflow(f"term x^{k} y^{l} exceeds the budget n={n}")
        # expand (1-x)^m by the binomial theorem
        expansion = {
            (k + l + j, l): c * ((-1) ** j) * comb(m, j) for j in range(m + 1)
        }
        out = out + BiPoly(expansion)
    return out


PartitionTuple = tuple


class Partition:
    """An integer partition as a weakly decreasing tuple of positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in ps):
            raise ValueError("parts must be positive")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    @property
    def m1(self) -> int:
        """Number of parts equal to 1."""
        return self.parts.count(1)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
        )

    def centralizer_order(self) -> int:
        """z_lambda = prod over part values i of i^m_i * m_i!."""
        return centralizer_order(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def centralizer_order(parts: Sequence[int]) -> int:
    z = 1
    for value in set(parts):
        m = list(parts).count(value)
        fact = 1
        for i in range(2, m + 1):
            fact *= i
        z *= value ** m * fact
    return z


def partitions_of(n: int, max_part: int | None = None) -> Iterator[PartitionTuple]:
    """Yield the partitions of n as tuples, in reverse lexicographic order.

    partitions_of(3) yields (3,), (2, 1), (1, 1, 1).
    """
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def conjugate_partition(parts: Sequence[int]) -> tuple:
    """Conjugate of a weakly decreasing nonnegative sequence."""
    ps = sorted((p for p in parts if p > 0), reverse=True)
    if not ps:
        return ()
    return tuple(sum(1 for p in ps if p > i) for i in range(ps[0]))
