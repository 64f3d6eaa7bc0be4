"""Exact arithmetic over the rationals and prime fields.

Scalars are plain Python values: :class:`fractions.Fraction` over Q (always
in lowest terms with a positive denominator) and ``int`` residues in
``[0, p)`` over GF(p).  Every :class:`FieldSpec` method returns canonical
values, so ``==`` on scalars is structural equality.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ValidationError, ZeroInverse, ZeroPolynomialOverInfiniteField

Scalar = Union[int, Fraction]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: Q when ``p`` is None, otherwise GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValidationError(f"GF(p) needs a prime p, got {self.p}")

    @classmethod
    def Q(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def GF(cls, p: int) -> FieldSpec:
        return cls(int(p))

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def order(self) -> int | None:
        return self.p

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF{self.p}"

    # -- element construction ------------------------------------------------

    def __call__(self, x) -> Scalar:
        """Coerce ``x`` (int, Fraction, or text) to a canonical scalar."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValidationError(f"cannot coerce {x!r} into {self}")
        return x % self.p

    def parse(self, text: str) -> Scalar:
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad scalar {text!r}") from exc
        if self.p is not None and value.denominator % self.p == 0:
            raise ValidationError(f"{text!r} has no value in {self}")
        return self(value)

    def format(self, a: Scalar) -> str:
        return str(a)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def elements(self) -> list[int]:
        if self.p is None:
            raise ValueError("Q has no finite element list")
        return list(range(self.p))

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p is None else (-a) % self.p

    def reduce(self, a: Scalar) -> Scalar:
        """Canonicalize the result of raw ``+``/``*`` on canonical scalars."""
        return a if self.p is None else a % self.p

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in {self}")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def dot(self, xs: Iterable[Scalar], ys: Iterable[Scalar]) -> Scalar:
        return self.reduce(sum((x * y for x, y in zip(xs, ys)), self.zero))

    # -- json ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"type": "Q"} if self.p is None else {"type": "GF", "p": self.p}

    @classmethod
    def from_json(cls, obj) -> FieldSpec:
        if not isinstance(obj, dict) or obj.get("type") not in ("Q", "GF"):
            raise ValidationError(f"bad field spec {obj!r}")
        if obj["type"] == "Q":
            return cls.Q()
        p = obj.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValidationError(f"GF field needs an integer p, got {p!r}")
        return cls.GF(p)

    @classmethod
    def from_name(cls, name: str) -> FieldSpec:
        """Parse ``Q``, ``GF5``, ``GF(5)`` or ``F5``."""
        s = name.strip().upper().replace("(", "").replace(")", "")
        if s in ("Q", "QQ"):
            return cls.Q()
        for prefix in ("GF", "F", "Z"):
            if s.startswith(prefix) and s[len(prefix):].isdigit():
                return cls.GF(int(s[len(prefix):]))
        raise ValidationError(f"unknown field {name!r}")


def invert(a: Scalar, F: FieldSpec) -> Scalar:
    return F.inv(F(a))


def sample_scalar(F: FieldSpec, rng: random.Random, bound: int = 3) -> Scalar:
    """Uniform over GF(p); uniform integer in ``[-bound, bound]`` over Q."""
    if F.p is not None:
        return rng.randrange(F.p)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return Fraction(rng.randint(-bound, bound))


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Univariate polynomial over a field; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("F", "coeffs")

    def __init__(self, coeffs: Sequence, F: FieldSpec):
        cs = [F(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.F = F
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c, F: FieldSpec) -> Poly:
        return cls([c], F)

    @classmethod
    def var(cls, F: FieldSpec) -> Poly:
        return cls([0, 1], F)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def const_value(self) -> Scalar:
        if len(self.coeffs) > 1:
            raise ValueError("not a constant polynomial")
        return self.coeffs[0] if self.coeffs else self.F.zero

    def __call__(self, x: Scalar) -> Scalar:
        F = self.F
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.reduce(acc * x + c)
        return acc

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.F != self.F:
                raise ValueError("field mismatch")
            return other
        return Poly.const(other, self.F)

    def __add__(self, other) -> Poly:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return Poly([self.F.add(x, y) for x, y in zip(a, b)], self.F)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([self.F.neg(c) for c in self.coeffs], self.F)

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return Poly([], self.F)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(o.coeffs):
                out[i + j] += x * y
        return Poly(out, self.F)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = Poly.const(1, self.F)
        for _ in range(k):
            out = out * self
        return out

    def scale_inv(self, c: Scalar) -> Poly:
        inv = self.F.inv(self.F(c))
        return Poly([self.F.mul(x, inv) for x in self.coeffs], self.F)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.F == other.F and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.F, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]}, {self.F})"


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
    return small + large[::-1]


def roots_in_field(f: Poly | Sequence, F: FieldSpec | None = None) -> list[Scalar]:
    """All roots of ``f`` lying in its field, sorted and without repeats.

    GF(p) is decided by evaluating at every element.  Over Q the coefficients
    are cleared to integers and the rational-root candidates ``±d/e`` (``d``
    dividing the trailing nonzero coefficient, ``e`` the leading one) are
    tested exactly, which finds every rational root regardless of degree.
    """
    if not isinstance(f, Poly):
        if F is None:
            raise ValueError("a field is required for a raw coefficient list")
        f = Poly(f, F)
    F = f.F
    if f.is_zero():
        if F.p is None:
            raise ZeroPolynomialOverInfiniteField("every rational is a root of 0")
        return F.elements()
    if F.p is not None:
        return [x for x in range(F.p) if f(x) == 0]

    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    roots: set[Fraction] = set()
    shift = 0
    while ints[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    ints = ints[shift:]
    if len(ints) > 1:
        for d in _divisors(ints[0]):
            for e in _divisors(ints[-1]):
                for cand in (Fraction(d, e), Fraction(-d, e)):
                    if f(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def has_root(f: Poly) -> bool:
    """Root existence; the zero polynomial has roots in every field."""
    if f.is_zero():
        return True
    return bool(roots_in_field(f))
