"""Machine-checkable parameter constraints for the two-dimensional tables.

Expressions are small arithmetic strings (``"b1*t**3 - 3*t - 1"``) parsed
with :mod:`ast` and evaluated to a :class:`~mscalg.field.Poly` in one free
variable over the ground field, with every parameter bound to a scalar.
Division is allowed only by nonzero constants, so ``1/2`` means the field
element ``2^-1``.
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from ..errors import ZeroInverse
from ..field import FieldSpec, Poly, Scalar, has_root, roots_in_field

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}


@lru_cache(maxsize=None)
def _parse(expr: str) -> ast.expr:
    return ast.parse(expr, mode="eval").body


def evaluate(expr: str, F: FieldSpec, env: Mapping[str, Scalar], var: str = "t") -> Poly:
    """Evaluate ``expr`` to a polynomial in ``var`` over ``F``."""

    def ev(node) -> Poly:
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Poly.const(node.value, F)
        if isinstance(node, ast.Name):
            if node.id == var:
                return Poly.var(F)
            if node.id not in env:
                raise KeyError(f"unbound name {node.id!r} in {expr!r}")
            return Poly.const(env[node.id], F)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError(f"non-integer exponent in {expr!r}")
                return ev(node.left) ** node.right.value
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Div):
                if not right.is_const() or right.is_zero():
                    raise ZeroInverse(f"division by a non-constant or zero in {expr!r} over {F}")
                return left.scale_inv(right.const_value())
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(left, right)
        raise ValueError(f"unsupported syntax in {expr!r}")

    return ev(_parse(expr))


def free_names(expr: str) -> set[str]:
    return {n.id for n in ast.walk(_parse(expr)) if isinstance(n, ast.Name)}


def _scalar(expr: str, F: FieldSpec, env) -> Scalar:
    val = evaluate(expr, F, env)
    if not val.is_const():
        raise ValueError(f"{expr!r} is not free of the variable")
    return val.const_value()


class Predicate:
    """Base class; subclasses implement :meth:`holds` and :meth:`describe`."""

    def holds(self, F: FieldSpec, env: Mapping[str, Scalar]) -> bool:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def names(self) -> set[str]:
        raise NotImplementedError

    def failing(self, F: FieldSpec, env) -> str | None:
        return None if self.holds(F, env) else self.describe()

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Ne(Predicate):
    """``expr != 0``."""

    expr: str

    def holds(self, F, env):
        return _scalar(self.expr, F, env) != 0

    def describe(self):
        return f"{self.expr} != 0"

    def names(self):
        return free_names(self.expr)

    def to_json(self):
        return {"kind": "Inequation", "expr": self.expr}


@dataclass(frozen=True)
class Eq(Predicate):
    """``expr == 0``."""

    expr: str

    def holds(self, F, env):
        return _scalar(self.expr, F, env) == 0

    def describe(self):
        return f"{self.expr} = 0"

    def names(self):
        return free_names(self.expr)

    def to_json(self):
        return {"kind": "Equation", "expr": self.expr}


@dataclass(frozen=True)
class NoRoot(Predicate):
    """The polynomial in ``t`` has no root in the field."""

    poly: str

    def holds(self, F, env):
        return not has_root(evaluate(self.poly, F, env, "t"))

    def describe(self):
        return f"{self.poly} has no root in F"

    def names(self):
        return free_names(self.poly) - {"t"}

    def to_json(self):
        return {"kind": "NoRoot", "poly": self.poly}


@dataclass(frozen=True)
class HasRoot(Predicate):
    poly: str

    def holds(self, F, env):
        return has_root(evaluate(self.poly, F, env, "t"))

    def describe(self):
        return f"{self.poly} has a root in F"

    def names(self):
        return free_names(self.poly) - {"t"}

    def to_json(self):
        return {"kind": "HasRoot", "poly": self.poly}


def _solvable(num: Poly, den: Poly) -> bool:
    """Some ``d`` with ``num(d) = 0`` and ``den(d) != 0``."""
    F = num.F
    if num.is_zero():
        if F.is_finite:
            return any(den(x) != 0 for x in F.elements())
        return not den.is_zero()
    return any(den(r) != 0 for r in roots_in_field(num))


@dataclass(frozen=True)
class NoSolution(Predicate):
    """No ``d`` in the field solves ``numerator(d) = 0`` with ``denominator(d) != 0``.

    ``source`` keeps the equation as originally stated, before clearing the
    denominator.
    """

    numerator: str
    denominator: str
    source: str = ""

    def holds(self, F, env):
        return not _solvable(evaluate(self.numerator, F, env, "d"), evaluate(self.denominator, F, env, "d"))

    def describe(self):
        return f"no solution d of {self.source or self.numerator + ' = 0'} (cleared: {self.numerator} = 0, {self.denominator} != 0)"

    def names(self):
        return (free_names(self.numerator) | free_names(self.denominator)) - {"d"}

    def to_json(self):
        return {"kind": "NoSolution", "numerator": self.numerator, "denominator": self.denominator, "source": self.source}


@dataclass(frozen=True)
class HasSolution(Predicate):
    numerator: str
    denominator: str
    source: str = ""

    def holds(self, F, env):
        return _solvable(evaluate(self.numerator, F, env, "d"), evaluate(self.denominator, F, env, "d"))

    def describe(self):
        return f"a solution d of {self.source or self.numerator + ' = 0'} exists (cleared: {self.numerator} = 0, {self.denominator} != 0)"

    def names(self):
        return (free_names(self.numerator) | free_names(self.denominator)) - {"d"}

    def to_json(self):
        return {"kind": "HasSolution", "numerator": self.numerator, "denominator": self.denominator, "source": self.source}


@dataclass(frozen=True)
class FieldIs(Predicate):
    """The ground field is exactly GF(p)."""

    p: int

    def holds(self, F, env):
        return F.p == self.p

    def describe(self):
        return f"F = GF({self.p})"

    def names(self):
        return set()

    def to_json(self):
        return {"kind": "FieldIs", "field": {"type": "GF", "p": self.p}}


@dataclass(frozen=True)
class AllOf(Predicate):
    parts: tuple[Predicate, ...]

    def __init__(self, *parts: Predicate):
        object.__setattr__(self, "parts", tuple(parts))

    def holds(self, F, env):
        return all(q.holds(F, env) for q in self.parts)

    def describe(self):
        return "(" + " and ".join(q.describe() for q in self.parts) + ")"

    def names(self):
        return set().union(*(q.names() for q in self.parts))

    def to_json(self):
        return {"kind": "AllOf", "parts": [q.to_json() for q in self.parts]}


@dataclass(frozen=True)
class AnyOf(Predicate):
    parts: tuple[Predicate, ...]

    def __init__(self, *parts: Predicate):
        object.__setattr__(self, "parts", tuple(parts))

    def holds(self, F, env):
        return any(q.holds(F, env) for q in self.parts)

    def describe(self):
        return "(" + " or ".join(q.describe() for q in self.parts) + ")"

    def names(self):
        return set().union(*(q.names() for q in self.parts))

    def to_json(self):
        return {"kind": "AnyOf", "parts": [q.to_json() for q in self.parts]}
