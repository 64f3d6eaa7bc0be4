"""Table lookup, instantiation and finite-field enumeration of families."""

from __future__ import annotations

import itertools
from typing import Iterator, Mapping

from ..algebra import Msc
from ..errors import BudgetExceeded, CharMismatch, ConstraintViolated, NotFiniteField, ZeroInverse
from ..field import FieldSpec
from .families import TABLES, CharClass, Family, Property
from .predicates import evaluate

DEFAULT_BUDGET = 10**7


def table(F: FieldSpec, prop: Property | str) -> list[Family]:
    """Families of the table for ``prop`` in the characteristic of ``F``.

    Raises:
        LookupError: no table exists for this property and characteristic.
    """
    prop = Property.parse(prop)
    key = (prop, CharClass.of(F))
    if key not in TABLES:
        raise LookupError(f"no {prop.value} table for characteristic {F.char}")
    return list(TABLES[key])


def lookup(family_id: str, F: FieldSpec, prop: Property | str) -> Family:
    for fam in table(F, prop):
        if fam.id == family_id:
            return fam
    raise LookupError(f"{family_id} is not in the {Property.parse(prop).value} table over {F}")


def _bind(fam: Family, values: Mapping[str, object], F: FieldSpec) -> dict:
    missing = [p for p in fam.params if p not in values]
    extra = [k for k in values if k not in fam.params]
    if missing or extra:
        raise ValueError(f"{fam.id} takes parameters {fam.params}; missing {missing}, unexpected {extra}")
    return {k: F(values[k]) for k in fam.params}


def failed_constraint(fam: Family, env: Mapping, F: FieldSpec) -> str | None:
    for pred in fam.constraints:
        if not pred.holds(F, env):
            return pred.describe()
    return None


def _substitute(fam: Family, env: Mapping, F: FieldSpec) -> Msc:
    rows = []
    for row in fam.template:
        vals = []
        for expr in row:
            poly = evaluate(expr, F, env)
            vals.append(poly.const_value())
        rows.append(vals)
    return Msc(rows, F)


def instantiate(fam: Family, values: Mapping[str, object], F: FieldSpec) -> Msc:
    """Substitute parameter values into the template after checking constraints.

    Raises:
        CharMismatch: the family belongs to another characteristic.
        ConstraintViolated: a constraint fails; the message names it.
    """
    if CharClass.of(F) is not fam.char_class:
        raise CharMismatch(f"{fam.id} is stated for {fam.char_class.value}, not characteristic {F.char}")
    env = _bind(fam, values, F)
    bad = failed_constraint(fam, env, F)
    if bad is not None:
        raise ConstraintViolated(bad)
    return _substitute(fam, env, F)


def enumerate_instances(
    fam: Family,
    F: FieldSpec,
    budget: int = DEFAULT_BUDGET,
    with_values: bool = False,
) -> Iterator:
    """All constraint-satisfying instances over GF(p), deduplicated as raw MSCs.

    Unlike :func:`instantiate`, a family may be materialized over a field of
    another characteristic class, as long as its constants make sense there
    (a constraint mentioning 1/2 cannot be read over GF(2)).

    Yields MSCs, or ``(values, msc)`` pairs when ``with_values`` is set.

    Raises:
        NotFiniteField: ``F`` is Q.
        BudgetExceeded: more than ``budget`` parameter assignments.
        CharMismatch: a constant of the family is not defined over ``F``.
    """
    if not F.is_finite:
        raise NotFiniteField("enumeration needs GF(p)")
    size = F.p ** len(fam.params)
    if size > budget:
        raise BudgetExceeded(size, budget, "parameter values")
    seen = set()
    for combo in itertools.product(F.elements(), repeat=len(fam.params)):
        env = dict(zip(fam.params, combo))
        try:
            if failed_constraint(fam, env, F) is not None:
                continue
        except ZeroInverse as exc:
            raise CharMismatch(f"{fam.id} divides by a constant that vanishes in characteristic {F.char}") from exc
        A = _substitute(fam, env, F)
        if A in seen:
            continue
        seen.add(A)
        yield (env, A) if with_values else A
