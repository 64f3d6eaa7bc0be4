"""Exhaustive soundness, completeness and uniqueness checks of the tables."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .. import kernels
from ..algebra import Msc
from ..automorphisms import are_isomorphic
from ..errors import BudgetExceeded, NotFiniteField
from ..field import FieldSpec
from .families import Property
from .tables import enumerate_instances, table

DEFAULT_BUDGET = 10**7

TRIV_DER, TRIV_AUT, SIMPLE = 1, 2, 4


def holds(flags: int, prop: Property) -> bool:
    """Evaluate a property on census flags."""
    der, aut, simple = bool(flags & TRIV_DER), bool(flags & TRIV_AUT), bool(flags & SIMPLE)
    return {
        Property.TRIV_DER: der,
        Property.TRIV_AUT: aut,
        Property.SIMPLE: simple,
        Property.STAR: der and aut and simple,
        Property.DER_NOT_AUT: der and not aut,
        Property.AUT_NOT_DER: aut and not der,
    }[prop]


def _census_chunk(args):
    n, p, start, stop = args
    return kernels.census(n, p, start, stop)


def census(F: FieldSpec, n: int = 2, workers: int = 1, budget: int = DEFAULT_BUDGET) -> bytes:
    """Flags of every MSC over GF(p), indexed by code.

    The scan is split into contiguous code ranges; ``workers > 1`` spreads
    them over processes.  The result does not depend on ``workers``.
    """
    if not F.is_finite:
        raise NotFiniteField("a census needs GF(p)")
    total = F.p ** (n * n * n)
    if total > budget:
        raise BudgetExceeded(total, budget, "MSCs")
    if workers <= 1:
        return kernels.census(n, F.p, 0, total)
    step = -(-total // (workers * 4))
    chunks = [(n, F.p, s, min(s + step, total)) for s in range(0, total, step)]
    with ProcessPoolExecutor(workers) as pool:
        return b"".join(pool.map(_census_chunk, chunks))


@dataclass
class AuditReport:
    field: FieldSpec
    property: Property
    total_msc: int
    holding: int
    families: list[dict]
    sound: bool
    complete: bool
    unique: bool
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.sound and self.complete and self.unique

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "property": self.property.value,
            "total_msc": self.total_msc,
            "holding": self.holding,
            "families": self.families,
            "sound": self.sound,
            "complete": self.complete,
            "unique": self.unique,
            "violations": self.violations,
        }


def _msc_of(code: int, F: FieldSpec) -> Msc:
    return Msc.from_flat(kernels.decode(code, 8, F.p), 2, F)


def audit_completeness(
    F: FieldSpec,
    prop: Property | str,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    flags: bytes | None = None,
    max_listed: int = 20,
) -> AuditReport:
    """Check a table against an exhaustive census of all 2-dimensional MSCs.

    * sound: every instance has the property,
    * complete: every MSC with the property is isomorphic to some instance,
    * unique: no two distinct instances are isomorphic.

    Violations carry witnesses (the offending MSCs, and for uniqueness an
    explicit isomorphism).  At most ``max_listed`` are listed per kind.
    """
    prop = Property.parse(prop)
    if not F.is_finite:
        raise NotFiniteField("audits need GF(p)")
    if flags is None:
        flags = census(F, 2, workers, budget)
    total = len(flags)
    holding = {c for c in range(total) if holds(flags[c], prop)}

    fams = table(F, prop)
    # (family id, params, code) for each raw-distinct instance
    instances: list[tuple[str, dict, int]] = []
    seen: set[int] = set()
    fam_summary = []
    for fam in fams:
        count = 0
        for values, A in enumerate_instances(fam, F, budget=budget, with_values=True):
            code = kernels.encode(A.flat(), F.p)
            count += 1
            if code not in seen:
                seen.add(code)
                instances.append((fam.id, {k: F.format(v) for k, v in values.items()}, code))
        fam_summary.append({"id": fam.id, "instances": count})

    violations: list[dict] = []
    counts = {"soundness": 0, "completeness": 0, "uniqueness": 0}

    def report(kind: str, item: dict):
        counts[kind] += 1
        if counts[kind] <= max_listed:
            violations.append({"kind": kind, **item})

    for fid, values, code in instances:
        if code not in holding:
            report("soundness", {"family": fid, "params": values, "msc": _msc_of(code, F).to_json()["entries"]})

    owner: dict[int, int] = {}
    for idx, (fid, values, code) in enumerate(instances):
        if code in owner:
            # an earlier instance's orbit already holds this one
            continue
        for c in kernels.orbit_codes(kernels.decode(code, 8, F.p), 2, F.p):
            owner.setdefault(c, idx)
    for idx, (fid, values, code) in enumerate(instances):
        first = owner[code]
        if first != idx:
            ofid, ovalues, ocode = instances[first]
            A, B = _msc_of(ocode, F), _msc_of(code, F)
            g = are_isomorphic(A, B, budget)
            report(
                "uniqueness",
                {
                    "first": {"family": ofid, "params": ovalues},
                    "second": {"family": fid, "params": values},
                    "g": g.to_strings() if g is not None else None,
                },
            )

    uncovered = sorted(c for c in holding if c not in owner)
    reps_done: set[int] = set()
    for c in uncovered:
        if c in reps_done:
            continue
        orbit = kernels.orbit_codes(kernels.decode(c, 8, F.p), 2, F.p)
        reps_done |= orbit
        report("completeness", {"msc": _msc_of(c, F).to_json()["entries"], "orbit_size": len(orbit)})

    if any(counts.values()):
        violations.append({"kind": "summary", **counts, "uncovered_msc": len(uncovered)})

    return AuditReport(
        field=F,
        property=prop,
        total_msc=total,
        holding=len(holding),
        families=fam_summary,
        sound=counts["soundness"] == 0,
        complete=counts["completeness"] == 0,
        unique=counts["uniqueness"] == 0,
        violations=violations,
    )


def orbit_representatives(codes, F: FieldSpec) -> list[int]:
    """Smallest code of every GL(2, p)-orbit meeting ``codes``."""
    remaining = set(codes)
    reps = []
    while remaining:
        c = min(remaining)
        orbit = kernels.orbit_codes(kernels.decode(c, 8, F.p), 2, F.p)
        reps.append(min(orbit))
        remaining -= orbit
    return sorted(reps)


__all__ = ["AuditReport", "audit_completeness", "census", "holds", "orbit_representatives"]
