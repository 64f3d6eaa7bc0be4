"""Finite-field census experiments: property densities and the Der/Aut inclusion.

Density over GF(q) is a proxy for the density of an open condition: if the
complement is cut out by polynomial equations its mass shrinks like O(1/q).
Nothing here proves a topological statement; every report says so.

Sampling is deterministic: samples are drawn in fixed-size chunks, chunk
``i`` from ``random.Random`` seeded by ``(seed, i)``, so results do not depend
on the number of worker processes.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from random import Random
from typing import Callable, Iterable, Sequence, TextIO

from . import kernels
from .algebra import Msc
from .automorphisms import are_isomorphic
from .derivations import derivation_system
from .errors import BudgetExceeded, NotFiniteField
from .field import FieldSpec
from .linalg import kronecker, matrices_over
from .simplicity import SimpleMethod, SimpleStatus, decide_simple

EXHAUSTIVE = "exhaustive"
CHUNK = 1000
DEFAULT_BUDGET = 10**7
# candidate matrices (p ** (n * n)) scanned per MSC for the Aut flag
DEFAULT_AUT_BUDGET = 10**5

TRIV_DER, TRIV_AUT, SIMPLE = 1, 2, 4
PROXY_NOTE = "finite-field proxy: fractions of GF(q)-points, not a proof of density"


def _map(func: Callable, tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(func, tasks))


def chunk_rng(seed: int, index: int) -> Random:
    """The PRNG stream of sample chunk ``index`` under master ``seed``."""
    return Random(f"mscalg:{seed}:{index}")


def sample_mscs(n: int, p: int, seed: int, index: int, size: int) -> list[tuple]:
    rng = chunk_rng(seed, index)
    total = n * n * n
    return [tuple(rng.randrange(p) for _ in range(total)) for _ in range(size)]


def _library_flags(flat: Sequence[int], n: int, F: FieldSpec, check_aut: bool) -> int:
    """Census flags via the exact Mat-based checkers, independent of the kernels."""
    A = Msc.from_flat(flat, n, F)
    flags = 0
    if derivation_system(A).rank == n * n:
        flags |= TRIV_DER
    if check_aut:
        count = 0
        for g in matrices_over(n, F):
            if g.det() != 0 and g @ A.mat == A.mat @ kronecker(g, g):
                count += 1
                if count > 1:
                    break
        if count == 1:
            flags |= TRIV_AUT
    method = SimpleMethod.EIGENLINE_SEARCH if n <= 3 else SimpleMethod.CANDIDATE_CLOSURES
    if decide_simple(A, method).status is SimpleStatus.SIMPLE:
        flags |= SIMPLE
    return flags


def _flags_of(mscs: list[tuple], n: int, p: int, check_aut: bool, engine: str) -> bytes:
    if engine == "kernels":
        return kernels.classify(mscs, n, p, check_aut)
    F = FieldSpec.GF(p)
    return bytes(_library_flags(a, n, F, check_aut) for a in mscs)


def _sample_task(args) -> tuple[list[tuple], bytes]:
    n, p, seed, index, size, check_aut, engine = args
    mscs = sample_mscs(n, p, seed, index, size)
    return mscs, _flags_of(mscs, n, p, check_aut, engine)


def _range_task(args) -> tuple[list[tuple], bytes]:
    n, p, start, stop, check_aut, engine = args
    total = n * n * n
    mscs = [kernels.decode(c, total, p) for c in range(start, stop)]
    return mscs, _flags_of(mscs, n, p, check_aut, engine)


def _scan(
    F: FieldSpec,
    n: int,
    samples: int | str,
    seed: int | None,
    workers: int,
    budget: int,
    check_aut: bool,
    engine: str,
) -> Iterable[tuple[list[tuple], bytes]]:
    if not F.is_finite:
        raise NotFiniteField("census experiments need GF(p); Q has no uniform measure")
    if engine not in ("kernels", "library"):
        raise ValueError(f"unknown engine {engine!r}")
    p = F.p
    if samples == EXHAUSTIVE:
        total = p ** (n * n * n)
        if total > budget:
            raise BudgetExceeded(total, budget, "MSCs")
        tasks = [(n, p, s, min(s + CHUNK, total), check_aut, engine) for s in range(0, total, CHUNK)]
        return _map(_range_task, tasks, workers)
    if seed is None:
        raise ValueError("sampling needs an explicit seed")
    if not isinstance(samples, int) or samples < 0:
        raise ValueError(f"samples must be a count or {EXHAUSTIVE!r}")
    if samples > budget:
        raise BudgetExceeded(samples, budget, "samples")
    tasks = [
        (n, p, seed, i, min(CHUNK, samples - i * CHUNK), check_aut, engine)
        for i in range(-(-samples // CHUNK))
    ]
    return _map(_sample_task, tasks, workers)


def _aut_feasible(n: int, p: int, aut_budget: int) -> bool:
    return p ** (n * n) <= aut_budget


@dataclass
class DensityReport:
    field: FieldSpec
    n: int
    samples: int | str
    seed: int | None
    total: int
    counts: dict
    aut_checked: bool
    engine: str = "kernels"
    runtime_s: float = 0.0

    @property
    def fractions(self) -> dict:
        return {k: (None if v is None else v / self.total if self.total else 0.0) for k, v in self.counts.items()}

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "field": self.field.to_json(),
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "total": self.total,
            "counts": self.counts,
            "fractions": self.fractions,
            "aut_checked": self.aut_checked,
            "engine": self.engine,
            "note": PROXY_NOTE,
        }
        if not self.aut_checked:
            out["aut_note"] = f"|GL({self.n},{self.field.p})| scan over the Aut budget; trivial_aut and star not computed"
        if timing:
            out["runtime_s"] = round(self.runtime_s, 3)
        return out


def density_scan(
    F: FieldSpec,
    n: int = 2,
    samples: int | str = EXHAUSTIVE,
    seed: int | None = None,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    aut_budget: int = DEFAULT_AUT_BUDGET,
    engine: str = "kernels",
) -> DensityReport:
    """Fractions of MSCs over GF(p) with trivial Der, trivial Aut, simplicity and all three.

    Args:
        samples: a sample count, or ``EXHAUSTIVE`` for all ``p ** n**3`` MSCs.
        seed: master seed; required when sampling.
        budget: cap on the number of MSCs examined.
        aut_budget: the Aut flag is computed only when ``p ** (n*n)`` is within it.
        engine: ``"kernels"`` (GF(p) kernels) or ``"library"`` (exact Mat-based
            checkers, slow but independent of the kernels).

    Raises:
        BudgetExceeded: too many MSCs.
        NotFiniteField: ``F`` is Q.
    """
    start = time.perf_counter()
    check_aut = _aut_feasible(n, F.p if F.is_finite else 0, aut_budget)
    der = aut = simple = star = total = 0
    for _, flags in _scan(F, n, samples, seed, workers, budget, check_aut, engine):
        for f in flags:
            total += 1
            der += bool(f & TRIV_DER)
            aut += bool(f & TRIV_AUT)
            simple += bool(f & SIMPLE)
            star += f == TRIV_DER | TRIV_AUT | SIMPLE
    counts = {
        "trivial_der": der,
        "trivial_aut": aut if check_aut else None,
        "simple": simple,
        "star": star if check_aut else None,
    }
    return DensityReport(
        field=F,
        n=n,
        samples=samples,
        seed=None if samples == EXHAUSTIVE else seed,
        total=total,
        counts=counts,
        aut_checked=check_aut,
        engine=engine,
        runtime_s=time.perf_counter() - start,
    )


CSV_COLUMNS = ("p", "n", "samples", "seed", "trivial_der", "trivial_aut", "simple", "star")


def write_csv(reports: Iterable[DensityReport], out: TextIO | None = None) -> str:
    """Plot-ready CSV, one row per report: ``p``, sample info and the four fractions."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        fr = r.fractions
        w.writerow(
            [r.field.p, r.n, r.samples, "" if r.seed is None else r.seed]
            + ["" if fr[k] is None else f"{fr[k]:.6f}" for k in CSV_COLUMNS[4:]]
        )
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text


def density_trend(
    primes: Sequence[int],
    n: int = 2,
    samples: int | str = EXHAUSTIVE,
    seed: int | None = None,
    **kwargs,
) -> list[DensityReport]:
    return [density_scan(FieldSpec.GF(p), n, samples, seed, **kwargs) for p in primes]


@dataclass
class InclusionReport:
    field: FieldSpec
    n: int
    samples: int | str
    seed: int | None
    total: int
    aut_not_der: int
    der_not_aut: int
    members: dict = field(default_factory=dict)
    runtime_s: float = 0.0

    @property
    def inclusion_holds(self) -> bool:
        """Trivial Aut implies trivial Der on every scanned MSC."""
        return self.aut_not_der == 0

    @property
    def all_matched(self) -> bool:
        return all(m["match"] is not None for ms in self.members.values() for m in ms)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "field": self.field.to_json(),
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "total": self.total,
            "counts": {"aut_not_der": self.aut_not_der, "der_not_aut": self.der_not_aut},
            "inclusion_holds": self.inclusion_holds,
            "all_matched": self.all_matched,
            "members": self.members,
        }
        if timing:
            out["runtime_s"] = round(self.runtime_s, 3)
        return out


def _table_instances(F: FieldSpec, prop: str, budget: int) -> list[tuple[str, dict, int]]:
    from .classify2d import enumerate_instances, table

    try:
        fams = table(F, prop)
    except LookupError:
        return []
    out = []
    for fam in fams:
        for values, A in enumerate_instances(fam, F, budget=budget, with_values=True):
            out.append((fam.id, {k: F.format(v) for k, v in values.items()}, kernels.encode(A.flat(), F.p)))
    return out


def _members(codes: set[int], n: int, F: FieldSpec, prop: str, budget: int, max_listed: int) -> list[dict]:
    p, total = F.p, n * n * n
    instances = _table_instances(F, prop, budget) if n == 2 else []
    remaining = set(codes)
    out = []
    while remaining and len(out) < max_listed:
        c = min(remaining)
        orbit = kernels.orbit_codes(kernels.decode(c, total, p), n, p)
        rep = min(orbit)
        member = Msc.from_flat(kernels.decode(rep, total, p), n, F)
        match = None
        for fid, values, icode in instances:
            if icode in orbit:
                inst = Msc.from_flat(kernels.decode(icode, total, p), n, F)
                g = are_isomorphic(inst, member, budget)
                match = {"family": fid, "params": values, "g": g.to_strings()}
                break
        out.append(
            {
                "msc": member.to_json()["entries"],
                "orbit_size": len(orbit),
                "hits": len(orbit & remaining),
                "match": match,
            }
        )
        remaining -= orbit
    return out


def inclusion_scan(
    F: FieldSpec,
    n: int = 2,
    samples: int | str = EXHAUSTIVE,
    seed: int | None = None,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    aut_budget: int = DEFAULT_AUT_BUDGET,
    max_listed: int = 50,
) -> InclusionReport:
    """Count MSCs in the two differences between trivial-Der and trivial-Aut.

    Members of both differences are grouped into GL(n, p)-orbits; for n = 2 each
    orbit is matched against the classification table of its difference set
    with an explicit isomorphism ``g`` (``change_basis(instance, g) == member``).
    At most ``max_listed`` orbits are listed per difference.

    Raises:
        BudgetExceeded: too many MSCs, or the Aut scan is over ``aut_budget``.
    """
    start = time.perf_counter()
    if not F.is_finite:
        raise NotFiniteField("inclusion scans need GF(p)")
    if not _aut_feasible(n, F.p, aut_budget):
        raise BudgetExceeded(F.p ** (n * n), aut_budget, "candidate automorphisms per MSC")
    p = F.p
    total = 0
    and_codes: set[int] = set()
    dna_codes: set[int] = set()
    and_count = dna_count = 0
    for mscs, flags in _scan(F, n, samples, seed, workers, budget, True, "kernels"):
        for a, f in zip(mscs, flags):
            total += 1
            der, aut = bool(f & TRIV_DER), bool(f & TRIV_AUT)
            if aut and not der:
                and_count += 1
                and_codes.add(kernels.encode(a, p))
            elif der and not aut:
                dna_count += 1
                dna_codes.add(kernels.encode(a, p))
    members = {
        "DerNotAut": _members(dna_codes, n, F, "DerNotAut", budget, max_listed),
        "AutNotDer": _members(and_codes, n, F, "AutNotDer", budget, max_listed),
    }
    return InclusionReport(
        field=F,
        n=n,
        samples=samples,
        seed=None if samples == EXHAUSTIVE else seed,
        total=total,
        aut_not_der=and_count,
        der_not_aut=dna_count,
        members=members,
        runtime_s=time.perf_counter() - start,
    )


__all__ = [
    "CSV_COLUMNS",
    "DensityReport",
    "EXHAUSTIVE",
    "InclusionReport",
    "chunk_rng",
    "density_scan",
    "density_trend",
    "inclusion_scan",
    "sample_mscs",
    "write_csv",
]
