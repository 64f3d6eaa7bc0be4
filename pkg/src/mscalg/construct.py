"""Inductive extension of algebras by one dimension.

Given an ``m``-dimensional algebra ``A'`` with blocks ``A'_2 .. A'_n``
(``n = m + 1``), the extended algebra has

* an arbitrary first block ``A_1`` (``n x n``),
* for ``i >= 2`` the block ``A_i = [[-tr A'_i, 0], [abar_i, A'_i]]``.

If ``tr A_1 != 0`` and the stacked matrix ``A'_bl`` of the blocks
``A'_i + tr(A'_i) I`` has rank ``m``, then trivial derivations (and trivial
automorphisms) of ``A'`` carry over to the extension.  If ``A'`` is simple,
the first row of ``A_1`` off the diagonal is nonzero and the augmented
matrix ``A''_bl`` with blocks ``(abar_i | A'_i + tr(A'_i) I)`` has rank
``n``, simplicity carries over as well.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import automorphisms, derivations, simplicity
from .algebra import Msc
from .errors import (
    AugmentedRankFailed,
    DimensionMismatch,
    FirstRowZero,
    NotSimpleInput,
    RankConditionFailed,
    SearchExhausted,
    TraceConditionFailed,
)
from .field import FieldSpec, Scalar, sample_scalar
from .linalg import Mat, gl_order

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class SeedParams:
    """Parameters ``(alpha1, alpha2, alpha4, beta1)`` of the 2-dimensional seed."""

    a1: Scalar = 0
    a2: Scalar = 0
    a4: Scalar = 0
    b1: Scalar = 0

    @classmethod
    def of(cls, c: SeedParams | Sequence) -> SeedParams:
        return c if isinstance(c, SeedParams) else cls(*c)

    def values(self) -> tuple:
        return (self.a1, self.a2, self.a4, self.b1)


@dataclass(frozen=True)
class ExtensionParams:
    """The new first block ``A1`` and the columns ``abar_i`` for ``i = 2..n``."""

    A1: Mat
    abars: tuple[tuple, ...]

    def to_json(self) -> dict:
        F = self.A1.F
        return {"A1": self.A1.to_strings(), "abars": [[F.format(x) for x in v] for v in self.abars]}


def seed2(c: SeedParams | Sequence, F: FieldSpec) -> Msc:
    """``[[a1, a2, 1+a2, a4], [b1, -a1, 1-a1, -a2]]`` over ``F``."""
    a1, a2, a4, b1 = (F(x) for x in SeedParams.of(c).values())
    return Msc(
        [
            [a1, a2, F.add(1, a2), a4],
            [b1, F.neg(a1), F.sub(1, a1), F.neg(a2)],
        ],
        F,
    )


def _shifted_blocks(Aprime: Msc) -> list[Mat]:
    m, F = Aprime.n, Aprime.F
    I = Mat.identity(m, F)
    return [B + I.scale(B.trace()) for B in Aprime.blocks()]


def _check_abars(Aprime: Msc, abars: Sequence[Sequence]) -> tuple[tuple, ...]:
    m, F = Aprime.n, Aprime.F
    if len(abars) != m or any(len(v) != m for v in abars):
        raise DimensionMismatch(f"need {m} columns abar_i of length {m}")
    return tuple(tuple(F(x) for x in v) for v in abars)


def block_column_ranks(Aprime: Msc, abars: Sequence[Sequence] | None = None) -> tuple[int, int | None]:
    """Ranks of ``A'_bl`` and, when ``abars`` is given, of the augmented ``A''_bl``."""
    shifted = _shifted_blocks(Aprime)
    rank_bl = Mat.vstack(shifted).rank()
    if abars is None:
        return rank_bl, None
    cols = _check_abars(Aprime, abars)
    F = Aprime.F
    augmented = [Mat([(v[r],) + B.rows[r] for r in range(B.nrows)], F) for v, B in zip(cols, shifted)]
    return rank_bl, Mat.vstack(augmented).rank()


def _assemble(Aprime: Msc, params: ExtensionParams) -> Msc:
    m, F = Aprime.n, Aprime.F
    n = m + 1
    if params.A1.shape != (n, n) or params.A1.F != F:
        raise DimensionMismatch(f"A1 must be {n}x{n} over {F}")
    abars = _check_abars(Aprime, params.abars)
    blocks = [params.A1]
    for B, v in zip(Aprime.blocks(), abars):
        rows = [(F.neg(B.trace()),) + (F.zero,) * m]
        rows += [(v[r],) + B.rows[r] for r in range(m)]
        blocks.append(Mat(rows, F))
    return Msc.from_blocks(blocks)


def extend_trivial(Aprime: Msc, params: ExtensionParams) -> Msc:
    """Extension preserving trivial derivations and trivial automorphisms.

    Raises:
        TraceConditionFailed: ``tr(A1) == 0``.
        RankConditionFailed: ``rank A'_bl != m``.
    """
    if params.A1.trace() == 0:
        raise TraceConditionFailed("tr(A1) must be nonzero")
    rank_bl, _ = block_column_ranks(Aprime)
    if rank_bl != Aprime.n:
        raise RankConditionFailed(f"rank of the shifted block column is {rank_bl}, need {Aprime.n}")
    return _assemble(Aprime, params)


def extend_simple(Aprime: Msc, params: ExtensionParams, *, check_input: bool = True) -> Msc:
    """Extension preserving simplicity.

    Raises:
        FirstRowZero: the first row of ``A1`` vanishes outside the (1,1) entry.
        RankConditionFailed: ``rank A'_bl != m``.
        AugmentedRankFailed: ``rank A''_bl != m + 1``.
        NotSimpleInput: ``Aprime`` is not simple (checked when ``check_input``).
    """
    if all(x == 0 for x in params.A1.rows[0][1:]):
        raise FirstRowZero("first row of A1 is zero off the diagonal")
    rank_bl, rank_bl2 = block_column_ranks(Aprime, params.abars)
    if rank_bl != Aprime.n:
        raise RankConditionFailed(f"rank of the shifted block column is {rank_bl}, need {Aprime.n}")
    if rank_bl2 != Aprime.n + 1:
        raise AugmentedRankFailed(f"rank of the augmented block column is {rank_bl2}, need {Aprime.n + 1}")
    if check_input and simplicity.decide_simple(Aprime).status is not simplicity.SimpleStatus.SIMPLE:
        raise NotSimpleInput("the input algebra is not known to be simple")
    return _assemble(Aprime, params)


# ---------------------------------------------------------------------------
# chains


class ChainMode(enum.Enum):
    TRIVIAL_ONLY = "TrivialOnly"
    SIMPLE_TOO = "SimpleToo"


@dataclass
class Stage:
    msc: Msc
    checks: dict
    params: ExtensionParams | None = None
    attempts: int = 0
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"n": self.msc.n, "msc": self.msc.to_json(), "checks": self.checks}
        if self.params is not None:
            out["params"] = self.params.to_json()
            out["attempts"] = self.attempts
        if self.notes:
            out["notes"] = self.notes
        return out


def _deterministic_params(n: int, F: FieldSpec) -> Iterator[ExtensionParams]:
    m = n - 1
    I = Mat.identity(n, F)

    def unit(j):
        rows = [[0] * n for _ in range(n)]
        rows[0][j] = 1
        return Mat(rows, F)

    a1s = [I] + [I + unit(j) for j in range(1, n)]
    a1s.append(I + sum((unit(j) for j in range(2, n)), unit(1)))
    zero = tuple(F.zero for _ in range(m))
    e1 = (F.one,) + zero[1:]
    abar_sets = [(zero,) * m]
    abar_sets += [tuple(e1 if i == k else zero for i in range(m)) for k in range(m)]
    abar_sets.append((e1,) * m)
    for A1, abars in itertools.product(a1s, abar_sets):
        yield ExtensionParams(A1, abars)


def _random_params(n: int, F: FieldSpec, rng: random.Random) -> Iterator[ExtensionParams]:
    m = n - 1
    while True:
        A1 = Mat([[sample_scalar(F, rng, 2) for _ in range(n)] for _ in range(n)], F)
        abars = tuple(tuple(sample_scalar(F, rng, 2) for _ in range(m)) for _ in range(m))
        yield ExtensionParams(A1, abars)


def stage_checks(A: Msc, budget: int = DEFAULT_BUDGET, simple_method=None) -> dict:
    """Independent property checks recorded for each tower stage."""
    F = A.F
    out: dict = {"trivial_der": derivations.is_trivial_der(A)}
    if F.is_finite and gl_order(A.n, F.p) <= budget:
        out["aut"] = automorphisms.decide_trivial_aut(A, budget).to_json()
    else:
        out["aut"] = {"status": "NotChecked", "reason": "no exhaustive scan within budget"}
    out["simple"] = simplicity.decide_simple(A, simple_method, budget).to_json()
    out["rank_bl"] = block_column_ranks(A)[0]
    return out


def build_chain(
    seed: SeedParams | Sequence,
    F: FieldSpec,
    target_n: int,
    mode: ChainMode | str = ChainMode.TRIVIAL_ONLY,
    rng: random.Random | None = None,
    max_attempts: int = 1000,
    budget: int = DEFAULT_BUDGET,
) -> list[Stage]:
    """Grow the seed to dimension ``target_n`` one step at a time.

    Every intermediate stage is chosen so that the rank condition of the next
    step holds.  Deterministic parameter choices are tried first; seeded
    random draws follow only when ``rng`` is supplied.

    Raises:
        SearchExhausted: no admissible parameters within ``max_attempts``.
    """
    mode = ChainMode(mode)
    if target_n < 2:
        raise ValueError("target_n must be at least 2")
    simple = mode is ChainMode.SIMPLE_TOO

    A = seed2(seed, F)
    checks = stage_checks(A, budget)
    stages = [Stage(A, checks)]
    if not checks["trivial_der"]:
        raise SearchExhausted("seed algebra has nontrivial derivations")
    if simple and checks["simple"]["status"] != "Simple":
        raise SearchExhausted("seed algebra is not simple")
    if target_n > 2 and checks["rank_bl"] != 2:
        raise SearchExhausted(f"seed algebra fails the rank condition over {F} (rank {checks['rank_bl']})")

    for n in range(3, target_n + 1):
        prev = stages[-1]
        last = n == target_n
        candidates = _deterministic_params(n, F)
        if rng is not None:
            candidates = itertools.chain(candidates, _random_params(n, F, rng))
        found = None
        for attempt, params in enumerate(itertools.islice(candidates, max_attempts), 1):
            try:
                if simple:
                    if params.A1.trace() == 0:
                        continue
                    A = extend_simple(prev.msc, params, check_input=False)
                else:
                    A = extend_trivial(prev.msc, params)
            except (TraceConditionFailed, RankConditionFailed, AugmentedRankFailed, FirstRowZero):
                continue
            if not last and block_column_ranks(A)[0] != n:
                continue
            found = (A, params, attempt)
            break
        if found is None:
            hint = "" if rng is not None else " (random phase disabled: no seed)"
            raise SearchExhausted(f"no admissible extension to n={n} within {max_attempts} attempts{hint}")
        A, params, attempt = found
        checks = stage_checks(A, budget)
        stage = Stage(A, checks, params, attempt)
        # the extension theorems guarantee these; a failure means a bug, not bad luck
        assert checks["trivial_der"], "extension lost trivial derivations"
        if simple:
            assert checks["simple"]["status"] == "Simple", "extension lost simplicity"
        prev_aut = prev.checks["aut"]["status"]
        if prev_aut == "Trivial":
            stage.notes.append("trivial Aut guaranteed: previous stage verified exhaustively")
            if checks["aut"]["status"] not in ("Trivial", "NotChecked"):
                raise AssertionError("extension lost trivial automorphisms")
        elif checks["aut"]["status"] == "NotChecked":
            stage.notes.append("trivial Aut conditional on trivial Aut of the seed (not decidable here)")
        stages.append(stage)
    return stages


def chain(
    seed: SeedParams | Sequence,
    F: FieldSpec,
    target_n: int,
    mode: ChainMode | str = ChainMode.TRIVIAL_ONLY,
    rng: random.Random | None = None,
    max_attempts: int = 1000,
    budget: int = DEFAULT_BUDGET,
) -> list[Msc]:
    """The algebras of :func:`build_chain`, dimensions ``2 .. target_n``."""
    return [s.msc for s in build_chain(seed, F, target_n, mode, rng, max_attempts, budget)]


def tower_json(stages: Sequence[Stage]) -> list[dict]:
    return [s.to_json() for s in stages]
