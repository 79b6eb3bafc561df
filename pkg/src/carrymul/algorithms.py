"""The two multiplication algorithms and the runtime invariant checker.

The incremental algorithm walks the multiplier's digits from the units up.
Step k multiplies the whole multiplicand by that digit, adds the carry left
by the previous step, emits the units digit of the sum as result digit k and
carries the rest (a value that may be as long as the multiplicand) into the
next step.  The final carry, placed above the emitted digits, completes the
product, so no partial-product rows are ever stored.

The schoolbook algorithm is the classical contrast: it builds every shifted
partial-product row first and adds them all at the end.

Both record a full Trace so the work can be replayed, rendered and audited.
"""

from __future__ import annotations

from dataclasses import dataclass

from carrymul import kernels
from carrymul.arith import OpCounters
from carrymul.digits import Natural, require_same_base
from carrymul.errors import DigitOutOfRange, WrongAlgorithm

INCREMENTAL = "incremental"
SCHOOLBOOK = "schoolbook"
ALGORITHMS = (INCREMENTAL, SCHOOLBOOK)


@dataclass(frozen=True)
class StepRecord:
    """One incremental step: full sum s, emitted digit r, outgoing carry."""

    k: int
    s: Natural
    r: int
    c_next: Natural


@dataclass(frozen=True)
class Trace:
    algorithm: str
    base: int
    a: Natural
    b: Natural
    steps: tuple[StepRecord, ...]  # incremental only
    rows: tuple[Natural, ...]  # schoolbook only
    result: Natural
    counters: OpCounters


def incremental_multiply(a: Natural, b: Natural) -> Trace:
    """Run the incremental algorithm, recording every step.

    A zero multiplier (empty digit vector) yields an empty step list and a
    zero result; a zero multiplicand runs the ordinary path with every sum,
    digit and carry at zero.
    """
    base = require_same_base(a, b)
    raw_steps, result, mults, adds = kernels.impl.incremental(
        list(a.digits), list(b.digits), base
    )
    steps = tuple(
        StepRecord(k, Natural(tuple(s), base), r, Natural(tuple(c), base))
        for k, (s, r, c) in enumerate(raw_steps)
    )
    return Trace(
        algorithm=INCREMENTAL,
        base=base,
        a=a,
        b=b,
        steps=steps,
        rows=(),
        result=Natural(tuple(result), base),
        counters=OpCounters(mults, adds),
    )


def schoolbook_multiply(a: Natural, b: Natural) -> Trace:
    base = require_same_base(a, b)
    raw_rows, result, mults, adds = kernels.impl.schoolbook(
        list(a.digits), list(b.digits), base
    )
    return Trace(
        algorithm=SCHOOLBOOK,
        base=base,
        a=a,
        b=b,
        steps=(),
        rows=tuple(Natural(tuple(row), base) for row in raw_rows),
        result=Natural(tuple(result), base),
        counters=OpCounters(mults, adds),
    )


def check_invariant(trace: Trace) -> list[bool]:
    """Re-derive the per-step invariant of an incremental trace.

    Entry k is True iff the digits emitted through step k plus the shifted
    outgoing carry equal the product of the multiplicand with the low k+1
    digits of the multiplier.  Both sides are recomputed with exact
    digit-vector arithmetic; only each step's emitted digit and carry are
    read back, never its recorded sum.
    """
    if trace.algorithm != INCREMENTAL:
        raise WrongAlgorithm(trace.algorithm)
    for step in trace.steps:
        if not 0 <= step.r < trace.base:
            raise DigitOutOfRange(step.k, step.r, trace.base)
    raw_steps = [(list(s.s.digits), s.r, list(s.c_next.digits)) for s in trace.steps]
    return kernels.impl.check_invariant(
        list(trace.a.digits), list(trace.b.digits), raw_steps, trace.base
    )


def multiply(a: Natural, b: Natural, algorithm: str = INCREMENTAL) -> Natural:
    """Product of a and b via the chosen algorithm."""
    if algorithm == INCREMENTAL:
        return incremental_multiply(a, b).result
    if algorithm == SCHOOLBOOK:
        return schoolbook_multiply(a, b).result
    raise ValueError(f"unknown algorithm {algorithm!r}")
