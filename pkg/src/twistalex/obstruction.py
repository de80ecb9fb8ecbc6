"""The three-part fibredness verdict for a twisted Alexander presentation:
torsionness, principality evidence, and monicness of the polynomial.

The obstruction is one-directional: a fibred knot always produces a
consistent report, so any failed conclusion certifies non-fibredness,
while a consistent report proves nothing.
"""

from __future__ import annotations

import dataclasses
from typing import Literal

from . import laurent
from .errors import MinorLimitError
from .exactla import (DEFAULT_MAX_MINORS, LambdaMatrix, maximal_minor_gcd,
                      rank_over_fractions)
from .laurent import LaurentPoly

CONSISTENT = "consistent-with-fibred"
NOT_FIBRED = "NOT-fibred-certificate"
INCONCLUSIVE = "inconclusive"

EXIT_CODES = {CONSISTENT: 0, NOT_FIBRED: 2, INCONCLUSIVE: 3}


@dataclasses.dataclass(frozen=True)
class ObstructionReport:
    torsion: Literal["yes", "no"]
    principal: Literal["yes", "unknown"]
    monic: Literal["yes", "no", "undefined"]
    delta: LaurentPoly
    verdict: Literal["consistent-with-fibred", "NOT-fibred-certificate", "inconclusive"]
    reasons: tuple[str, ...]

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]


def evaluate_fibred_obstruction(p: LambdaMatrix,
                                max_minors: int = DEFAULT_MAX_MINORS) -> ObstructionReport:
    """Evaluate the three conclusions on a presentation matrix (rows are
    generators, columns relations).

    Torsionness is decided by the rank over the fraction field; delta is
    the gcd of the maximal minors; principality is only ever asserted for
    square presentations (the sufficient condition the fibred computation
    produces), never decided in general.
    """
    n = p.rows
    reasons: list[str] = []

    rank = rank_over_fractions(p)
    torsion = "yes" if rank == n else "no"
    if torsion == "yes":
        reasons.append(f"(1) torsion: presentation has full rank {n}")
    else:
        reasons.append(f"(1) FAILS: rank {rank} < {n} generators, module is not torsion")

    principal = "yes" if p.rows == p.cols else "unknown"
    if principal == "yes":
        reasons.append("(2) principal: presentation matrix is square")
    else:
        reasons.append("(2) undetermined: non-square presentation, principality not decided")

    capped = False
    try:
        delta = maximal_minor_gcd(p, max_minors=max_minors).delta
    except MinorLimitError as e:
        capped = True
        delta = laurent.ZERO
        reasons.append(f"(3) undetermined: {e}")
    if capped:
        monic = "undefined"
    elif delta.is_zero:
        monic = "undefined"
        reasons.append("(3) undefined: delta = 0")
    elif laurent.is_monic(delta):
        monic = "yes"
        reasons.append(f"(3) monic: delta = {delta}")
    else:
        monic = "no"
        reasons.append(f"(3) FAILS: delta = {delta} is not monic")

    if torsion == "no" or monic == "no":
        verdict = NOT_FIBRED
    elif torsion == "yes" and principal == "yes" and monic == "yes":
        verdict = CONSISTENT
    else:
        verdict = INCONCLUSIVE

    return ObstructionReport(
        torsion=torsion,
        principal=principal,
        monic=monic,
        delta=delta,
        verdict=verdict,
        reasons=tuple(reasons),
    )


def annihilator_consequence(report: ObstructionReport, group_order: int | None) -> bool:
    """Whether a monic annihilator is compatible with the module surjecting
    onto (group) tensor Z[s, s^-1].

    A nontrivial group tensored with the Laurent ring is never annihilated
    by a nonzero monic polynomial (and a free abelian factor admits no
    nonzero annihilator at all), so False means the obstruction fires: a
    report claiming a monic annihilator contradicts the surjection, and
    the knot cannot be fibred.  ``group_order`` of None means infinite.
    """
    return group_order == 1
