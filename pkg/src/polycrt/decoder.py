"""Closed-form robust reconstruction from erroneous residues.

Given received residues ``r1 = a1 + e1`` and ``r2 = a2 + e2`` of an unknown
polynomial ``a``, the decoder recovers the folding polynomial ``k2`` exactly
and returns ``a_hat = k2_hat * m2 + r2``, so the reconstruction differs from
``a`` only by ``e2``.  Operating at level ``i`` this is guaranteed whenever

    deg(a)  <  deg(lcm) - deg(sigma_i)      (dynamic range)
    deg(e1), deg(e2)  <  deg(m) + deg(sigma_i)   (error bound)

The decision variable is the received-residue difference ``q21 = r1 - r2``,
whose degree cannot be moved across the decision thresholds by in-bound
errors:

* ``deg(m) + deg(sigma_i) <= deg(q21) < deg(m1)``: the clean residues differ
  but both fit below ``deg(m1)``.  A remainder cascade modulo
  ``m*sigma_1, ..., m*sigma_i`` strips the folded difference down to
  ``e1 - e2``, so ``q21 - tail`` is the clean difference ``a1 - a2`` and
  ``k2`` follows from the cofactor inverse.
* ``deg(q21) >= deg(m1)``: the second clean residue is at least as big as
  ``m1``; one extra reduction modulo ``m1`` first brings the difference into
  the same cascade.
* ``deg(q21) < deg(m) + deg(sigma_i)``: the clean residues are equal, so
  ``k2 = 0`` and ``r2`` already approximates ``a``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    DegreeOutOfRangeError,
    InexactDivisionError,
    MixedFieldsError,
)
from .levels import ModuliPairAnalysis
from .poly import Polynomial


class Branch(enum.Enum):
    """Which decision branch the decoder took for a residue pair."""

    FOLDED_DIFFERENCE = "folded_difference"
    LARGE_RESIDUE = "large_residue"
    EQUAL_RESIDUES = "equal_residues"


@dataclass(frozen=True)
class ErroneousResiduePair:
    """Received residues, still reduced modulo their respective moduli."""

    r1: Polynomial
    r2: Polynomial
    moduli: ModuliPairAnalysis

    def __post_init__(self) -> None:
        if self.r1.field != self.moduli.field or self.r2.field != self.moduli.field:
            raise MixedFieldsError("residues must live in the moduli's field")
        if not self.r1.degree < self.moduli.m1.degree:
            raise DegreeOutOfRangeError(
                f"deg(r1) = {self.r1.degree} not below deg(m1) = {self.moduli.m1.degree}"
            )
        if not self.r2.degree < self.moduli.m2.degree:
            raise DegreeOutOfRangeError(
                f"deg(r2) = {self.r2.degree} not below deg(m2) = {self.moduli.m2.degree}"
            )


@dataclass(frozen=True)
class ReconstructionResult:
    """Decoder output: estimate, recovered folding polynomial and diagnostics.

    ``a_hat = k2_hat * m2 + r2`` always holds exactly.  ``cascade_tail`` is
    the final cascade remainder (zero for :attr:`Branch.EQUAL_RESIDUES`).
    """

    a_hat: Polynomial
    k2_hat: Polynomial
    branch: Branch
    q21: Polynomial
    cascade_tail: Polynomial

    def to_json(self) -> dict:
        return {
            "aHat": str(self.a_hat),
            "k2Hat": str(self.k2_hat),
            "branch": self.branch.value,
            "q21": str(self.q21),
            "cascadeTail": str(self.cascade_tail),
        }


def remainder_cascade(
    v: Polynomial, analysis: ModuliPairAnalysis, level: int
) -> Polynomial:
    """Reduce ``v`` successively modulo ``m*sigma_1, ..., m*sigma_level``.

    Step moduli have strictly decreasing degrees, so the cascade strips one
    degree window at a time; inputs already below ``deg(m*sigma_level)``
    pass through unchanged.
    """
    analysis.level_spec(level)
    for step in analysis.cascade_moduli[:level]:
        v = v % step
    return v


def classify(q21: Polynomial, analysis: ModuliPairAnalysis, level: int) -> Branch:
    """Decision branch for a received-residue difference at the given level.

    The three branches are exhaustive and mutually exclusive; the zero
    difference has degree NEG_INF and lands in EQUAL_RESIDUES.
    """
    spec = analysis.level_spec(level)
    deg = q21.degree
    if deg >= analysis.m1.degree:
        return Branch.LARGE_RESIDUE
    if deg >= spec.error_bound_exclusive:
        return Branch.FOLDED_DIFFERENCE
    return Branch.EQUAL_RESIDUES


def reconstruct(pair: ErroneousResiduePair, level: int) -> ReconstructionResult:
    """Robust reconstruction of ``a`` from erroneous residues at ``level``.

    Within the level's dynamic range and error bound the recovered
    ``k2_hat`` equals the true folding polynomial and
    ``a_hat - a = e2``.  Outside those bounds the decoder still returns a
    (possibly wrong) result; there is no reliable detector for violated
    preconditions, although an inexact division would be surfaced as
    :class:`InexactDivisionError` rather than truncated.
    """
    analysis = pair.moduli
    zero = Polynomial(analysis.field)
    q21 = pair.r1 - pair.r2
    branch = classify(q21, analysis, level)

    if branch is Branch.EQUAL_RESIDUES:
        k2_hat = zero
        tail = zero
    else:
        start = q21 if branch is Branch.FOLDED_DIFFERENCE else q21 % analysis.m1
        tail = remainder_cascade(start, analysis, level)
        quot, rem = divmod(q21 - tail, analysis.m)
        if not rem.is_zero:
            raise InexactDivisionError(
                "difference minus cascade tail is not divisible by the gcd;"
                " residues violate the decoder's preconditions"
            )
        k2_hat = (quot * analysis.gamma_inv21) % analysis.gamma1

    a_hat = k2_hat * analysis.m2 + pair.r2
    return ReconstructionResult(a_hat, k2_hat, branch, q21, tail)


def reconstruct_full_range(pair: ErroneousResiduePair) -> ReconstructionResult:
    """Reconstruction at the top level: full dynamic range ``deg(lcm)``.

    The final chain entry is a scalar, so the error bound collapses to
    ``deg(m)`` while the admissible message degree reaches its maximum.
    """
    return reconstruct(pair, pair.moduli.K + 1)
