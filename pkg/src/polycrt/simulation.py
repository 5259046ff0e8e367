"""Randomized campaigns and exhaustive oracles for the robust decoder.

Campaigns draw a message and per-residue errors inside a level's bounds,
corrupt the encoded residues, decode, and record whether the folding
polynomial was recovered exactly.  Inside the bounds this must never fail;
`run_campaign` is the executable form of that guarantee.

Determinism contract: every trial seeds its own RNG stream from
``(seed, trial index)`` and the report aggregation is order-independent, so
a campaign's report is byte-for-byte reproducible regardless of how trials
are scheduled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from typing import Iterator, List, Optional, Tuple

from .crt import encode
from .decoder import Branch, ErroneousResiduePair, reconstruct
from .errors import EnumerationTooLargeError, PolyCrtError
from .field import PrimeField
from .levels import ModuliPairAnalysis, analyze_pair
from .poly import NEG_INF, Degree, Polynomial, gcd


def sample_polynomial(
    max_deg_exclusive: int, field: PrimeField, rng: random.Random
) -> Polynomial:
    """Uniform draw over all polynomials of degree below ``max_deg_exclusive``.

    Each of the ``max_deg_exclusive`` coefficients is uniform in ``[0, p)``,
    so the all-zero outcome is included; a bound of 0 always yields the zero
    polynomial.
    """
    if max_deg_exclusive < 0:
        raise ValueError("degree bound must be >= 0")
    p = field.p
    return Polynomial(field, (rng.randrange(p) for _ in range(max_deg_exclusive)))


def sample_error(tau: int, field: PrimeField, rng: random.Random) -> Polynomial:
    """Uniform residue error of degree at most ``tau`` (``-1`` forces zero)."""
    if tau < -1:
        raise ValueError("tau must be >= -1")
    return sample_polynomial(tau + 1, field, rng)


def sample_monic(degree: int, field: PrimeField, rng: random.Random) -> Polynomial:
    """Uniform monic polynomial of exactly the given degree."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    coeffs = [rng.randrange(field.p) for _ in range(degree)]
    coeffs.append(1)
    return Polynomial(field, coeffs)


def enumerate_polynomials(
    field: PrimeField, max_deg_exclusive: int
) -> Iterator[Polynomial]:
    """All ``p**max_deg_exclusive`` polynomials of degree below the bound."""
    p = field.p
    for n in range(p**max_deg_exclusive):
        coeffs = []
        v = n
        for _ in range(max_deg_exclusive):
            coeffs.append(v % p)
            v //= p
        yield Polynomial(field, coeffs)


def random_moduli_pair(
    field: PrimeField,
    rng: random.Random,
    gcd_degree: Tuple[int, int] = (1, 3),
    cofactor_degree: Tuple[int, int] = (1, 4),
    max_attempts: int = 200,
) -> ModuliPairAnalysis:
    """Random valid moduli pair: shared monic factor times coprime cofactors.

    Draws a monic gcd and two monic nonconstant cofactors, retrying until
    the cofactors are coprime.  Degree ranges are inclusive.
    """
    if gcd_degree[0] < 1 or cofactor_degree[0] < 1:
        raise ValueError("gcd and cofactors must be nonconstant")
    for _ in range(max_attempts):
        shared = sample_monic(rng.randint(*gcd_degree), field, rng)
        cof1 = sample_monic(rng.randint(*cofactor_degree), field, rng)
        cof2 = sample_monic(rng.randint(*cofactor_degree), field, rng)
        if gcd(cof1, cof2).degree != 0:
            continue
        return analyze_pair(shared * cof1, shared * cof2)
    raise PolyCrtError(
        f"no coprime cofactor pair found in {max_attempts} attempts"
    )


@dataclass(frozen=True)
class TrialConfig:
    """Campaign parameters; validated on construction.

    In guarantee mode ``tau`` must stay strictly below the level's error
    bound, so any recorded failure is an implementation bug.  Boundary mode
    lifts that restriction to probe behavior outside the guarantee.
    """

    analysis: ModuliPairAnalysis
    level: int
    tau: int
    trials: int
    seed: int
    boundary: bool = False

    def __post_init__(self) -> None:
        spec = self.analysis.level_spec(self.level)
        if self.tau < -1:
            raise ValueError("tau must be >= -1")
        if self.trials < 0:
            raise ValueError("trials must be >= 0")
        if not self.boundary and self.tau >= spec.error_bound_exclusive:
            raise ValueError(
                f"tau = {self.tau} is not below the level-{self.level} error"
                f" bound {spec.error_bound_exclusive}; use boundary mode to"
                " probe beyond the guarantee"
            )

    def to_json(self) -> dict:
        return {
            "p": self.analysis.field.p,
            "m1": str(self.analysis.m1),
            "m2": str(self.analysis.m2),
            "level": self.level,
            "tau": self.tau,
            "trials": self.trials,
            "seed": self.seed,
            "boundary": self.boundary,
        }


@dataclass(frozen=True)
class TrialOutcome:
    """Single decode attempt: inputs, branch taken, and success flags."""

    trial: int
    a: Polynomial
    e1: Polynomial
    e2: Polynomial
    branch: Optional[Branch]
    k2_match: bool
    residual_deg: Optional[Degree]
    residual_is_e2: bool
    success: bool
    error: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "trial": self.trial,
            "a": str(self.a),
            "e1": str(self.e1),
            "e2": str(self.e2),
            "branch": self.branch.value if self.branch else None,
            "k2Match": self.k2_match,
            "residualDeg": _deg_json(self.residual_deg),
            "error": self.error,
        }


@dataclass
class TrialReport:
    """Aggregate campaign results plus the per-trial record."""

    config: TrialConfig
    outcomes: List[TrialOutcome] = dataclass_field(default_factory=list)
    successes: int = 0
    failures: int = 0
    max_residual_deg: Degree = NEG_INF
    branch_counts: dict = dataclass_field(default_factory=dict)
    decode_errors: int = 0

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "successes": self.successes,
            "failures": self.failures,
            "maxErrDeg": _deg_json(self.max_residual_deg),
            "branchCounts": dict(sorted(self.branch_counts.items())),
            "decodeErrors": self.decode_errors,
            "failureDetails": [
                o.to_json() for o in self.outcomes if not o.success
            ],
        }


def _deg_json(deg: Optional[Degree]) -> Optional[int]:
    if deg is None or deg == NEG_INF:
        return None
    return int(deg)


def run_campaign(config: TrialConfig) -> TrialReport:
    """Run the configured number of independent corrupt-then-decode trials.

    A trial succeeds when the folding polynomial is recovered exactly and
    the reconstruction error degree stays within ``tau``.  Decoder errors
    are recorded as failures, never raised.
    """
    analysis = config.analysis
    field = analysis.field
    spec = analysis.level_spec(config.level)
    report = TrialReport(
        config=config, branch_counts={b.value: 0 for b in Branch}
    )
    for idx in range(config.trials):
        rng = random.Random(f"{config.seed}:{idx}")
        a = sample_polynomial(spec.dynamic_range_exclusive, field, rng)
        e1 = sample_error(config.tau, field, rng)
        e2 = sample_error(config.tau, field, rng)
        residues, witness = encode(a, analysis)
        r1 = (residues.a1 + e1) % analysis.m1
        r2 = (residues.a2 + e2) % analysis.m2
        pair = ErroneousResiduePair(r1, r2, analysis)
        try:
            result = reconstruct(pair, config.level)
        except PolyCrtError as exc:
            outcome = TrialOutcome(
                trial=idx,
                a=a,
                e1=e1,
                e2=e2,
                branch=None,
                k2_match=False,
                residual_deg=None,
                residual_is_e2=False,
                success=False,
                error=f"{type(exc).__name__}: {exc}",
            )
            report.decode_errors += 1
        else:
            residual = result.a_hat - a
            k2_match = result.k2_hat == witness.k2
            outcome = TrialOutcome(
                trial=idx,
                a=a,
                e1=e1,
                e2=e2,
                branch=result.branch,
                k2_match=k2_match,
                residual_deg=residual.degree,
                residual_is_e2=residual == e2,
                success=k2_match and residual.degree <= config.tau,
            )
            report.branch_counts[result.branch.value] += 1
            if residual.degree > report.max_residual_deg:
                report.max_residual_deg = residual.degree
        report.outcomes.append(outcome)
        if outcome.success:
            report.successes += 1
        else:
            report.failures += 1
    return report


def render_report(report: TrialReport) -> str:
    """Plain-text campaign summary; lists up to ten failing trials."""
    cfg = report.config
    max_deg = _deg_json(report.max_residual_deg)
    lines = [
        f"mode = {'boundary' if cfg.boundary else 'guarantee'}",
        f"trials = {cfg.trials}",
        f"successes = {report.successes}",
        f"failures = {report.failures}",
        f"max residual degree = {'none' if max_deg is None else max_deg}",
        "branch counts: "
        + ", ".join(f"{k}={v}" for k, v in sorted(report.branch_counts.items())),
    ]
    if report.decode_errors:
        lines.append(f"decode errors = {report.decode_errors}")
    failing = [o for o in report.outcomes if not o.success]
    for outcome in failing[:10]:
        lines.append(
            f"trial {outcome.trial}: a={outcome.a} e1={outcome.e1}"
            f" e2={outcome.e2} branch="
            f"{outcome.branch.value if outcome.branch else 'none'}"
            f" k2Match={outcome.k2_match}"
            f" residualDeg={_deg_json(outcome.residual_deg)}"
            + (f" error={outcome.error}" if outcome.error else "")
        )
    if len(failing) > 10:
        lines.append(f"... and {len(failing) - 10} more failing trials")
    return "\n".join(lines)


def find_difference_bound_violations(
    analysis: ModuliPairAnalysis, level: int, cap: int = 1 << 22
) -> List[Polynomial]:
    """Exhaustively check the degree window of clean residue differences.

    For every ``a`` within the level's dynamic range whose residues differ
    while ``deg(a2) < deg(m1)``, the difference ``a1 - a2`` must satisfy
    ``deg(m) + deg(sigma_level) <= deg(a1 - a2) < deg(m1)``.  Returns the
    list of counterexamples (expected empty); raises
    :class:`EnumerationTooLargeError` when ``p**range`` exceeds ``cap``.
    """
    spec = analysis.level_spec(level)
    field = analysis.field
    count = field.p**spec.dynamic_range_exclusive
    if count > cap:
        raise EnumerationTooLargeError(
            f"{count} candidates exceed the cap of {cap}"
        )
    violations = []
    lo = spec.error_bound_exclusive
    hi = analysis.m1.degree
    for a in enumerate_polynomials(field, spec.dynamic_range_exclusive):
        residues, _ = encode(a, analysis)
        a1, a2 = residues.a1, residues.a2
        if a1 == a2 or not a2.degree < hi:
            continue
        if not lo <= (a1 - a2).degree < hi:
            violations.append(a)
    return violations


@dataclass(frozen=True)
class BoundaryInstance:
    """A replayable decode failure found just outside the error bound."""

    trial: int
    seed: int
    level: int
    tau: int
    a: Polynomial
    e1: Polynomial
    e2: Polynomial
    r1: Polynomial
    r2: Polynomial
    k2_true: Polynomial
    k2_hat: Optional[Polynomial]
    residual_deg: Optional[Degree]
    error: Optional[str] = None


def search_boundary_counterexample(
    analysis: ModuliPairAnalysis, level: int, budget: int, seed: int = 0
) -> Optional[BoundaryInstance]:
    """Randomized search for a failure at ``tau`` equal to the error bound.

    The guarantee requires ``tau`` strictly below ``deg(m) + deg(sigma_i)``;
    this probe samples errors one degree beyond it and returns the first
    trial where the folding polynomial is missed, the residual exceeds
    ``tau``, or the decoder errors out.  Returns ``None`` when the budget is
    exhausted without a failure; finding nothing proves nothing.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    field = analysis.field
    spec = analysis.level_spec(level)
    tau = spec.error_bound_exclusive
    for idx in range(budget):
        rng = random.Random(f"boundary:{seed}:{idx}")
        a = sample_polynomial(spec.dynamic_range_exclusive, field, rng)
        e1 = sample_error(tau, field, rng)
        e2 = sample_error(tau, field, rng)
        residues, witness = encode(a, analysis)
        r1 = (residues.a1 + e1) % analysis.m1
        r2 = (residues.a2 + e2) % analysis.m2
        pair = ErroneousResiduePair(r1, r2, analysis)
        try:
            result = reconstruct(pair, level)
        except PolyCrtError as exc:
            return BoundaryInstance(
                trial=idx,
                seed=seed,
                level=level,
                tau=tau,
                a=a,
                e1=e1,
                e2=e2,
                r1=r1,
                r2=r2,
                k2_true=witness.k2,
                k2_hat=None,
                residual_deg=None,
                error=f"{type(exc).__name__}: {exc}",
            )
        residual_deg = (result.a_hat - a).degree
        if result.k2_hat != witness.k2 or residual_deg > tau:
            return BoundaryInstance(
                trial=idx,
                seed=seed,
                level=level,
                tau=tau,
                a=a,
                e1=e1,
                e2=e2,
                r1=r1,
                r2=r2,
                k2_true=witness.k2,
                k2_hat=result.k2_hat,
                residual_deg=residual_deg,
            )
    return None
