"""Randomized exact verification of the golden-ratio regularization laws.

Each trial samples a pentagon with bounded rational coordinates in
general position and checks, in exact arithmetic with no tolerances:

  * one iteration step at the golden ratio lands on the Regular class
    (or, at its conjugate, on the StarRegular class),
  * the vertex inserted at the golden-ratio point of four points
    completes them to a Regular pentagon,
  * the golden-ratio step image and the conjugate-parameter step image
    of the star-order relabeling coincide as unlabeled vertex sets (the
    two parameters are conjugate modulo that relabeling, so the same
    five points arise from both).

Passing trials amount to polynomial-identity testing of the underlying
algebraic identities at random rational points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field

from .construction import insert_vertex_pentagon, polygon_step, polygon_valid
from .moduli import REGULAR, STAR_ORDER, STAR_REGULAR, classify, relabel
from .projective import DegenerateConfiguration, HPoint, same_point
from .scalars import EXACT, PHI, PSI, ProjParam, QSqrt5, rational

LAMBDA_CHOICES = ("phi", "psi")

#: resampling cap per trial; general position fails with probability
#: roughly 1/bound, so this is astronomically safe
_MAX_SAMPLE_ATTEMPTS = 500


def sample_pentagon(rng: random.Random, bound: int):
    """A random exact pentagon with affine coordinates num/den, num in
    [-bound, bound], 1 <= den <= bound, resampled until every cyclic
    4-window is in general position."""
    if bound < 1:
        raise ValueError("coordinate bound must be at least 1")
    for _ in range(_MAX_SAMPLE_ATTEMPTS):
        verts = []
        for _ in range(5):
            xn = rng.randint(-bound, bound)
            xd = rng.randint(1, bound)
            yn = rng.randint(-bound, bound)
            yd = rng.randint(1, bound)
            verts.append(
                HPoint(
                    QSqrt5(rational(xn, xd)),
                    QSqrt5(rational(yn, yd)),
                    EXACT.one,
                )
            )
        pentagon = tuple(verts)
        if polygon_valid(EXACT, pentagon):
            return pentagon
    raise RuntimeError("could not sample a pentagon in general position")


def same_vertex_sets(field, ps, qs) -> bool:
    """Equality of two polygons as unlabeled sets of projective points."""
    if len(ps) != len(qs):
        return False
    unused = list(range(len(qs)))
    for p in ps:
        for idx in unused:
            if same_point(field, p, qs[idx]):
                unused.remove(idx)
                break
        else:
            return False
    return True


@dataclass
class VerifyReport:
    lambda_name: str
    field_name: str
    trials: int
    passes: int = 0
    failures: list = dataclass_field(default_factory=list)  # (trial_seed, reason)
    main_passes: int = 0
    inserted_passes: int = 0
    coincidence_passes: int = 0


def _check_trial(pentagon, lambda_name: str):
    """The three per-trial checks; returns (main, inserted, coincidence, reason)."""
    step_phi = polygon_step(EXACT, pentagon, ProjParam(PHI))

    if lambda_name == "phi":
        main_image, expected = step_phi, REGULAR
    else:
        main_image = polygon_step(EXACT, pentagon, ProjParam(PSI))
        expected = STAR_REGULAR
    verdict = classify(EXACT, main_image)
    main_ok = verdict.kind == expected

    inserted = insert_vertex_pentagon(EXACT, *pentagon[:4])
    inserted_ok = classify(EXACT, inserted).kind == REGULAR

    # the conjugate parameter acts through the star-order labels, so its
    # step on the relabeled pentagon traces out the same five points
    step_psi_star = polygon_step(EXACT, relabel(pentagon, STAR_ORDER), ProjParam(PSI))
    coincide_ok = same_vertex_sets(EXACT, step_phi, step_psi_star)

    reasons = []
    if not main_ok:
        reasons.append(f"one-step image classified {verdict.kind}, expected {expected}")
    if not inserted_ok:
        reasons.append("inserted-vertex pentagon not Regular")
    if not coincide_ok:
        reasons.append("conjugate-parameter images differ as vertex sets")
    return (main_ok, inserted_ok, coincide_ok, "; ".join(reasons))


def run_verification(lambda_name: str, trials: int, seed: int, bound: int) -> VerifyReport:
    """Run the campaign.  Deterministic for a fixed (seed, trials, bound):
    trial t uses its own generator seeded from the master seed."""
    if lambda_name not in LAMBDA_CHOICES:
        raise ValueError(f"lambda must be one of {LAMBDA_CHOICES}")
    report = VerifyReport(lambda_name=lambda_name, field_name="exact", trials=trials)
    for t in range(trials):
        trial_seed = seed * 1_000_003 + t
        rng = random.Random(trial_seed)
        try:
            pentagon = sample_pentagon(rng, bound)
            main_ok, inserted_ok, coincide_ok, reason = _check_trial(pentagon, lambda_name)
        except (DegenerateConfiguration, RuntimeError) as exc:
            report.failures.append((trial_seed, f"degenerate trial: {exc}"))
            continue
        report.main_passes += main_ok
        report.inserted_passes += inserted_ok
        report.coincidence_passes += coincide_ok
        if main_ok and inserted_ok and coincide_ok:
            report.passes += 1
        else:
            report.failures.append((trial_seed, reason))
    return report


def format_report(report: VerifyReport):
    """Report lines: summary, per-check counters, then any failures."""
    lines = [
        f"lambda={report.lambda_name} field={report.field_name}"
        f" trials={report.trials} passes={report.passes}"
        f" failures={len(report.failures)}",
        f"checks main={report.main_passes}/{report.trials}"
        f" inserted={report.inserted_passes}/{report.trials}"
        f" coincidence={report.coincidence_passes}/{report.trials}",
    ]
    for trial_seed, reason in report.failures:
        lines.append(f"failure seed={trial_seed} reason={reason}")
    return lines
