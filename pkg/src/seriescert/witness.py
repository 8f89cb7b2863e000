"""Witnesses for the rational-approximation inequality and certificates.

A witness at index m is the reduced partial sum p/q together with an
exact proof that the series value lies within q^(-alpha) of it. Since
all terms are positive, theta - p/q sits in (0, tailBound], so the
single exact comparison tailBound < q^(-alpha) settles the inequality.
With alpha = a/s and tailBound = u/v that comparison clears to integers
as u^s * q^a < v^s.

A certificate bundles verified witnesses for a contiguous index window,
for an exponent above 2, over a sequence whose growth hypothesis has
been checked on that window. It records its own finiteness caveat: no
finite computation can confirm the infinite family of witnesses the
transcendence criterion ultimately needs.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .convergents import Convergent, convergent_range, partial_sum
from .enclosure import tail_bound
from .errors import (
    AlphaTooSmallError,
    ExactnessError,
    HypothesisFailedError,
    WitnessFailedError,
)
from .sequences import (
    DEFAULT_DIGIT_BUDGET,
    SequenceSpec,
    _as_positive_fraction,
    _window,
    check_growth,
    checked_pow,
)

CONCLUSION = "roth-criterion-satisfied-on-window"

CAVEAT = (
    "verified for the listed indices only; a finite computation cannot "
    "establish the infinite family of approximations the criterion requires"
)


@dataclass(frozen=True)
class Witness:
    convergent: Convergent
    alpha: Fraction
    tail_bound: Fraction
    verified: bool


@dataclass(frozen=True)
class Certificate:
    spec: SequenceSpec
    alpha: Fraction
    start_offset: int
    rational_prefix: Fraction
    witnesses: tuple[Witness, ...]
    conclusion: str = CONCLUSION
    caveat: str = CAVEAT


def _approximation_verified(
    q: int, alpha: Fraction, bound: Fraction, digit_budget: int
) -> bool:
    a, s = alpha.numerator, alpha.denominator
    u, v = bound.numerator, bound.denominator
    lhs = checked_pow(u, s, digit_budget) * checked_pow(q, a, digit_budget)
    return lhs < checked_pow(v, s, digit_budget)


def witness(
    spec: SequenceSpec,
    alpha: Union[Fraction, int, str],
    m: int,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> Witness:
    """Check the approximation inequality at index m.

    A failed comparison is a result (verified=False), not an error; the
    inequality is meaningful for any positive exponent.
    """
    alpha = _as_positive_fraction(alpha, "alpha")
    conv = partial_sum(spec, m, digit_budget)
    bound = tail_bound(spec, m, digit_budget)
    ok = _approximation_verified(conv.q, alpha, bound, digit_budget)
    return Witness(convergent=conv, alpha=alpha, tail_bound=bound, verified=ok)


def rational_prefix(
    spec: SequenceSpec, digit_budget: int = DEFAULT_DIGIT_BUDGET
) -> Fraction:
    """Exact sum of the unit fractions skipped by the start offset."""
    skipped = spec.start_offset - 1
    if skipped == 0:
        return Fraction(0)
    unshifted = dataclasses.replace(spec, start_offset=1)
    return partial_sum(unshifted, skipped, digit_budget).value


def certify(
    spec: SequenceSpec,
    alpha: Union[Fraction, int, str],
    first: int,
    last: int,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> Certificate:
    """Certificate with one verified witness per index in first..last.

    Raises AlphaTooSmall when the exponent is at most 2, HypothesisFailed
    when the growth check fails anywhere on the window, WitnessFailed
    when some index does not verify.
    """
    alpha = _as_positive_fraction(alpha, "alpha")
    first, last = _window(first, last)
    if alpha <= 2:
        raise AlphaTooSmallError(
            f"exponent must exceed 2 for the criterion to apply, got {alpha}"
        )
    growth = check_growth(spec, alpha, first, last, digit_budget)
    for failed_at in growth.failures():
        raise HypothesisFailedError(
            f"growth hypothesis fails at n={failed_at}", index=failed_at
        )
    witnesses = []
    prev_q = 0
    for conv in convergent_range(spec, last, digit_budget):
        if conv.m < first:
            continue
        bound = tail_bound(spec, conv.m, digit_budget)
        ok = _approximation_verified(conv.q, alpha, bound, digit_budget)
        if not ok:
            raise WitnessFailedError(
                f"approximation inequality fails at m={conv.m}", m=conv.m
            )
        if conv.q <= prev_q:
            raise ExactnessError(f"denominators failed to increase at m={conv.m}")
        prev_q = conv.q
        witnesses.append(Witness(convergent=conv, alpha=alpha, tail_bound=bound, verified=True))
    return Certificate(
        spec=spec,
        alpha=alpha,
        start_offset=spec.start_offset,
        rational_prefix=rational_prefix(spec, digit_budget),
        witnesses=tuple(witnesses),
    )
