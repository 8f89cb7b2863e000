"""Lower bounds for |P(theta)| over integer polynomials of bounded size.

The headline object is a symbolic bound base^(-E) with base = H*d*(d+1)
and E = k*d*(alpha+1)/(alpha-d), valid for every nonzero integer
polynomial of degree at most d and height at most H once the sequence
satisfies the two-sided growth sandwich. The bound is never evaluated in
floating point; comparisons against rationals clear denominators and the
fractional exponent E = p/s in one integer inequality.

verify_measure confronts the bound with reality: it traps theta in a
rational interval, pushes the interval through the polynomial with exact
interval Horner evaluation, and compares the resulting certified lower
bound for |P(theta)| against base^(-E). A failed comparison only ever
means the interval is still too wide, so the procedure refines and, if
the refinement allowance runs out, reports Inconclusive rather than
asserting a counterexample.

brute_force_min is the independent check: it enumerates every candidate
polynomial and brackets |P(theta)| for each, so tests can confirm that
no polynomial in the class beats the bound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .convergents import convergent_range, partial_sum
from .enclosure import Enclosure, enclose, refine, tail_bound
from .errors import (
    EnumerationTooLargeError,
    InconclusiveError,
    InvalidParameterError,
    NotFoundBelowNMaxError,
    SpecMismatchError,
)
from .sequences import (
    DEFAULT_DIGIT_BUDGET,
    Ordering,
    SequenceSpec,
    _as_positive_fraction,
    check_sandwich,
    checked_pow,
    compare_power,
    term,
)
from .serialize import spec_fingerprint


@dataclass(frozen=True)
class PolynomialInt:
    """Integer polynomial stored as coefficients e_0..e_d, constant first.

    Trailing zero coefficients are trimmed on construction, so the last
    stored coefficient is the leading one and ``degree`` is exact. The
    zero polynomial is rejected: nothing here is defined for it.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        trimmed = tuple(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        if not trimmed:
            raise InvalidParameterError("polynomial must be nonzero")
        if any(not isinstance(c, int) for c in trimmed):
            raise InvalidParameterError("coefficients must be integers")
        object.__setattr__(self, "coeffs", trimmed)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def height(self) -> int:
        return max(abs(c) for c in self.coeffs)

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def evaluate_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Exact interval Horner: bounds for {P(t) : lo <= t <= hi}."""
        if lo > hi:
            raise InvalidParameterError("interval endpoints out of order")
        acc_lo = acc_hi = Fraction(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            products = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
            acc_lo = min(products) + c
            acc_hi = max(products) + c
        return acc_lo, acc_hi

    def __str__(self) -> str:
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                parts.append(str(c))
            elif power == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{power}")
        return " + ".join(parts)


@dataclass(frozen=True)
class MeasureBound:
    """The symbolic bound base^(-exponent), never evaluated as a float."""

    degree: int
    height: int
    alpha: Fraction
    k: Fraction
    base: int
    exponent: Fraction

    @property
    def log10_value(self) -> float:
        """Advisory float of log10 of the bound, for display only."""
        return -float(self.exponent) * math.log10(self.base)

    def is_exceeded_by(
        self, value: Fraction, digit_budget: int = DEFAULT_DIGIT_BUDGET
    ) -> bool:
        """Exact check value > base^(-exponent)."""
        if value <= 0:
            return False
        p, s = self.exponent.numerator, self.exponent.denominator
        u, v = value.numerator, value.denominator
        lhs = checked_pow(u, s, digit_budget) * checked_pow(self.base, p, digit_budget)
        return lhs > checked_pow(v, s, digit_budget)

    def greater_than(
        self, value: Fraction, digit_budget: int = DEFAULT_DIGIT_BUDGET
    ) -> bool:
        """Exact check base^(-exponent) > value."""
        if value <= 0:
            return True
        p, s = self.exponent.numerator, self.exponent.denominator
        u, v = value.numerator, value.denominator
        rhs = checked_pow(u, s, digit_budget) * checked_pow(self.base, p, digit_budget)
        return checked_pow(v, s, digit_budget) > rhs


@dataclass(frozen=True)
class N1Result:
    """Smallest index whose denominator clears the height threshold."""

    n1: int
    q_at_n1: int
    threshold_value: int


@dataclass(frozen=True)
class MeasureEvidence:
    polynomial: PolynomialInt
    bound: MeasureBound
    enclosure_used: Enclosure
    abs_lower: Fraction
    verified: bool
    refinements: int


@dataclass(frozen=True)
class BruteForceResult:
    argmin: PolynomialInt
    min_lower: Fraction
    min_upper: Fraction
    count: int


def bound(
    d: int,
    H: int,
    alpha: Union[Fraction, int, str],
    k: Union[Fraction, int, str],
) -> MeasureBound:
    """Symbolic measure bound (H*d*(d+1))^(-k*d*(alpha+1)/(alpha-d))."""
    alpha = _as_positive_fraction(alpha, "alpha")
    k = _as_positive_fraction(k, "k")
    if d < 2:
        raise InvalidParameterError(f"degree must be at least 2, got {d}")
    if H < 1:
        raise InvalidParameterError(f"height must be at least 1, got {H}")
    if alpha <= d:
        raise InvalidParameterError(
            f"exponent alpha={alpha} must exceed the degree {d}"
        )
    if k <= 1:
        raise InvalidParameterError(f"k must be > 1, got {k}")
    return MeasureBound(
        degree=d,
        height=H,
        alpha=alpha,
        k=k,
        base=H * d * (d + 1),
        exponent=k * d * (alpha + 1) / (alpha - d),
    )


def qn_exponent_bound_holds(
    spec: SequenceSpec,
    alpha: Union[Fraction, int, str],
    n: int,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> bool:
    """Exact check q_n <= a_n^((alpha+1)/alpha).

    With alpha = p/s the comparison clears to q_n^p <= a_n^(p+s).
    """
    alpha = _as_positive_fraction(alpha, "alpha")
    if n < 1:
        raise InvalidParameterError(f"index must be >= 1, got {n}")
    q = partial_sum(spec, n, digit_budget).q
    a = term(spec, n, digit_budget)
    p, s = alpha.numerator, alpha.denominator
    return checked_pow(q, p, digit_budget) <= checked_pow(a, p + s, digit_budget)


def q_growth_holds(
    spec: SequenceSpec,
    alpha: Union[Fraction, int, str],
    k: Union[Fraction, int, str],
    n: int,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> bool:
    """Exact check q_{n+1} < q_n^(k*(alpha+1))."""
    alpha = _as_positive_fraction(alpha, "alpha")
    k = _as_positive_fraction(k, "k")
    if k <= 1:
        raise InvalidParameterError(f"k must be > 1, got {k}")
    if n < 1:
        raise InvalidParameterError(f"index must be >= 1, got {n}")
    q_n = q_next = None
    for conv in convergent_range(spec, n + 1, digit_budget):
        q_n, q_next = q_next, conv.q
    exponent = k * (alpha + 1)
    return compare_power(q_next, q_n, exponent, digit_budget) is Ordering.LESS


def find_n1(
    spec: SequenceSpec,
    alpha: Union[Fraction, int, str],
    d: int,
    H: int,
    n_max: int,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> N1Result:
    """Smallest n <= n_max with q_n^(alpha-d) strictly above H*d*(d+1).

    Equality does not qualify; the inequality the downstream argument
    needs is strict.
    """
    alpha = _as_positive_fraction(alpha, "alpha")
    if d < 1:
        raise InvalidParameterError(f"degree must be at least 1, got {d}")
    if H < 1:
        raise InvalidParameterError(f"height must be at least 1, got {H}")
    if n_max < 1:
        raise InvalidParameterError(f"search cutoff must be >= 1, got {n_max}")
    if alpha <= d:
        raise InvalidParameterError(
            f"exponent alpha={alpha} must exceed the degree {d}"
        )
    threshold = H * d * (d + 1)
    diff = alpha - d
    p, s = diff.numerator, diff.denominator
    threshold_pow = checked_pow(threshold, s, digit_budget)
    for conv in convergent_range(spec, n_max, digit_budget):
        if checked_pow(conv.q, p, digit_budget) > threshold_pow:
            return N1Result(n1=conv.m, q_at_n1=conv.q, threshold_value=threshold)
    raise NotFoundBelowNMaxError(
        f"no index up to {n_max} clears the threshold {threshold}"
    )


def abs_bracket(P: PolynomialInt, enc: Enclosure) -> tuple[Fraction, Fraction]:
    """Certified bracket [low, high] for |P(theta)| given theta in enc."""
    lo_v, hi_v = P.evaluate_interval(enc.lo, enc.hi)
    if lo_v <= 0 <= hi_v:
        return Fraction(0), max(-lo_v, hi_v)
    return min(abs(lo_v), abs(hi_v)), max(abs(lo_v), abs(hi_v))


def abs_lower_bound(P: PolynomialInt, enc: Enclosure) -> Fraction:
    """Certified lower bound for |P(theta)|; 0 means inconclusive."""
    return abs_bracket(P, enc)[0]


def _require_sandwich(
    spec: SequenceSpec,
    alpha: Fraction,
    k: Fraction,
    last: int,
    digit_budget: int,
) -> None:
    report = check_sandwich(spec, alpha, k, 1, last, digit_budget)
    failures = report.failures()
    if failures:
        raise InvalidParameterError(
            f"sandwich hypothesis violated at n={failures[0]}"
        )


def verify_measure(
    spec: SequenceSpec,
    alpha: Union[Fraction, int, str],
    k: Union[Fraction, int, str],
    P: PolynomialInt,
    max_refinements: int = 8,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
    degree: Optional[int] = None,
    height: Optional[int] = None,
) -> MeasureEvidence:
    """Check |P(theta)| against the measure bound by interval refinement.

    degree and height declare the polynomial class the bound is taken
    over; they default to the polynomial's own size (degree never below
    2, since the bound needs that). Declaring a larger class is sound
    and sometimes wanted: a linear polynomial is also a member of the
    degree-2 class. Declaring a smaller class than the polynomial
    actually occupies is an error.

    The outcome is either verified evidence or an exception; a sound
    refinement procedure cannot conclude that the bound fails.
    """
    alpha = _as_positive_fraction(alpha, "alpha")
    k = _as_positive_fraction(k, "k")
    if max_refinements < 0:
        raise InvalidParameterError("refinement allowance must be >= 0")
    d = degree if degree is not None else max(2, P.degree)
    if d < P.degree:
        raise InvalidParameterError(
            f"declared degree {d} is smaller than actual degree {P.degree}"
        )
    H = height if height is not None else P.height
    if H < P.height:
        raise InvalidParameterError(
            f"declared height {H} is smaller than actual height {P.height}"
        )
    target = bound(d, H, alpha, k)

    m0 = 1
    while not target.greater_than(4 * tail_bound(spec, m0, digit_budget), digit_budget):
        m0 += 1
    _require_sandwich(spec, alpha, k, m0 + 1, digit_budget)

    enc = enclose(spec, m0, digit_budget)
    refinements = 0
    while True:
        low = abs_lower_bound(P, enc)
        if target.is_exceeded_by(low, digit_budget):
            return MeasureEvidence(
                polynomial=P,
                bound=target,
                enclosure_used=enc,
                abs_lower=low,
                verified=True,
                refinements=refinements,
            )
        if refinements >= max_refinements:
            raise InconclusiveError(
                f"comparison still undecided after {refinements} refinements"
            )
        enc = refine(spec, enc, digit_budget)
        refinements += 1
        _require_sandwich(spec, alpha, k, enc.terms_used + 1, digit_budget)


def enumerate_brackets(
    spec: SequenceSpec,
    d: int,
    H: int,
    enc: Enclosure,
    enumeration_cap: int = 10**6,
) -> Iterator[tuple[tuple[int, ...], Fraction, Fraction]]:
    """Yield (coefficient vector, |P| lower, |P| upper) for every nonzero
    polynomial with degree <= d and height <= H, in ascending
    lexicographic order of the vector (constant coefficient first)."""
    if d < 1:
        raise InvalidParameterError(f"degree must be at least 1, got {d}")
    if H < 1:
        raise InvalidParameterError(f"height must be at least 1, got {H}")
    if spec_fingerprint(spec) != enc.fingerprint:
        raise SpecMismatchError("enclosure was built from a different sequence")
    size = (2 * H + 1) ** (d + 1) - 1
    if size > enumeration_cap:
        raise EnumerationTooLargeError(
            f"enumeration of {size} polynomials exceeds the cap {enumeration_cap}"
        )
    for vec in itertools.product(range(-H, H + 1), repeat=d + 1):
        if all(c == 0 for c in vec):
            continue
        low, high = abs_bracket(PolynomialInt(vec), enc)
        yield vec, low, high


def brute_force_min(
    spec: SequenceSpec,
    d: int,
    H: int,
    enc: Enclosure,
    enumeration_cap: int = 10**6,
) -> BruteForceResult:
    """Exhaustive minimum of the |P(theta)| upper brackets.

    Ties go to the lexicographically smallest coefficient vector, which
    the ascending enumeration provides for free: the first minimum seen
    wins.
    """
    best: Optional[tuple[tuple[int, ...], Fraction, Fraction]] = None
    count = 0
    for vec, low, high in enumerate_brackets(spec, d, H, enc, enumeration_cap):
        count += 1
        if best is None or high < best[2]:
            best = (vec, low, high)
    return BruteForceResult(
        argmin=PolynomialInt(best[0]),
        min_lower=best[1],
        min_upper=best[2],
        count=count,
    )
