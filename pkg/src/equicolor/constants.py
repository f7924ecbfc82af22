"""Degree thresholds under a density hypothesis n >= zeta * delta.

Two quadratics in the class count k control whether the mixed-class step can
always absorb the normalized residue M:

    tq_margin(zeta, k) = zeta*(2k-3)*(k-8)  - (5k^2  - 4k)
    tl_margin(zeta, k) = zeta*(2k-3)*(k-36) - (41k^2 - 36k)

Once both are nonnegative, t = floor(k/4) satisfies t*q >= M and t*L >= M for
every graph meeting the hypothesis, so theorem mode cannot fail. K0 is the
least k from which both margins stay nonnegative forever; the guarantee uses
K = max(K0, 37) and kicks in at maximum degree c = 2K. All arithmetic is
exact (fractions.Fraction), no floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZetaTooSmallError

THRESHOLD = Fraction(41, 2)


def tq_margin(zeta: Fraction, k: int) -> Fraction:
    """Margin of the pure-capacity chain t*q >= M at class count k."""
    z = Fraction(zeta)
    return z * (2 * k - 3) * (k - 8) - (5 * k * k - 4 * k)


def tl_margin(zeta: Fraction, k: int) -> Fraction:
    """Margin of the blocked-capacity chain t*L >= M at class count k."""
    z = Fraction(zeta)
    return z * (2 * k - 3) * (k - 36) - (41 * k * k - 36 * k)


@dataclass(frozen=True)
class ConstantsResult:
    """Thresholds for one density ratio: K0, K = max(K0, 37), c = 2K."""

    zeta: Fraction
    k0: int
    k: int
    c: int


def _last_negative(coeff_a: Fraction, coeff_b: Fraction, coeff_c: Fraction) -> int:
    """Largest integer k >= 1 with a*k^2 + b*k + c < 0, or 0 if none.

    Requires a > 0, so the negative region is one bounded interval; found by
    doubling out from the vertex, then bisecting. Exact arithmetic only.
    """
    assert coeff_a > 0

    def g(k: int) -> Fraction:
        return coeff_a * k * k + coeff_b * k + coeff_c

    vertex = -coeff_b / (2 * coeff_a)
    base = max(1, int(vertex))
    if g(base) >= 0 and g(base + 1) >= 0:
        return 0
    seed = base if g(base) < 0 else base + 1
    step = 1
    while g(seed + step) < 0:
        seed += step
        step *= 2
    lo, hi = seed, seed + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo


def compute_constants(zeta: Fraction | int | str) -> ConstantsResult:
    """Exact thresholds (K0, K, c) for density ratio zeta > 41/2."""
    z = zeta if isinstance(zeta, Fraction) else parse_rational(str(zeta))
    if z <= THRESHOLD:
        raise ZetaTooSmallError(f"zeta must exceed 41/2, got {z}")
    # tq_margin = (2z-5) k^2 + (4-19z) k + 24z ; tl_margin = (2z-41) k^2 + (36-75z) k + 108z
    last1 = _last_negative(2 * z - 5, 4 - 19 * z, 24 * z)
    last2 = _last_negative(2 * z - 41, 36 - 75 * z, 108 * z)
    k0 = max(last1, last2) + 1
    assert tq_margin(z, k0) >= 0 and tl_margin(z, k0) >= 0
    assert k0 == 1 or tq_margin(z, k0 - 1) < 0 or tl_margin(z, k0 - 1) < 0
    k = max(k0, 37)
    return ConstantsResult(zeta=z, k0=k0, k=k, c=2 * k)


def hypotheses_hold(n: int, delta: int, zeta: Fraction | int | str) -> bool:
    """True when the pair (n, delta) meets the guarantee hypothesis:
    delta >= c(zeta) and n >= zeta * delta (exact comparison)."""
    res = compute_constants(zeta)
    return delta >= res.c and Fraction(n) >= res.zeta * delta


_EXPR = re.compile(r"[+-]?[0-9./]+([+-][0-9./]+)*$")
_TERM = re.compile(r"[+-]?[^+-]+")


def parse_rational(text: str) -> Fraction:
    """Exact rational from a string: integers, N/D, decimals, and sums
    thereof, e.g. '21', '41/2', '20.6', '41/2+1/10'."""
    s = "".join(text.split())
    if not s or not _EXPR.match(s):
        raise ValueError(f"not a rational expression: {text!r}")
    total = Fraction(0)
    for term in _TERM.findall(s):
        try:
            total += Fraction(term)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational term {term!r} in {text!r}") from exc
    return total
