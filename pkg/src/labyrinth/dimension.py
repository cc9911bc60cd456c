"""Dimension quotients, finite-level box-counting estimates, and schedules
whose limit fractal has a prescribed box-counting dimension.

Pattern index k >= 1 stands for the k-th snake cross (width 4k+7, exit path
4k^2+4k+7 squares); k = 0 stands for the width-3 plain cross, whose exit path
has 3 squares. A schedule term ``(k, p, q)`` is the pattern obtained by
applying pattern k p times and then pattern k+1 q times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import mpmath

from labyrinth.errors import BadParameter, PreconditionViolated
from labyrinth.generators import plain_cross, snake_cross
from labyrinth.grid import Pattern, compose_sequence
from labyrinth.paths import snake_path_count


def pattern_width(k: int) -> int:
    if k < 0:
        raise BadParameter(f"pattern index must be >= 0, got {k}")
    return 3 if k == 0 else 4 * k + 7


def pattern_path_count(k: int) -> int:
    if k < 0:
        raise BadParameter(f"pattern index must be >= 0, got {k}")
    return 3 if k == 0 else snake_path_count(k)


def pattern_for(k: int) -> Pattern:
    return plain_cross(1) if k == 0 else snake_cross(k)


def dim_quotient(k: int) -> float:
    """log(exit path count) / log(width) of pattern k; exactly 1 for k = 0."""
    if k < 0:
        raise BadParameter(f"k must be >= 0, got {k}")
    if k == 0:
        return 1.0
    return math.log(snake_path_count(k)) / math.log(pattern_width(k))


def level_estimate(widths: Sequence[int], counts: Sequence[int]) -> float:
    """log(prod counts) / log(prod widths), summed in log space."""
    if len(widths) != len(counts):
        raise BadParameter(f"{len(widths)} widths but {len(counts)} counts")
    if not widths:
        raise BadParameter("need at least one level")
    if any(w < 3 for w in widths):
        raise BadParameter("widths must be >= 3")
    if any(c < 1 for c in counts):
        raise BadParameter("counts must be >= 1")
    return math.fsum(map(math.log, counts)) / math.fsum(map(math.log, widths))


def snake_estimates(n: int) -> list[float]:
    """Level estimates of the pure snake sequence A_1..A_j for j = 1..n."""
    num = den = 0.0
    out = []
    for k in range(1, n + 1):
        num += math.log(snake_path_count(k))
        den += math.log(pattern_width(k))
        out.append(num / den)
    return out


def snake_level_count(n: int) -> int:
    """D(L_n): exit path length of the level-n snake set, exactly."""
    return math.prod(snake_path_count(k) for k in range(1, n + 1))


def snake_level_width(n: int) -> int:
    return math.prod(pattern_width(k) for k in range(1, n + 1))


def snake_log_length_proxy(n: int) -> list[float]:
    """log(D(L_j) / m(j)) for j = 1..n, the log of the Euclidean path length."""
    acc = 0.0
    out = []
    for k in range(1, n + 1):
        acc += math.log(snake_path_count(k)) - math.log(pattern_width(k))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# exact arithmetic helpers


def _exact(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        man, exp = x.man_exp
        return Fraction(int(man)) * Fraction(2) ** int(exp)
    return Fraction(float(x))


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _log_exact(n: int, dps: int) -> Fraction:
    with mpmath.workdps(dps):
        return _exact(mpmath.log(n))


def _dps_for(k: int) -> int:
    # increments of d_k shrink like 1/(k log^2 k); keep enough digits to order them
    return 40 + 2 * len(str(k))


def _pattern_logs(k: int, dps: int) -> tuple[Fraction, Fraction]:
    if k == 0:
        third = _log_exact(3, dps)
        return third, third
    return _log_exact(snake_path_count(k), dps), _log_exact(pattern_width(k), dps)


def _quotient_exact(k: int, dps: int) -> Fraction:
    if k == 0:
        return Fraction(1)
    a, b = _pattern_logs(k, dps)
    return a / b


# ---------------------------------------------------------------------------
# interpolating between two patterns with integer repeat counts


def lemma3_schedule(a, b, c, d, alpha, n_terms: int, side: str = "below") -> list[tuple[int, int]]:
    """Positive integer pairs (p_j, q_j) with (p_j a + q_j c)/(p_j b + q_j d) -> alpha.

    Let t = (c - alpha d)/(alpha b - a), the ratio p/q that hits alpha exactly.
    The ratio r(p/q) is decreasing in p/q whenever a/b < c/d, so the side from
    which p_j/q_j approaches t fixes the side from which r_j approaches alpha:

    ``"below"``: q_j = 2^(j+j0), p_j = floor(t q_j), with j0 the smallest
    offset giving p_1 >= 1. p_j/q_j is nondecreasing; r_j is nonincreasing.

    ``"above"``: q_j = 2^j, p_j = ceil(t q_j). p_j/q_j is nonincreasing; r_j is
    nondecreasing.

    Either way |r_j - alpha| is nonincreasing. Arithmetic is exact on the
    given inputs.
    """
    a, b, c, d, alpha = (_exact(x) for x in (a, b, c, d, alpha))
    if min(a, b, c, d) <= 0:
        raise PreconditionViolated("a, b, c, d must be positive")
    if not (a / b < alpha < c / d):
        raise PreconditionViolated(f"need a/b < alpha < c/d, got {float(a / b)!r} < {float(alpha)!r} < {float(c / d)!r}")
    if n_terms < 0:
        raise BadParameter("n_terms must be >= 0")
    if side not in ("below", "above"):
        raise BadParameter(f"side must be 'below' or 'above', got {side!r}")
    t = (c - alpha * d) / (alpha * b - a)
    if side == "above":
        return [(_ceil(t * 2**j), 2**j) for j in range(1, n_terms + 1)]
    j0 = 0
    while t * 2 ** (1 + j0) < 1:
        j0 += 1
    return [(math.floor(t * 2 ** (j + j0)), 2 ** (j + j0)) for j in range(1, n_terms + 1)]


def lemma3_ratio(p: int, q: int, a, b, c, d) -> Fraction:
    a, b, c, d = (_exact(x) for x in (a, b, c, d))
    return (p * a + q * c) / (p * b + q * d)


# ---------------------------------------------------------------------------
# schedules


class ScheduleTerm(NamedTuple):
    k: int
    p: int
    q: int


@dataclass
class Schedule:
    delta: float
    kind: str  # "plain", "snake", "self-similar" or "mixed"
    k: int | None
    terms: list[ScheduleTerm]
    trace: list[float]
    estimates: list[float]
    tol: float
    converged: bool
    terms_to_tol: int | None
    diagnostics: list[str] = field(default_factory=list)

    def to_text(self) -> str:
        return write_schedule(self.terms)

    def trace_table(self) -> str:
        lines = ["term r_j estimate"]
        for j, (r, e) in enumerate(zip(self.trace, self.estimates), start=1):
            lines.append(f"{j} {r:.12g} {e:.12g}")
        return "\n".join(lines) + "\n"


def write_schedule(terms: Iterable[tuple[int, int, int]]) -> str:
    return "".join(f"{k} {p} {q}\n" for k, p, q in terms)


def read_schedule(text: str) -> list[ScheduleTerm]:
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise BadParameter(f"line {lineno}: expected 'k p q', got {line!r}")
        try:
            k, p, q = (int(x) for x in parts)
        except ValueError:
            raise BadParameter(f"line {lineno}: non-integer field in {line!r}") from None
        if k < 0 or p < 0 or q < 0 or p + q == 0:
            raise BadParameter(f"line {lineno}: need k >= 0, p, q >= 0 and p + q >= 1")
        terms.append(ScheduleTerm(k, p, q))
    if not terms:
        raise BadParameter("empty schedule")
    return terms


def term_logs(term: tuple[int, int, int]) -> tuple[float, float]:
    """(log path count, log width) of the pattern a schedule term stands for."""
    k, p, q = term
    num = den = 0.0
    if p:
        num += p * math.log(pattern_path_count(k))
        den += p * math.log(pattern_width(k))
    if q:
        num += q * math.log(pattern_path_count(k + 1))
        den += q * math.log(pattern_width(k + 1))
    return num, den


def schedule_estimates(terms: Sequence[tuple[int, int, int]]) -> list[float]:
    """Level estimate after each term of the schedule."""
    num = []
    den = []
    out = []
    for term in terms:
        a, b = term_logs(term)
        num.append(a)
        den.append(b)
        out.append(math.fsum(num) / math.fsum(den))
    return out


def _same_float(exact: Fraction, x: float) -> bool:
    return abs(float(exact) - x) <= 4 * math.ulp(x)


def _bracket(delta: Fraction) -> tuple[int, int]:
    """Largest k >= 0 with d_k <= delta, and the working precision used to find it."""
    lo = 0
    hi = 1
    while _quotient_exact(hi, _dps_for(hi)) <= delta:
        lo = hi
        hi *= 2
    dps = _dps_for(hi)
    if lo and _quotient_exact(lo, dps) > delta:
        lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _quotient_exact(mid, dps) <= delta:
            lo = mid
        else:
            hi = mid
    return lo, dps


def target_dimension(delta: float, tol: float = 1e-3, max_terms: int = 64) -> Schedule:
    """Schedule of patterns whose limit fractal has box-counting dimension `delta`."""
    if not (1.0 <= delta <= 2.0) or math.isnan(delta):
        raise BadParameter(f"delta must lie in [1, 2], got {delta}")
    if max_terms < 1:
        raise BadParameter("max_terms must be >= 1")
    diagnostics: list[str] = []
    if delta == 1.0:
        kind, k = "plain", 0
        terms = [ScheduleTerm(0, 1, 0)] * max_terms
        trace = [1.0] * max_terms
    elif delta == 2.0:
        kind, k = "snake", None
        terms = [ScheduleTerm(j, 1, 0) for j in range(1, max_terms + 1)]
        trace = [dim_quotient(j) for j in range(1, max_terms + 1)]
    else:
        exact_delta = _exact(delta)
        k, dps = _bracket(exact_delta)
        lower = _quotient_exact(k, dps)
        upper = _quotient_exact(k + 1, dps)
        # a float delta can only ever equal d_k up to rounding
        hit = k if _same_float(lower, delta) else k + 1 if _same_float(upper, delta) else None
        if hit is not None:
            kind, k = "self-similar", hit
            terms = [ScheduleTerm(k, 1, 0)] * max_terms
            trace = [float(_quotient_exact(k, dps))] * max_terms
        else:
            kind = "mixed"
            a, b = _pattern_logs(k, dps)
            c, d = _pattern_logs(k + 1, dps)
            pairs = lemma3_schedule(a, b, c, d, exact_delta, max_terms, side="above")
            terms = [ScheduleTerm(k, p, q) for p, q in pairs]
            trace = [float(lemma3_ratio(p, q, a, b, c, d)) for p, q in pairs]
            diagnostics.append(
                f"bracket d_{k}={float(lower):.12g} < delta < d_{k + 1}={float(upper):.12g}; "
                f"q_j = 2^j, p_j = ceil(t q_j) with t = {float((c - exact_delta * d) / (exact_delta * b - a)):.12g}, "
                "so p_j/q_j falls to t and r_j rises to delta"
            )
    estimates = schedule_estimates(terms)
    within = [j for j, e in enumerate(estimates, start=1) if abs(e - delta) <= tol]
    converged = abs(estimates[-1] - delta) <= tol
    if not converged:
        diagnostics.append(
            f"tolerance {tol:g} not reached within {max_terms} terms: estimate {estimates[-1]:.12g}"
        )
    return Schedule(
        delta=delta,
        kind=kind,
        k=k,
        terms=terms,
        trace=trace,
        estimates=estimates,
        tol=tol,
        converged=converged,
        terms_to_tol=within[0] if within else None,
        diagnostics=diagnostics,
    )


def star_pattern(k: int, p: int, q: int) -> Pattern:
    """Pattern k applied p times followed by pattern k+1 applied q times."""
    if k < 0 or p < 0 or q < 0 or p + q == 0:
        raise BadParameter("need k >= 0, p, q >= 0 and p + q >= 1")
    seq = [pattern_for(k)] * p + [pattern_for(k + 1)] * q
    return compose_sequence(seq).pattern


def star_path_count(k: int, p: int, q: int) -> int:
    return pattern_path_count(k) ** p * pattern_path_count(k + 1) ** q
