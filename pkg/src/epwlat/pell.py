"""Exact solver for the negative Pell equation y^2 - D x^2 = -1.

Solvability for non-square D >= 2 is decided by the parity of the period
of the continued fraction of sqrt(D): the equation has a solution iff the
period length is odd, in which case the convergent at the end of the
first period is the fundamental (minimal) solution. All further solutions
are the odd powers of the fundamental unit y0 + x0*sqrt(D) in Z[sqrt(D)],
computed by exact integer multiplication.

For prime D the classical criterion applies: y^2 - p x^2 = -1 is solvable
iff p = 2 or p = 1 (mod 4). ``prime_criterion`` implements it and the
test suite pins its agreement with the continued-fraction decision.

A closed form for the D = 5 solutions that circulates in print,

    2 y_n = (1 + 2√5)(2 + √5)^{2n} + (1 - 2√5)(2 - √5)^{2n}
    2 x_n = (2 + 1/√5)(2 + √5)^{2n} + (2 - 1/√5)(2 - √5)^{2n},

is misprinted: evaluated exactly it yields (y_1, x_1) = (49, 22), whose
Pell residual 49^2 - 5*22^2 = -19 is not -1 (the true second solution is
(38, 17)). ``d5_closed_form_misprint`` evaluates the printed expression
exactly over Q(sqrt(5)) so the verifier can document the discrepancy; the
enumeration here deliberately uses odd unit powers instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


@dataclass(frozen=True)
class PellSolution:
    """A positive solution of y^2 - d x^2 = -1, validated exactly."""

    d: int
    y: int
    x: int

    def __post_init__(self):
        if self.y <= 0 or self.x <= 0:
            raise ValueError("Pell solutions are stored with positive y, x")
        if self.y * self.y - self.d * self.x * self.x != -1:
            raise ValueError(
                f"({self.y}, {self.x}) does not solve y^2 - {self.d} x^2 = -1"
            )


@dataclass(frozen=True)
class ContinuedFraction:
    """The periodic continued fraction of sqrt(d): [a0; period repeated]."""

    d: int
    a0: int
    period: tuple[int, ...]

    def __post_init__(self):
        # classical shape: the period is a palindrome followed by 2*a0
        if not self.period or self.period[-1] != 2 * self.a0:
            raise ValueError("period must end with 2*a0")
        body = self.period[:-1]
        if tuple(body) != tuple(reversed(body)):
            raise ValueError("period body must be a palindrome")

    @property
    def period_length(self) -> int:
        return len(self.period)


def _require_nonsquare(d: int) -> int:
    if d < 2:
        raise ValueError("D must be an integer >= 2")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise ValueError(f"D = {d} is a perfect square")
    return a0


def cf_expansion(d: int) -> ContinuedFraction:
    """Continued fraction of sqrt(d) for non-square d >= 2.

    Integer recurrence on triples (m, q, a):
        m' = a*q - m,  q' = (d - m'^2)/q,  a' = floor((a0 + m')/q'),
    starting from (0, 1, a0); the expansion is periodic from the first
    step on, so we stop when the first post-initial state recurs.
    """
    a0 = _require_nonsquare(d)
    m, q, a = 0, 1, a0
    period = []
    first_state = None
    while True:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        if first_state is None:
            first_state = (m, q)
        elif (m, q) == first_state:
            break
        period.append(a)
    return ContinuedFraction(d, a0, tuple(period))


def fundamental_negative(d: int) -> PellSolution | None:
    """Minimal positive solution of y^2 - d x^2 = -1, or None.

    Exists iff the continued-fraction period of sqrt(d) has odd length;
    then the convergent p/q just before the end of the first period gives
    (y, x) = (p, q) with p^2 - d q^2 = (-1)^(period length) = -1.
    """
    cf = cf_expansion(d)
    if cf.period_length % 2 == 0:
        return None
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    for a in cf.period[: cf.period_length - 1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return PellSolution(d, p, q)


def enumerate_negative(d: int, k: int) -> list[PellSolution]:
    """The k smallest solutions of y^2 - d x^2 = -1, in increasing order.

    These are the odd powers (y0 + x0 sqrt(d))^(2m+1) of the fundamental
    solution, obtained by repeatedly multiplying with its square (the
    fundamental +1 unit) in Z[sqrt(d)].
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    fund = fundamental_negative(d)
    if fund is None:
        raise ValueError(f"y^2 - {d} x^2 = -1 has no integer solutions")
    y, x = fund.y, fund.x
    # square of the fundamental: (y^2 + d x^2) + (2xy) sqrt(d), norm +1
    p, q = y * y + d * x * x, 2 * x * y
    out = [fund]
    for _ in range(k - 1):
        y, x = y * p + x * q * d, y * q + x * p
        out.append(PellSolution(d, y, x))
    return out


def is_solvable_negative(d: int) -> bool:
    """Whether y^2 - d x^2 = -1 has any integer solution.

    D = 1 is solvable by (y, x) = (0, 1); larger perfect squares are not
    (y^2 - (sx)^2 = -1 forces consecutive squares); otherwise decided by
    the continued-fraction period parity.
    """
    if d < 1:
        raise ValueError("D must be a positive integer")
    if d == 1:
        return True
    if isqrt(d) ** 2 == d:
        return False
    return cf_expansion(d).period_length % 2 == 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for anything this package needs)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # these witnesses are a proven-complete set for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_criterion(p: int) -> bool:
    """The residue criterion for primes: solvable iff p = 2 or p = 1 (mod 4)."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime; the criterion applies to primes only")
    return p == 2 or p % 4 == 1


# --- exact evaluation of the misprinted D = 5 closed form ------------------

_Quad = tuple[Fraction, Fraction]  # a + b*sqrt(5)


def _qmul(u: _Quad, v: _Quad) -> _Quad:
    a, b = u
    c, e = v
    return (a * c + 5 * b * e, a * e + b * c)


def _qpow(u: _Quad, k: int) -> _Quad:
    out: _Quad = (Fraction(1), Fraction(0))
    for _ in range(k):
        out = _qmul(out, u)
    return out


def d5_closed_form_misprint(n: int) -> tuple[Fraction, Fraction]:
    """Evaluate the misprinted D = 5 closed form exactly (see module docs).

    Returns (y_n, x_n) as exact rationals. The result is NOT a Pell
    solution: at n = 1 it gives (49, 22) with residual -19. Kept so the
    verifier can assert the discrepancy instead of silently correcting it.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    unit = _qpow((Fraction(2), Fraction(1)), 2 * n)        # (2+sqrt5)^(2n)
    conj = _qpow((Fraction(2), Fraction(-1)), 2 * n)       # (2-sqrt5)^(2n)
    two_y = _add(_qmul((Fraction(1), Fraction(2)), unit),
                 _qmul((Fraction(1), Fraction(-2)), conj))
    two_x = _add(_qmul((Fraction(2), Fraction(1, 5)), unit),
                 _qmul((Fraction(2), Fraction(-1, 5)), conj))
    assert two_y[1] == 0 and two_x[1] == 0  # conjugate sums are rational
    return two_y[0] / 2, two_x[0] / 2


def _add(u: _Quad, v: _Quad) -> _Quad:
    return (u[0] + v[0], u[1] + v[1])
