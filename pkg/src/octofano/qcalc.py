"""q-analogues: q-integers, q-factorials, Gaussian binomials and Galois numbers.

Everything here is exact integer/rational arithmetic.  ``q`` may be any
integer >= 1; the combinatorial identities hold formally, so the restriction
to prime field orders is left to :mod:`octofano.finite_geometry`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple


def _check_q(q: int) -> None:
    if q <= 0:
        raise ValueError(f"q must be a positive integer, got {q}")


def q_integer(n: int, q: int) -> int:
    """Return n_q = 1 + q + ... + q**(n-1); 0_q is 0."""
    _check_q(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(q**i for i in range(n))


def q_factorial(n: int, q: int) -> int:
    """Return (n_q)! = 1_q * 2_q * ... * n_q, with (0_q)! = 1."""
    _check_q(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = 1
    term = 0
    for m in range(n):
        term = term * q + 1  # running value of (m+1)_q
        result *= term
    return result


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over GF(q).

    Evaluated by the product formula
    prod_{i=1..k} (q**(n-k+i) - 1) / (q**i - 1), dividing after every factor
    so intermediate values stay integral and small.  Out-of-range ``k`` gives 0.
    """
    _check_q(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    if q == 1:
        # the factors degenerate to 0/0; the limit is the ordinary binomial
        result = 1
        for i in range(1, k + 1):
            result = result * (n - k + i) // i
        return result
    result = 1
    for i in range(1, k + 1):
        # after step i the partial product is [n-k+i choose i]_q, an integer
        result = result * (q ** (n - k + i) - 1) // (q**i - 1)
    return result


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of V(n, q): the sum of [n choose k]_q over k = 0..n."""
    _check_q(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


@dataclass(frozen=True)
class FormalSeries:
    """Power series truncated at ``degree``; coefficient i multiplies x**i."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        if other.degree != self.degree:
            raise ValueError("series truncated at different degrees")
        a, b = self.coefficients, other.coefficients
        return FormalSeries(
            tuple(sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(len(a)))
        )


def exp_q(q: int, degree: int) -> FormalSeries:
    """The q-exponential sum x**n / (n_q)! truncated at ``degree``."""
    _check_q(q)
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return FormalSeries(tuple(Fraction(1, q_factorial(n, q)) for n in range(degree + 1)))


def galois_series(q: int, degree: int) -> FormalSeries:
    """The series G_{n,q} x**n / (n_q)! truncated at ``degree``."""
    _check_q(q)
    return FormalSeries(
        tuple(Fraction(galois_number(n, q), q_factorial(n, q)) for n in range(degree + 1))
    )


@dataclass(frozen=True)
class QExpReport:
    q: int
    degree: int
    holds: bool
    first_failure: Optional[int] = None


def verify_qexp_squared(q: int, degree: int) -> QExpReport:
    """Check exp_q(x)**2 == sum G_{n,q} x**n / (n_q)! coefficientwise up to ``degree``."""
    _check_q(q)
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    e = exp_q(q, degree)
    lhs = e * e
    rhs = galois_series(q, degree)
    for n in range(degree + 1):
        if lhs[n] != rhs[n]:
            return QExpReport(q, degree, False, n)
    return QExpReport(q, degree, True)

