"""Exact counting of shift-constrained DNA words.

g(s, n) counts length-n words whose first s shifts carry no complementary
match (mu_1 = ... = mu_s = 0). Three independent routes are provided: an
exhaustive brute-force oracle, the boundary/step recursion, and a power
series expansion of the closed-form generating function. A bivariate
series additionally resolves the mu_1 = 0 count by GC-content. All counts
are exact arbitrary-precision integers.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .seqcore import COMPLEMENT

DEFAULT_ORACLE_CAP = 12
ORACLE_CAP_ENV = "OLIGOFORGE_ORACLE_CAP"


class OracleCapError(ValueError):
    """Raised when an exhaustive enumeration would exceed the length cap."""


def oracle_cap() -> int:
    """Current brute-force length cap (env override, default 12)."""
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{ORACLE_CAP_ENV} must be >= 1, got {cap}")
    return cap


def iter_sequences(n: int):
    """All 4**n words of length n, as strings, in lexicographic order."""
    for letters in itertools.product("ACGT", repeat=n):
        yield "".join(letters)


def count_brute_force(
    n: int, predicate: Callable[[str], bool], cap: int | None = None
) -> int:
    """Count length-n words satisfying predicate by full enumeration.

    Refuses to run past the cap (argument, else the environment override,
    else 12) rather than sampling: results from this oracle are exact or
    absent.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    effective_cap = cap if cap is not None else oracle_cap()
    if n > effective_cap:
        raise OracleCapError(
            f"brute-force enumeration of 4^{n} words exceeds the cap of {effective_cap}"
        )
    return sum(1 for word in iter_sequences(n) if predicate(word))


def mu_zero_predicate(s: int) -> Callable[[str], bool]:
    """Predicate: no complementary match on any shift 1..min(s, n-1)."""
    if s < 1:
        raise ValueError("shift depth must be >= 1")

    def predicate(word: str) -> bool:
        n = len(word)
        for i in range(1, min(s, n - 1) + 1):
            for l in range(n - i):
                if word[l] == COMPLEMENT[word[l + i]]:
                    return False
        return True

    return predicate


def mu1_equals_predicate(m: int) -> Callable[[str], bool]:
    """Predicate: exactly m complementary matches on shift 1."""
    if m < 0:
        raise ValueError("match count must be >= 0")

    def predicate(word: str) -> bool:
        matches = sum(
            word[l] == COMPLEMENT[word[l + 1]] for l in range(len(word) - 1)
        )
        return matches == m

    return predicate


def complement_free_predicate() -> Callable[[str], bool]:
    """Predicate: no two positions anywhere hold complementary bases."""

    def predicate(word: str) -> bool:
        seen = set(word)
        return not any(COMPLEMENT[b] in seen for b in seen)

    return predicate


def g_boundary(n: int) -> int:
    """Count of length-n words with no complementary pair at all: 4(2^n - 1).

    Such a word stays inside one of the four complement-free two-letter
    alphabets; the four constant words are shared between two alphabets
    each, hence the -1.
    """
    if n <= 1:
        raise ValueError("boundary count requires n > 1")
    return 4 * (2**n - 1)


def g_recursive(s: int, n: int) -> int:
    """g(s, n) by recursion: g = 2*g(n-1) + g(n-s) above the boundary.

    For n <= s all shifts up to n-1 are constrained, so the boundary count
    applies (with g(s, 1) = 4: a single base satisfies every shift
    constraint vacuously).
    """
    if s < 1:
        raise ValueError("shift depth must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    values = {}
    for k in range(1, n + 1):
        if k == 1:
            values[k] = 4
        elif k <= s:
            values[k] = g_boundary(k)
        else:
            values[k] = 2 * values[k - 1] + values[k - s]
    return values[n]


@dataclass(frozen=True)
class CountTable:
    """Counts g(s, n) for n = 1..N at a fixed shift depth s."""

    s: int
    values: dict[int, int]

    def value(self, n: int) -> int:
        return self.values[n]


def _series_div(num: list[int], den: list[int], order: int) -> list[int]:
    """Coefficients 0..order of num/den as a power series (den[0] == 1)."""
    if den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    coeffs = [0] * (order + 1)
    for k in range(order + 1):
        acc = num[k] if k < len(num) else 0
        for d in range(1, min(k, len(den) - 1) + 1):
            acc -= den[d] * coeffs[k - d]
        coeffs[k] = acc
    return coeffs


def g_series(s: int, max_n: int) -> CountTable:
    """g(s, n) for n = 1..max_n read off the closed-form generating function.

    In the substituted variable x the function is
    4(x + x^2 + ... + x^s) / (1 - 2x - x^s); the coefficients are produced
    by exact truncated series division and agree with g_recursive
    everywhere.
    """
    if s < 1:
        raise ValueError("shift depth must be >= 1")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    num = [0] + [4] * s
    den = [1, -2] + [0] * (s - 1)
    den[s] -= 1
    coeffs = _series_div(num, den, max_n)
    return CountTable(s, {n: coeffs[n] for n in range(1, max_n + 1)})


def count_mu1(n: int, m: int) -> int:
    """Count of length-n words with exactly m shift-1 complementary matches.

    Closed form 4 * C(n-1, m) * 3^(n-m-1): choose the matched positions,
    then 3 free choices at every unmatched position after the first base.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= m <= n - 1:
        raise ValueError(f"match count {m} out of range for length {n}")
    return 4 * math.comb(n - 1, m) * 3 ** (n - m - 1)


@dataclass(frozen=True)
class BivariateSeries:
    """Truncated series with integer coefficients indexed by (n, w)."""

    order: int
    coeffs: dict[tuple[int, int], int]

    def coefficient(self, n: int, w: int) -> int:
        if not 0 <= n <= self.order:
            raise ValueError(f"n={n} outside truncation order {self.order}")
        if w < 0:
            raise ValueError("w must be >= 0")
        return self.coeffs.get((n, w), 0)


def gj_coefficients(max_n: int) -> BivariateSeries:
    """Coefficients counting mu_1 = 0 words by length n and GC-content w.

    Expands 1 / (1 - 2x/(1+x) - 2xy/(1+xy)) exactly: writing
    u = 2x/(1+x) + 2xy/(1+xy), the x^k slice of u is
    2*(-1)^(k-1) * (1 + y^k), and the series is the geometric sum of powers
    of u, accumulated slice by slice.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    # rows[n][w] for 0 <= w <= n
    rows = [[1]]
    for n in range(1, max_n + 1):
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            sign = 2 if k % 2 == 1 else -2
            prev = rows[n - k]
            for w, c in enumerate(prev):
                if c:
                    row[w] += sign * c
                    row[w + k] += sign * c
        rows.append(row)
    coeffs = {}
    for n, row in enumerate(rows):
        for w, c in enumerate(row):
            if c:
                coeffs[(n, w)] = c
    return BivariateSeries(max_n, coeffs)


def psi(s: int, z: float) -> float:
    """Denominator polynomial z^s - 2*z^(s-1) - 1 of the counting series."""
    return z**s - 2 * z ** (s - 1) - 1


@dataclass(frozen=True)
class GrowthAnalysis:
    """Dominant growth root of the count recursion for shift depth s."""

    s: int
    rho: float
    tolerance: float

    @property
    def residual(self) -> float:
        return psi(self.s, self.rho)


def dominant_root(s: int, tol: float = 1e-12) -> GrowthAnalysis:
    """Locate the real root of psi in (2, 3) by bisection.

    psi(s, 2) = -1 and psi(s, 3) = 3^(s-1) - 1 > 0 for s >= 2, so a sign
    change brackets the root; the bracket [a, b] with psi(a) <= 0 < psi(b)
    is maintained until it is narrower than tol (or floats run out).
    """
    if s < 2:
        raise ValueError("growth analysis requires shift depth >= 2")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a, b = 2.0, 3.0
    while b - a > tol:
        mid = (a + b) / 2
        if mid <= a or mid >= b:
            break
        if psi(s, mid) <= 0:
            a = mid
        else:
            b = mid
    return GrowthAnalysis(s, (a + b) / 2, tol)


def growth_check(s: int, n: int) -> float:
    """Consecutive-count ratio g(s, n+1) / g(s, n) as a float.

    Converges to the dominant root as n grows, because all other roots of
    psi lie inside the unit circle.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(Fraction(g_recursive(s, n + 1), g_recursive(s, n)))
