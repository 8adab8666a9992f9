"""Cohomology of twisted forms on P^n and positivity ranges for wedge powers of T_X."""

from dataclasses import dataclass
from typing import List, Tuple

from ._arith import binom, poly_binom


@dataclass(frozen=True)
class BottQuery:
    n: int
    k: int
    j: int
    i: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"exterior power k={self.k} outside [0, {self.n}]")
        if not 0 <= self.i <= self.n:
            raise ValueError(f"cohomological degree i={self.i} outside [0, {self.n}]")


def bott_dim(q: BottQuery) -> int:
    """h^i(P^n, Omega^k(j))."""
    n, k, j, i = q.n, q.k, q.j, q.i
    if i == k and j == 0:
        return 1
    if i == 0 and j > k:
        return binom(j + n - k, j) * binom(j - 1, k)
    if i == n and j < k - n:
        return binom(k - j, -j) * binom(-j - 1, n - k)
    return 0


def euler_char(n: int, k: int, t: int) -> int:
    """chi(Omega^k(t)) on P^n from the Euler sequence, without using bott_dim.

    0 -> Omega^k -> wedge^k(O(-1)^(n+1)) -> Omega^(k-1) -> 0 gives
    chi(Omega^k(t)) = C(n+1, k) chi(O(t-k)) - chi(Omega^(k-1)(t)).
    """
    chi = poly_binom(t, n)
    for kk in range(1, k + 1):
        chi = binom(n + 1, kk) * poly_binom(t - kk, n) - chi
    return chi


def euler_char_from_bott(n: int, k: int, t: int) -> int:
    return sum((-1) ** i * bott_dim(BottQuery(n, k, t, i)) for i in range(n + 1))


@dataclass(frozen=True)
class RegularityCheck:
    n: int
    k: int
    regularity: int
    regular: bool
    checks: Tuple[Tuple[int, int, int], ...]  # (i, twist, h^i)

    def to_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "regularity": self.regularity,
            "regular": self.regular,
            "checks": [{"i": i, "twist": t, "h": h} for i, t, h in self.checks],
        }


def cm_regular(n: int, k: int) -> RegularityCheck:
    """Whether Omega^k on P^n is (k+1)-regular: h^i(Omega^k(k+1-i)) = 0 for i > 0."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n and n >= 1, got n={n}, k={k}")
    m = k + 1
    checks = tuple((i, m - i, bott_dim(BottQuery(n, k, m - i, i))) for i in range(1, n + 1))
    return RegularityCheck(n, k, m, all(h == 0 for _, _, h in checks), checks)


@dataclass(frozen=True)
class PositivityRange:
    """Inclusive ranges of i for which wedge^i T_X is ample / nef; lo > hi means empty."""

    ample_lo: int
    ample_hi: int
    nef_lo: int
    nef_hi: int

    def ample(self) -> List[int]:
        return list(range(self.ample_lo, self.ample_hi + 1))

    def nef(self) -> List[int]:
        return list(range(self.nef_lo, self.nef_hi + 1))

    def to_dict(self):
        return {
            "ample": [self.ample_lo, self.ample_hi],
            "nef": [self.nef_lo, self.nef_hi],
            "ample_empty": self.ample_lo > self.ample_hi,
            "nef_empty": self.nef_lo > self.nef_hi,
        }


def _range(dim_x, ample_lo, nef_lo):
    return PositivityRange(max(1, ample_lo), dim_x, max(1, nef_lo), dim_x)


def wedge_t_range_index(dim_x: int, a: int) -> PositivityRange:
    """For X in P^N with omega_X = O_X(-a): ample for i >= dim X - a + 2, nef for i >= dim X - a + 1."""
    if dim_x < 1 or a < 1:
        raise ValueError(f"need dim X >= 1 and index a >= 1, got dim X={dim_x}, a={a}")
    return _range(dim_x, dim_x - a + 2, dim_x - a + 1)


def wedge_t_range_hypersurface(n: int, d: int) -> PositivityRange:
    """Degree-d hypersurface in P^n: ample for d <= i <= n-1, nef for d-1 <= i <= n-1."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    return _range(n - 1, d, d - 1)
