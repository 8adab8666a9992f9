"""Frobenius pushforwards of line bundles on P^n by monomial counting.

A monomial of degree d + pk factors uniquely as x^a * (x^b)^p with a in the
box [0, p-1]^(n+1), so F_* O(d) = sum_m O(m)^(mult m) where mult m counts the
box points with coordinate sum d - pm.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from ._arith import require_prime
from .trunc_sym import box_count
from .verdict import Positivity


@dataclass(frozen=True)
class PnTwistDecomposition:
    n: int
    p: int
    d: int
    summands: Dict[int, int]

    @property
    def rank(self):
        return sum(self.summands.values())

    @property
    def min_twist(self):
        return min(self.summands)

    def twists(self):
        """The twists as a sorted multiset (list with repetition)."""
        return [m for m in sorted(self.summands) for _ in range(self.summands[m])]

    def to_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "d": self.d,
            "rank": self.rank,
            "summands": {str(m): k for m, k in sorted(self.summands.items())},
        }


def _check(n, p):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    require_prime(p)


def fstar_decompose_pn(n: int, p: int, d: int) -> PnTwistDecomposition:
    _check(n, p)
    top = (n + 1) * (p - 1)
    # twists m with 0 <= d - pm <= top
    lo = -((top - d) // p)
    hi = d // p
    summands = {}
    for m in range(lo, hi + 1):
        k = box_count(n + 1, p, d - p * m)
        if k:
            summands[m] = k
    return PnTwistDecomposition(n, p, d, summands)


def fstar_positivity(n: int, p: int, d: int) -> Positivity:
    low = fstar_decompose_pn(n, p, d).min_twist
    if low >= 1:
        return Positivity.AMPLE
    if low >= 0:
        return Positivity.NEF_NOT_AMPLE
    return Positivity.NOT_NEF


class ScanRangeError(ValueError):
    pass


@dataclass(frozen=True)
class ThresholdScan:
    n: int
    p: int
    d_range: Tuple[int, int]
    min_nef_d: int
    min_ample_d: int

    def to_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "d_range": list(self.d_range),
            "min_nef_d": self.min_nef_d,
            "min_ample_d": self.min_ample_d,
        }


def threshold_scan(n: int, p: int, d_range: Iterable[int]) -> ThresholdScan:
    """Smallest d in `d_range` for which F_* O(d) is nef, and for which it is ample.

    The scan must start below the nef threshold and reach the ample threshold;
    otherwise ScanRangeError is raised rather than reporting a boundary value.
    """
    ds = sorted(set(d_range))
    if not ds:
        raise ScanRangeError("empty d range")
    verdicts = [(d, fstar_positivity(n, p, d)) for d in ds]
    if verdicts[0][1].is_nef:
        raise ScanRangeError(f"F_*O({ds[0]}) is already nef; extend the range downward")
    min_nef: Optional[int] = next((d for d, v in verdicts if v.is_nef), None)
    min_ample: Optional[int] = next((d for d, v in verdicts if v is Positivity.AMPLE), None)
    if min_nef is None or min_ample is None:
        raise ScanRangeError(f"no {'nef' if min_nef is None else 'ample'} twist up to d={ds[-1]}; extend the range upward")
    return ThresholdScan(n, p, (ds[0], ds[-1]), min_nef, min_ample)
