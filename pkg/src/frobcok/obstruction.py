"""Numerical obstructions to ampleness of the dual Frobenius cokernel B_X^dual.

Every rule here either fires and returns a definite verdict with a trace, or
does not fire.  Nothing is concluded beyond what the rules state, so Unknown is
a normal outcome.  Witness data (curve degrees, linear subspaces) is taken on
trust; only line existence on complete intersections is checked, by a
dimension count.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from ._arith import require_prime
from .verdict import TraceStep, Verdict, VerdictValue

# rule name -> the statement it applies
RULES = {
    "curve": "a smooth rational curve C with -K_X.C <= 2 obstructs ampleness of B_X^dual",
    "subspace": "a linear P^r in X with -K_X^(n-r).Z <= r+1 obstructs ampleness of B_X^dual",
    "ci_reduce": "a hyperplane section of P^n is P^(n-1)",
    "ci_linear": "a complete intersection of hyperplanes only is projective space, whose B_X^dual is ample",
    "ci_quadric": "a smooth quadric of dimension >= 3 in characteristic p != 2 has ample B_X^dual",
    "ci_low_index": "a complete intersection of dimension >= 2 with sum d_i in {n-1, n} contains a line of -K-degree <= 2",
    "ci_not_fano": "a complete intersection with sum d_i >= n+1 has B_X^dual not ample",
    "ci_unresolved": "no rule applies to this complete intersection",
    "fano3_classification": "a Fano threefold has ample B_X^dual iff it is P^3 or the quadric threefold with p != 2",
    "fano3_quadric_p2": "the classification does not cover the quadric threefold in characteristic 2",
    "witness_override": "a supplied curve witness of -K-degree <= 2 forces NotAmple",
}


def _step(rule, detail=""):
    return TraceStep(rule, RULES[rule], detail)


@dataclass(frozen=True)
class CurveWitness:
    anticanonical_degree: int


@dataclass(frozen=True)
class SubspaceWitness:
    r: int
    degree: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"subspace dimension r must be >= 1, got {self.r}")


@dataclass(frozen=True)
class CompleteIntersectionInput:
    n: int
    degrees: Tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        require_prime(self.p)
        if not self.degrees:
            raise ValueError("at least one degree is required")
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"degrees must be >= 1, got {list(self.degrees)}")
        if self.n - len(self.degrees) < 1:
            raise ValueError(f"dim X = n - #degrees must be >= 1, got {self.n - len(self.degrees)}")

    @property
    def dim(self):
        return self.n - len(self.degrees)


def curve_obstruction(w: CurveWitness) -> Verdict:
    if w.anticanonical_degree <= 2:
        return Verdict(VerdictValue.NOT_AMPLE, [_step("curve", f"-K.C = {w.anticanonical_degree} <= 2")])
    return Verdict(VerdictValue.UNKNOWN)


def subspace_obstruction(w: SubspaceWitness) -> Verdict:
    if w.degree <= w.r + 1:
        return Verdict(VerdictValue.NOT_AMPLE, [_step("subspace", f"degree {w.degree} <= r+1 = {w.r + 1}")])
    return Verdict(VerdictValue.UNKNOWN)


@dataclass(frozen=True)
class LineCount:
    exists: bool
    grassmannian_dim: int
    codimension: int
    dim_x: int

    def to_dict(self):
        return {
            "exists": self.exists,
            "grassmannian_dim": self.grassmannian_dim,
            "codimension": self.codimension,
            "dim_x": self.dim_x,
        }


def ci_line_exists(n: int, degrees: Sequence[int]) -> LineCount:
    """Dimension count for lines on a complete intersection in P^n.

    Lines in P^n form a (2n-2)-dimensional Grassmannian and lying on a degree-d
    hypersurface imposes d+1 conditions, so lines exist when
    2n - 2 >= sum(d_i) + c.
    """
    degrees = list(degrees)
    g = 2 * n - 2
    codim = sum(degrees) + len(degrees)
    dim_x = n - len(degrees)
    return LineCount(g >= codim and dim_x >= 1, g, codim, dim_x)


def ci_verdict(ci: CompleteIntersectionInput) -> Verdict:
    # a degree-1 equation cuts P^n down to P^(n-1)
    n = ci.n - sum(1 for d in ci.degrees if d == 1)
    degrees = [d for d in ci.degrees if d >= 2]
    trace = []
    if len(degrees) != len(ci.degrees):
        trace.append(_step("ci_reduce", f"dropped {len(ci.degrees) - len(degrees)} linear equation(s); now in P^{n}"))
    dim_x = n - len(degrees)
    total = sum(degrees)

    if not degrees:
        trace.append(_step("ci_linear", f"X = P^{dim_x}"))
        return Verdict(VerdictValue.AMPLE, trace)
    if degrees == [2] and dim_x >= 3 and ci.p != 2:
        trace.append(_step("ci_quadric", f"quadric of dimension {dim_x}, p = {ci.p}"))
        return Verdict(VerdictValue.AMPLE, trace)
    if total in (n - 1, n) and dim_x >= 2:
        lines = ci_line_exists(n, degrees)
        trace.append(_step("ci_low_index",
                           f"2n-2 = {lines.grassmannian_dim} >= {lines.codimension}: lines exist; "
                           f"-K.line = n+1-sum d_i = {n + 1 - total}"))
        trace.append(_step("curve", f"-K.C = {n + 1 - total} <= 2"))
        return Verdict(VerdictValue.NOT_AMPLE, trace)
    if total >= n + 1:
        trace.append(_step("ci_not_fano", f"sum d_i = {total} >= n+1 = {n + 1}"))
        return Verdict(VerdictValue.NOT_AMPLE, trace)
    trace.append(_step("ci_unresolved", f"sum d_i = {total}, n = {n}, dim X = {dim_x}, p = {ci.p}"))
    return Verdict(VerdictValue.UNKNOWN, trace)


class Fano3Kind(str, Enum):
    P3 = "P3"
    QUADRIC = "Quadric"
    OTHER = "Other"


def fano3_verdict(kind, p: int, curve: Optional[CurveWitness] = None) -> Verdict:
    kind = Fano3Kind(kind)
    require_prime(p)
    if curve is not None and curve.anticanonical_degree <= 2:
        v = curve_obstruction(curve)
        return Verdict(VerdictValue.NOT_AMPLE, [_step("witness_override", f"kind {kind.value}")] + v.trace)
    if kind is Fano3Kind.P3:
        return Verdict(VerdictValue.AMPLE, [_step("fano3_classification", "X = P^3")])
    if kind is Fano3Kind.QUADRIC:
        if p == 2:
            return Verdict(VerdictValue.UNKNOWN, [_step("fano3_quadric_p2")])
        return Verdict(VerdictValue.AMPLE, [_step("fano3_classification", f"quadric threefold, p = {p}")])
    return Verdict(VerdictValue.NOT_AMPLE, [_step("fano3_classification", "neither P^3 nor a quadric")])
