"""Smooth complete toric fans, divisor positivity and Frobenius pushforwards.

A torus-invariant divisor is a coefficient vector a indexed by the rays, standing
for sum_rho a_rho D_rho.  On a smooth toric variety X every pushforward
F_* O_X(D) splits as a sum of line bundles, one for each residue class u of
M/pM, with coefficients floor((a_rho + <u, v_rho>) / p).
"""

import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import gcd
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from ._arith import int_det, rational_inverse, require_prime
from .verdict import Positivity, TraceStep, Verdict, VerdictValue


class InvalidFanError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid fan: " + "; ".join(self.violations))


@dataclass(frozen=True)
class Fan:
    """A fan given by primitive ray generators and its maximal cones (as ray indices)."""

    dim: int
    rays: Tuple[Tuple[int, ...], ...]
    cones: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.cones))

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(int(data["dim"]), data["rays"], data["cones"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed fan description: {exc!r}") from None

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self):
        return {"dim": self.dim, "rays": [list(r) for r in self.rays], "cones": [list(c) for c in self.cones]}

    @property
    def nrays(self):
        return len(self.rays)

    @cached_property
    def violations(self) -> List[str]:
        return _violations(self)

    def require_valid(self):
        if self.violations:
            raise InvalidFanError(self.violations)

    @cached_property
    def _cone_inverses(self) -> Dict[Tuple[int, ...], List[List[int]]]:
        # integer inverses of the ray matrices; valid only after smoothness checks
        out = {}
        for cone in self.cones:
            inv = rational_inverse([self.rays[i] for i in cone])
            out[cone] = [[int(x) for x in row] for row in inv]
        return out

    def character_divisor(self, m: Sequence[int]) -> Tuple[int, ...]:
        """Coefficients <m, v_rho> of the principal divisor of the character m."""
        return tuple(_dot(m, v) for v in self.rays)


@dataclass(frozen=True)
class ToricDivisor:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))

    def __neg__(self):
        return ToricDivisor(tuple(-a for a in self.coeffs))


@dataclass(frozen=True)
class LineBundleDecomposition:
    """Multiset of torus-invariant divisors, stored as sorted (coeffs, multiplicity) pairs."""

    summands: Tuple[Tuple[Tuple[int, ...], int], ...]

    @classmethod
    def from_counter(cls, counts):
        return cls(tuple(sorted((tuple(k), v) for k, v in counts.items() if v > 0)))

    @property
    def rank(self):
        return sum(m for _, m in self.summands)

    def counter(self):
        return Counter(dict(self.summands))

    def to_dict(self):
        return {
            "rank": self.rank,
            "summands": [{"divisor": list(d), "multiplicity": m} for d, m in self.summands],
        }


@dataclass(frozen=True)
class PositivityVerdict:
    value: Positivity
    witness: Optional[dict] = None

    def to_dict(self):
        out = {"positivity": self.value.value}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def _coeffs(D, fan):
    coeffs = D.coeffs if isinstance(D, ToricDivisor) else tuple(int(a) for a in D)
    if len(coeffs) != fan.nrays:
        raise ValueError(f"divisor has {len(coeffs)} coefficients but the fan has {fan.nrays} rays")
    return coeffs


def _violations(fan: Fan) -> List[str]:
    n = fan.dim
    out = []
    if n < 1:
        return [f"dimension must be >= 1, got {n}"]
    for idx, v in enumerate(fan.rays):
        if len(v) != n:
            out.append(f"ray {idx} has length {len(v)}, expected {n}")
        elif not any(v):
            out.append(f"ray {idx} is zero")
        elif gcd(*v) != 1:
            out.append(f"ray {idx} {list(v)} is not primitive")
    if out:
        return out
    seen = {}
    for idx, v in enumerate(fan.rays):
        if v in seen:
            out.append(f"rays {seen[v]} and {idx} coincide")
        seen.setdefault(v, idx)

    for cone in fan.cones:
        if any(i < 0 or i >= fan.nrays for i in cone):
            out.append(f"cone {list(cone)} references a missing ray")
            continue
        if len(set(cone)) != n:
            out.append(f"cone {list(cone)} must have exactly {n} distinct rays")
            continue
        det = int_det([fan.rays[i] for i in cone])
        if abs(det) != 1:
            out.append(f"non-smooth cone {list(cone)}: determinant {det}")
    if not fan.cones:
        out.append("fan has no maximal cones")
    counts = Counter(fan.cones)
    for cone, k in sorted(counts.items()):
        if k > 1:
            out.append(f"cone {list(cone)} is listed {k} times")
    used = {i for c in fan.cones for i in c}
    for idx in range(fan.nrays):
        if idx not in used:
            out.append(f"ray {idx} lies in no maximal cone")
    if out:
        return out

    facets: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for cone in fan.cones:
        for face in combinations(cone, n - 1):
            facets.setdefault(face, []).append(cone)
    for face, owners in sorted(facets.items()):
        if len(owners) != 2:
            out.append(f"incompleteness at facet {list(face)}: {len(owners)} incident maximal cone(s)")
            continue
        # the two cones must lie on opposite sides of the common facet
        s, t = owners
        (u,) = set(s) - set(face)
        (w,) = set(t) - set(face)
        inv = fan._cone_inverses[s]
        col = s.index(u)
        normal = [inv[r][col] for r in range(n)]
        if _dot(normal, fan.rays[w]) >= 0:
            out.append(f"cones {list(s)} and {list(t)} overlap across facet {list(face)}")

    adj = {c: set() for c in fan.cones}
    for owners in facets.values():
        for a, b in combinations(owners, 2):
            adj[a].add(b)
            adj[b].add(a)
    start = fan.cones[0]
    reached = {start}
    queue = deque([start])
    while queue:
        for nb in adj[queue.popleft()]:
            if nb not in reached:
                reached.add(nb)
                queue.append(nb)
    if len(reached) != len(fan.cones):
        out.append("maximal cones are not connected through facets")
    return out


def validate_fan(fan: Fan) -> List[str]:
    """List of problems with `fan`; empty iff it is a well-formed smooth complete fan.

    Completeness is certified locally: every facet of a maximal cone is shared
    by exactly two maximal cones lying on opposite sides of it, and the cones
    are connected through facets.  This does not rule out a fan that wraps
    around more than once.
    """
    return list(fan.violations)


def _support_vector(fan, cone, coeffs):
    inv = fan._cone_inverses[cone]
    rhs = [-coeffs[i] for i in cone]
    return [_dot(row, rhs) for row in inv]


def divisor_positivity(fan: Fan, D) -> PositivityVerdict:
    """Nef/ample test via the piecewise-linear support function of D.

    For each maximal cone s, m_s solves <m_s, v_i> = -a_i on the rays of s.
    D is nef iff <m_s, v> >= -a_v for every ray v and cone s, and ample iff the
    inequality is strict whenever v is not a ray of s.
    """
    fan.require_valid()
    a = _coeffs(D, fan)
    boundary = None
    for cone in fan.cones:
        m = _support_vector(fan, cone, a)
        for idx, v in enumerate(fan.rays):
            if idx in cone:
                continue
            lhs = _dot(m, v)
            if lhs < -a[idx]:
                return PositivityVerdict(
                    Positivity.NOT_NEF,
                    {"cone": list(cone), "ray": idx, "m": m, "pairing": lhs, "bound": -a[idx]},
                )
            if lhs == -a[idx] and boundary is None:
                boundary = {"cone": list(cone), "ray": idx, "m": m, "pairing": lhs, "bound": -a[idx]}
    if boundary is not None:
        return PositivityVerdict(Positivity.NEF_NOT_AMPLE, boundary)
    return PositivityVerdict(Positivity.AMPLE)


def linearly_equivalent(fan: Fan, D1, D2) -> bool:
    """Whether D1 - D2 is the divisor of a character."""
    fan.require_valid()
    diff = [x - y for x, y in zip(_coeffs(D1, fan), _coeffs(D2, fan))]
    cone = fan.cones[0]
    m = [-x for x in _support_vector(fan, cone, diff)]
    return list(fan.character_divisor(m)) == diff


def frobenius_pushforward(fan: Fan, D, p: int) -> LineBundleDecomposition:
    """Line bundle summands of F_* O_X(D), one per u in {0,...,p-1}^n."""
    fan.require_valid()
    require_prime(p)
    a = _coeffs(D, fan)
    counts = Counter()
    for u in product(range(p), repeat=fan.dim):
        counts[tuple((a_r + _dot(u, v)) // p for a_r, v in zip(a, fan.rays))] += 1
    return LineBundleDecomposition.from_counter(counts)


def frobenius_cokernel(fan: Fan, p: int) -> LineBundleDecomposition:
    """Summands of B_X = coker(O_X -> F_* O_X)."""
    counts = frobenius_pushforward(fan, (0,) * fan.nrays, p).counter()
    zero = (0,) * fan.nrays
    if counts[zero] < 1:
        raise RuntimeError("decomposition of F_* O_X has no trivial summand")
    counts[zero] -= 1
    return LineBundleDecomposition.from_counter(counts)


_SPLIT_ANCHOR = "on a toric variety F_* O_X, hence B_X, is a direct sum of line bundles"


def bx_dual_ample(fan: Fan, p: int) -> Verdict:
    """B_X^dual is ample iff every line bundle summand of B_X is antiample."""
    coker = frobenius_cokernel(fan, p)
    trace = [TraceStep("toric_split", _SPLIT_ANCHOR, f"{coker.rank} summands")]
    for coeffs, mult in coker.summands:
        pos = divisor_positivity(fan, [-a for a in coeffs])
        if pos.value is not Positivity.AMPLE:
            trace.append(TraceStep("summand_antiample", "B_X^dual ample iff each summand of B_X is antiample",
                                   f"dual of summand {list(coeffs)} is {pos.value.value}"))
            witness = {"summand": list(coeffs), "multiplicity": mult, "dual_positivity": pos.to_dict()}
            return Verdict(VerdictValue.NOT_AMPLE, trace, witness)
    trace.append(TraceStep("summand_antiample", "B_X^dual ample iff each summand of B_X is antiample",
                           "every summand is antiample"))
    return Verdict(VerdictValue.AMPLE, trace)


def bx_ample(fan: Fan, p: int) -> Verdict:
    """B_X is ample iff every line bundle summand of B_X is ample."""
    coker = frobenius_cokernel(fan, p)
    trace = [TraceStep("toric_split", _SPLIT_ANCHOR, f"{coker.rank} summands")]
    for coeffs, mult in coker.summands:
        pos = divisor_positivity(fan, coeffs)
        if pos.value is not Positivity.AMPLE:
            trace.append(TraceStep("summand_ample", "B_X ample iff each summand is ample",
                                   f"summand {list(coeffs)} is {pos.value.value}"))
            witness = {"summand": list(coeffs), "multiplicity": mult, "positivity": pos.to_dict()}
            return Verdict(VerdictValue.NOT_AMPLE, trace, witness)
    trace.append(TraceStep("summand_ample", "B_X ample iff each summand is ample", "every summand is ample"))
    return Verdict(VerdictValue.AMPLE, trace)


# standard fans

def projective_space(n: int) -> Fan:
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [(-1,) * n]
    cones = [tuple(j for j in range(n + 1) if j != i) for i in range(n + 1)]
    return Fan(n, rays, cones)


def product_p1_p1() -> Fan:
    return Fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


def hirzebruch(a: int) -> Fan:
    return Fan(2, [(1, 0), (0, 1), (-1, a), (0, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


def blowup_p2_point() -> Fan:
    """P^2 blown up at the torus-fixed point of the cone spanned by e1, e2."""
    return Fan(2, [(1, 0), (1, 1), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


STANDARD_FANS = {
    "p1": lambda: projective_space(1),
    "p2": lambda: projective_space(2),
    "p3": lambda: projective_space(3),
    "p1xp1": product_p1_p1,
    "f1": lambda: hirzebruch(1),
    "f2": lambda: hirzebruch(2),
    "blowup_p2": blowup_p2_point,
}


def load_fan(source) -> Fan:
    """A fan from a JSON file path, or from one of the names in STANDARD_FANS."""
    if str(source) in STANDARD_FANS and not Path(source).exists():
        return STANDARD_FANS[str(source)]()
    return Fan.load(source)
