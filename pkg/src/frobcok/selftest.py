"""Oracle suite behind `frobcok selftest`.

Each check compares a fast path against an independent computation (brute
force enumeration, a recursion, or a stated closed value) and is exact.
"""

import time
from collections import Counter
from dataclasses import dataclass
from itertools import product

from . import bott, cartier, obstruction, projective, toric, trunc_sym
from .verdict import Positivity, VerdictValue


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "budget_seconds": self.budget,
        }


def _box_points(c, p, l):
    return sum(1 for a in product(range(p), repeat=c) if sum(a) == l)


def check_trunc_box():
    bad = []
    for c in range(1, 5):
        for p in (2, 3, 5):
            top = c * (p - 1)
            dims = [trunc_sym.trunc_dim(trunc_sym.TruncParams(c, p, l)) for l in range(top + 2)]
            if sum(dims) != p ** c or dims[top] != 1 or dims[top + 1] != 0:
                bad.append((c, p))
            for l in range(top + 2):
                basis = trunc_sym.enumerate_basis(trunc_sym.TruncParams(c, p, l))
                if len(basis) != dims[l] or dims[l] != _box_points(c, p, l):
                    bad.append((c, p, l))
    return not bad, f"mismatches: {bad}" if bad else "c<=4, p in {2,3,5}"


def check_cartier():
    bad = []
    for n in range(1, 6):
        for p in (2, 3, 5, 7):
            t = cartier.cartier_rank_table(n, p)
            oracle = sum(1 for _ in product(range(p), repeat=n)) - 1
            if not cartier.verify_cartier_consistency(t) or t.frobenius_cokernel_rank != oracle:
                bad.append((n, p))
    return not bad, f"mismatches: {bad}" if bad else "n<=5, p in {2,3,5,7}"


def _toric_twists(n, p, d):
    fan = toric.projective_space(n)
    last = n  # index of the ray -e1-...-en
    twists = Counter()
    for coeffs, mult in toric.frobenius_pushforward(fan, (0,) * n + (d,), p).summands:
        t = sum(coeffs)
        ref = [0] * (n + 1)
        ref[last] = t
        if not toric.linearly_equivalent(fan, coeffs, ref):
            return None
        twists[t] += mult
    return twists


def check_toric_pn():
    bad = []
    for n in (1, 2, 3):
        for p in (2, 3, 5):
            if _toric_twists(n, p, 0) != Counter(projective.fstar_decompose_pn(n, p, 0).summands):
                bad.append((n, p))
    return not bad, f"mismatches: {bad}" if bad else "n in {1,2,3}, p in {2,3,5}"


def check_toric_verdicts():
    bad = []
    for name in ("p1", "p2", "p3"):
        for p in (2, 3, 5):
            if toric.bx_dual_ample(toric.STANDARD_FANS[name](), p).value is not VerdictValue.AMPLE:
                bad.append((name, p))
    for name in ("p1xp1", "f1", "f2", "blowup_p2"):
        for p in (2, 3):
            if toric.bx_dual_ample(toric.STANDARD_FANS[name](), p).value is not VerdictValue.NOT_AMPLE:
                bad.append((name, p))
    return not bad, f"wrong verdicts: {bad}" if bad else "P^1..P^3 Ample; P1xP1, F1, F2, Bl_pt P^2 NotAmple"


def check_pn_thresholds():
    bad = []
    for n in (1, 2, 3):
        for p in (2, 3, 5, 7):
            top = (n + 1) * (p - 1)
            scan = projective.threshold_scan(n, p, range(-p - 2, top + p + 3))
            if p > n and scan.min_nef_d != n * (p - 1):
                bad.append(("nef", n, p, scan.min_nef_d))
            for d in range(-p - 2, top + 1):
                if projective.fstar_positivity(n, p, d) is Positivity.AMPLE:
                    bad.append(("ample", n, p, d))
    return not bad, f"violations: {bad}" if bad else "min nef d = n(p-1) for p > n; no Ample for d <= (n+1)(p-1)"


def check_bott():
    bad = []
    for n in range(1, 6):
        for k in range(n + 1):
            for t in range(-12, 13):
                if bott.euler_char_from_bott(n, k, t) != bott.euler_char(n, k, t):
                    bad.append(("chi", n, k, t))
                for i in range(n + 1):
                    h = bott.bott_dim(bott.BottQuery(n, k, t, i))
                    if h != bott.bott_dim(bott.BottQuery(n, n - k, -t, n - i)):
                        bad.append(("serre", n, k, t, i))
    for n in range(1, 7):
        for k in range(n + 1):
            if not bott.cm_regular(n, k).regular:
                bad.append(("regularity", n, k))
    return not bad, f"violations: {bad[:10]}" if bad else "Euler recursion, Serre duality, (k+1)-regularity"


def check_obstructions():
    V = VerdictValue
    CI = obstruction.CompleteIntersectionInput
    cases = [
        ("cubic surface", obstruction.ci_verdict(CI(3, (3,), 5)).value, V.NOT_AMPLE),
        ("cubic threefold", obstruction.ci_verdict(CI(4, (3,), 5)).value, V.NOT_AMPLE),
        ("quadric threefold p=3", obstruction.fano3_verdict("Quadric", 3).value, V.AMPLE),
        ("quadric threefold p=2", obstruction.fano3_verdict("Quadric", 2).value, V.UNKNOWN),
        ("P^3", obstruction.fano3_verdict("P3", 2).value, V.AMPLE),
        ("other Fano threefold", obstruction.fano3_verdict("Other", 5).value, V.NOT_AMPLE),
    ]
    bad = [(name, got.value) for name, got, want in cases if got is not want]
    return not bad, f"wrong verdicts: {bad}" if bad else "all six verdicts reproduced"


def check_duality():
    bad = []
    for n in (1, 2, 3):
        for p in (2, 3, 5):
            for d in range(-5, 16):
                lhs = sorted(-m for m in projective.fstar_decompose_pn(n, p, d).twists())
                rhs = projective.fstar_decompose_pn(n, p, (n + 1) * (p - 1) - d).twists()
                if lhs != rhs:
                    bad.append((n, p, d))
    return not bad, f"mismatches: {bad}" if bad else "n<=3, p<=5, d in [-5,15]"


CHECKS = [
    ("1 truncated-power box identity", check_trunc_box, 1.0),
    ("2 Cartier ranks", check_cartier, 1.0),
    ("3 toric / P^n oracle agreement", check_toric_pn, 5.0),
    ("4 toric B_X^dual verdicts", check_toric_verdicts, 5.0),
    ("5 F_*O(d) thresholds", check_pn_thresholds, 10.0),
    ("6 Bott oracle gate", check_bott, 10.0),
    ("7 obstruction verdicts", check_obstructions, 1.0),
    ("8 duality twist multisets", check_duality, 5.0),
]


def run_all():
    results = []
    for name, fn, budget in CHECKS:
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, reported like any other
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        results.append(CheckResult(name, ok and elapsed < budget, detail, elapsed, budget))
    return results
