import pytest
from hypothesis import given, strategies as st

from frobcok.obstruction import (
    RULES,
    CompleteIntersectionInput,
    CurveWitness,
    SubspaceWitness,
    ci_line_exists,
    ci_verdict,
    curve_obstruction,
    fano3_verdict,
    subspace_obstruction,
)
from frobcok.verdict import VerdictValue as V


@pytest.mark.parametrize("deg,expected", [(1, V.NOT_AMPLE), (2, V.NOT_AMPLE), (3, V.UNKNOWN), (-4, V.NOT_AMPLE)])
def test_curve(deg, expected):
    assert curve_obstruction(CurveWitness(deg)).value is expected


@pytest.mark.parametrize("r,deg,expected", [(1, 2, V.NOT_AMPLE), (2, 3, V.NOT_AMPLE), (2, 4, V.UNKNOWN)])
def test_subspace(r, deg, expected):
    assert subspace_obstruction(SubspaceWitness(r, deg)).value is expected


@given(st.integers(-50, 50))
def test_curve_is_subspace_with_r_one(d):
    assert curve_obstruction(CurveWitness(d)).value is subspace_obstruction(SubspaceWitness(1, d)).value


def test_line_counts():
    c = ci_line_exists(3, [3])
    assert c.exists and (c.grassmannian_dim, c.codimension) == (4, 4)
    c = ci_line_exists(5, [2, 2])
    assert c.exists and (c.grassmannian_dim, c.codimension) == (8, 6)
    c = ci_line_exists(3, [2, 2])
    assert not c.exists and c.dim_x == 1


@pytest.mark.parametrize(
    "n,degrees,p,expected",
    [
        (4, (3,), 5, V.NOT_AMPLE),  # cubic threefold, sum = n - 1
        (3, (3,), 2, V.NOT_AMPLE),  # cubic surface, sum = n
        (4, (2,), 3, V.AMPLE),  # quadric threefold, p != 2
        (4, (2,), 2, V.UNKNOWN),
        (6, (2, 2), 3, V.UNKNOWN),  # index 3: nothing applies
        (3, (2,), 3, V.NOT_AMPLE),  # quadric surface, sum = n - 1
        (5, (2, 2), 3, V.NOT_AMPLE),  # sum = n - 1
        (4, (5,), 3, V.NOT_AMPLE),  # not Fano
        (3, (1,), 7, V.AMPLE),  # a plane
        (4, (1, 3), 5, V.NOT_AMPLE),  # a cubic surface in a hyperplane
        (2, (2,), 3, V.UNKNOWN),  # a conic: dimension 1
    ],
)
def test_ci_verdicts(n, degrees, p, expected):
    v = ci_verdict(CompleteIntersectionInput(n, degrees, p))
    assert v.value is expected
    assert v.trace and all(step.rule in RULES for step in v.trace)


@pytest.mark.parametrize("n,degrees,p", [(3, (), 2), (3, (0,), 2), (2, (2, 2), 3), (3, (2,), 4)])
def test_ci_rejects(n, degrees, p):
    with pytest.raises(ValueError):
        CompleteIntersectionInput(n, degrees, p)


@given(
    n=st.integers(2, 12),
    degrees=st.lists(st.integers(1, 6), min_size=1, max_size=5),
    p=st.sampled_from([2, 3, 5, 7]),
)
def test_ci_rule_consistency(n, degrees, p):
    if n - len(degrees) < 1:
        return
    v = ci_verdict(CompleteIntersectionInput(n, tuple(degrees), p))
    real = [d for d in degrees if d >= 2]
    n_red = n - (len(degrees) - len(real))
    if real and sum(real) >= n_red - 1 and n_red - len(real) >= 2:
        assert v.value is not V.AMPLE
    if v.value is V.NOT_AMPLE:
        assert v.trace and v.trace[0].anchor == RULES[v.trace[0].rule]
    assert all(step.rule in RULES for step in v.trace)


@pytest.mark.parametrize(
    "kind,p,expected",
    [("P3", 2, V.AMPLE), ("Quadric", 3, V.AMPLE), ("Quadric", 2, V.UNKNOWN), ("Other", 5, V.NOT_AMPLE)],
)
def test_fano3(kind, p, expected):
    assert fano3_verdict(kind, p).value is expected


@pytest.mark.parametrize("kind", ["P3", "Quadric", "Other"])
def test_fano3_curve_override(kind):
    v = fano3_verdict(kind, 3, CurveWitness(1))
    assert v.value is V.NOT_AMPLE
    assert v.trace[0].rule == "witness_override"
    assert fano3_verdict(kind, 3, CurveWitness(5)).value is fano3_verdict(kind, 3).value


def test_fano3_rejects():
    with pytest.raises(ValueError):
        fano3_verdict("Cubic", 3)
    with pytest.raises(ValueError):
        fano3_verdict("P3", 9)
