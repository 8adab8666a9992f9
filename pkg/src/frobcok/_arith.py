"""Small exact-integer helpers shared by the computational modules."""

from fractions import Fraction
from math import comb, factorial, isqrt


def is_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


def require_prime(p, name="p"):
    if not is_prime(p):
        raise ValueError(f"{name} must be a prime, got {p!r}")


def binom(m, k):
    """C(m, k) with the combinatorial convention: 0 unless 0 <= k <= m."""
    if m < 0 or k < 0 or k > m:
        return 0
    return comb(m, k)


def poly_binom(s, n):
    """The polynomial binomial (s+1)(s+2)...(s+n)/n!, i.e. C(s+n, n) for any integer s.

    Negative values occur for s <= -n-1; it vanishes for -n <= s <= -1.
    """
    num = 1
    for i in range(1, n + 1):
        num *= s + i
    q, r = divmod(num, factorial(n))
    assert r == 0
    return q


def int_det(rows):
    """Determinant of a square integer matrix (fraction-free Bareiss elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(rows):
    """Inverse of a nonsingular square integer matrix as a list of Fraction rows."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
