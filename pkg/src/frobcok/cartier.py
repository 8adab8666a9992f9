"""Ranks of the terms in the Cartier exact sequences on a smooth n-fold.

For each i there are short exact sequences

    0 -> B^i -> Z^i -> Omega^i -> 0
    0 -> Z^i -> F_* Omega^i -> B^(i+1) -> 0

and B^0 = 0.  The table is produced by running these forward from i = 0.
"""

from dataclasses import dataclass
from typing import Tuple

from ._arith import binom, require_prime


@dataclass(frozen=True)
class CartierRow:
    i: int
    rank_fstar_omega: int
    rank_Z: int
    rank_B: int


@dataclass(frozen=True)
class CartierRankTable:
    n: int
    p: int
    rows: Tuple[CartierRow, ...]

    @property
    def frobenius_cokernel_rank(self):
        return self.rows[1].rank_B

    def to_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "rows": [
                {"i": r.i, "rank_fstar_omega": r.rank_fstar_omega, "rank_Z": r.rank_Z, "rank_B": r.rank_B}
                for r in self.rows
            ],
        }


def cartier_rank_table(n: int, p: int) -> CartierRankTable:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    require_prime(p)
    q = p ** n
    rows = []
    b = 0
    for i in range(n + 2):
        omega = binom(n, i)
        z = b + omega
        rows.append(CartierRow(i, q * omega, z, b))
        b = q * omega - z
    return CartierRankTable(n, p, tuple(rows))


def verify_cartier_consistency(table: CartierRankTable) -> bool:
    """True iff `table` satisfies every rank relation forced by the two sequences."""
    n, p, rows = table.n, table.p, table.rows
    if n < 1 or len(rows) != n + 2:
        return False
    q = p ** n
    for idx, r in enumerate(rows):
        if r.i != idx:
            return False
        if min(r.rank_fstar_omega, r.rank_Z, r.rank_B) < 0:
            return False
        if r.rank_fstar_omega != q * binom(n, r.i):
            return False
        if r.rank_Z != r.rank_B + binom(n, r.i):
            return False
    if rows[0].rank_B != 0 or rows[-1].rank_B != 0:
        return False
    for r, nxt in zip(rows, rows[1:]):
        if r.rank_fstar_omega != r.rank_Z + nxt.rank_B:
            return False
    # the last row has F_* Omega^(n+1) = 0, so it must have nothing left over
    if rows[-1].rank_fstar_omega != 0 or rows[-1].rank_Z != 0:
        return False
    alt_f = sum((-1) ** r.i * r.rank_fstar_omega for r in rows[:-1])
    alt_zb = sum((-1) ** r.i * (r.rank_Z + nxt.rank_B) for r, nxt in zip(rows, rows[1:]))
    return alt_f == alt_zb
