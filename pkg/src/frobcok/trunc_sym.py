"""Truncated symmetric powers T^l(V) and the filtration ranks of I/I^[p].

T^l(V) is Sym^l(V) modulo the monomials in which some variable occurs with
exponent >= p, so a basis is the set of exponent vectors in the box
[0, p-1]^c with coordinate sum l.
"""

from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from ._arith import binom, require_prime


@dataclass(frozen=True)
class TruncParams:
    c: int
    p: int
    l: int

    def __post_init__(self):
        require_prime(self.p)
        if self.c < 1:
            raise ValueError(f"c must be >= 1, got {self.c}")
        if self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")


@dataclass(frozen=True)
class FiltrationRankTable:
    c: int
    p: int
    graded_ranks: Tuple[int, ...]
    total_rank: int
    n: Optional[int] = None
    pushforward_rank: Optional[int] = None

    def to_dict(self):
        out = {
            "c": self.c,
            "p": self.p,
            "graded_ranks": list(self.graded_ranks),
            "total_rank": self.total_rank,
        }
        if self.n is not None:
            out["n"] = self.n
            out["pushforward_rank"] = self.pushforward_rank
        return out


def box_count(c, p, l):
    """Number of a in [0, p-1]^c with sum(a) == l, by inclusion-exclusion.

    No validation; `p` may be any positive integer here.
    """
    if l < 0:
        return 0
    return sum(
        (-1) ** j * binom(c, j) * binom(l - j * p + c - 1, c - 1)
        for j in range(min(c, l // p) + 1)
    )


def trunc_dim(params: TruncParams) -> int:
    return box_count(params.c, params.p, params.l)


def enumerate_basis(params: TruncParams) -> List[Tuple[int, ...]]:
    """Exponent vectors of the monomial basis of T^l(V), in lexicographic order."""
    c, p, l = params.c, params.p, params.l
    if l > c * (p - 1):
        return []
    return [a for a in product(range(p), repeat=c) if sum(a) == l]


def filtration_ranks(c: int, p: int, n: Optional[int] = None) -> FiltrationRankTable:
    """Ranks of the graded pieces I^i G / I^(i+1) G of G = I/I^[p].

    The i-th piece (0-based) is T^(i+1) of the conormal bundle, so its rank is
    dim T^(i+1) in c variables. With an ambient dimension `n`, also returns the
    rank p^n - p^(n-c) of the Frobenius pushforward of G.
    """
    require_prime(p)
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    if n is not None and n < c:
        raise ValueError(f"ambient dimension n={n} is smaller than codimension c={c}")
    ranks = tuple(box_count(c, p, l) for l in range(1, c * (p - 1) + 1))
    push = None if n is None else p ** n - p ** (n - c)
    return FiltrationRankTable(c, p, ranks, sum(ranks), n, push)
