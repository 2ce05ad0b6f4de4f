"""The five-parameter family P(r, n, k, s, q) of cyclically presented groups.

P(r,n,k,s,q) is the cyclically presented group on n generators whose defining
word is a positive run x_0 x_q x_2q ... of length r followed by the inverse of
the run x_{k-1} x_{k-1+q} ... of length s (indices mod n).  The family covers
several classical constructions:

    Fibonacci groups        F(2,n)  = P(2,n,3,1,1)
    Gilbert-Howie groups    H(n,m)  = P(2,n,2,1,m)
    Sieradski groups        S(r,n)  = P(r,n,2,r-1,2)
    the groups              H(r,n,s) = P(r,n,r+1,s,1)

Besides the defining word this module owns the parameter algebra: the
polynomials carrying the abelianization, the (k,r) involution, the flip
isomorphism P(r,n,k,s,q) ~ P(s,n,n-k+2,r,q), and the gcd(n,q) normalization
that rewrites a group as a free product of d copies of a q=1 instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclic_words import CyclicWord
from .poly import IntPoly

__all__ = [
    "PrishParams",
    "Reduction",
    "ReductionError",
    "word_of",
    "poly_general",
    "poly_F",
    "poly_G",
    "involution",
    "flip",
    "reduce_params",
]


@dataclass(frozen=True, order=True)
class PrishParams:
    """Parameter tuple (r, n, k, s, q); all positive, n at least 2.

    Parameters are stored as given, possibly exceeding n; congruence
    predicates and word construction reduce mod n where appropriate.
    """

    r: int
    n: int
    k: int
    s: int
    q: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        for name in ("r", "k", "s", "q"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")

    def key(self) -> tuple[int, int, int, int, int]:
        return (self.r, self.n, self.k, self.s, self.q)

    def __str__(self) -> str:
        return f"P({self.r},{self.n},{self.k},{self.s},{self.q})"


class ReductionError(ValueError):
    """The gcd(n,q) normalization does not apply to this tuple."""


@dataclass(frozen=True)
class Reduction:
    """Normalization data for P(r,n,k,s,q) ~ free product of d copies.

    With d = gcd(n,q), n = d*N, q = d*Q and k-1 = d*(Kprime-1), the group is
    a free product of d copies of P(r, N, K, r-1, 1) where K is determined by
    Qhat, the inverse of Q mod N:  K = Qhat*(Kprime-1) + 1 (mod N), kept in
    [1, N].
    """

    d: int
    N: int
    Q: int
    Qhat: int
    Kprime: int
    K: int
    copies: int
    reduced: PrishParams


def word_of(p: PrishParams) -> CyclicWord:
    """The defining word of P(r,n,k,s,q) as an actual relator.

    The inverse block is emitted in reversed order with exponent -1 per
    letter, i.e. the genuine group inverse of the positive run, not just an
    abelianized shadow of it.
    """
    n = p.n
    letters = [((i * p.q) % n, 1) for i in range(p.r)]
    letters.extend(((p.k - 1 + i * p.q) % n, -1) for i in range(p.s - 1, -1, -1))
    return CyclicWord(n, tuple(letters))


def poly_general(p: PrishParams) -> IntPoly:
    """sum_{i<r} t^(qi) - t^(k-1) sum_{i<s} t^(qi), exponents unreduced.

    Reducing this mod t^n - 1 recovers the representer polynomial of the
    exponent-sum vector of word_of(p).
    """
    top = max((p.r - 1) * p.q, p.k - 1 + (p.s - 1) * p.q)
    c = [0] * (top + 1)
    for i in range(p.r):
        c[i * p.q] += 1
    for i in range(p.s):
        c[p.k - 1 + i * p.q] -= 1
    return IntPoly(tuple(c))


def poly_F(r: int, k: int) -> IntPoly:
    """sum_{i<r} t^i - t^(k-1) sum_{i<r-1} t^i for the normalized family
    P(r, n, k, r-1, 1); requires r >= 2."""
    if r < 2:
        raise ValueError("poly_F requires r >= 2")
    if k < 1:
        raise ValueError("poly_F requires k >= 1")
    top = max(r - 1, k + r - 3)
    c = [0] * (top + 1)
    for i in range(r):
        c[i] += 1
    for i in range(r - 1):
        c[k - 1 + i] -= 1
    return IntPoly(tuple(c))


def poly_G(r: int, k: int) -> IntPoly:
    """sum_{i<k-1} t^i - t^r sum_{i<k-2} t^i; requires k >= 2.

    This is poly_F transported along the involution (k, r) -> (r+1, k-1):
    poly_G(r, k) == poly_F(k-1, r+1) identically.
    """
    if k < 2:
        raise ValueError("poly_G requires k >= 2")
    if r < 1:
        raise ValueError("poly_G requires r >= 1")
    top = max(k - 2, r + k - 3, 0)
    c = [0] * (top + 1)
    for i in range(k - 1):
        c[i] += 1
    for i in range(k - 2):
        c[r + i] -= 1
    return IntPoly(tuple(c))


def involution(k: int, r: int) -> tuple[int, int]:
    """(k, r) -> (r+1, k-1); applying it twice gives back the input."""
    return (r + 1, k - 1)


def flip(p: PrishParams) -> PrishParams:
    """The isomorphic tuple P(s, n, n-k+2, r, q), k-slot normalized to [1, n]."""
    k_new = (p.n - p.k + 1) % p.n + 1
    return PrishParams(p.s, p.n, k_new, p.r, p.q)


def reduce_params(p: PrishParams) -> Reduction:
    """Normalize away q: P(r,n,k,s,q) as d = gcd(n,q) copies of a q=1 tuple.

    Preconditions: s = r-1 (the shape in which the free-product decomposition
    is asserted) and k = 1 (mod d).  N = n/d must exceed 1, otherwise the
    reduced presentation would have a single generator.
    """
    if p.s != p.r - 1:
        raise ReductionError(f"reduction requires s = r-1, got r={p.r}, s={p.s}")
    d = gcd(p.n, p.q)
    if (p.k - 1) % d != 0:
        raise ReductionError(f"reduction requires k = 1 (mod gcd(n,q)={d}), got k={p.k}")
    N = p.n // d
    if N == 1:
        raise ReductionError("degenerate reduction: n = gcd(n,q) would leave one generator")
    Q = p.q // d
    Qhat = pow(Q, -1, N)  # in [1, N) since N > 1
    Kprime = (p.k - 1) // d + 1
    K = (Qhat * (Kprime - 1)) % N + 1
    reduced = PrishParams(p.r, N, K, p.r - 1, 1)
    return Reduction(d=d, N=N, Q=Q, Qhat=Qhat, Kprime=Kprime, K=K, copies=d, reduced=reduced)
