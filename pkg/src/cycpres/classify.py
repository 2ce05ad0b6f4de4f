"""Perfectness classification for P(r,n,k,s,q) and the congruence machinery.

Ground truth throughout is the exact determinant of the circulant relation
matrix: the group is perfect iff |det| = 1, and its abelianization is
infinite iff det = 0.  Everything else in this module is congruence
arithmetic or cyclotomic-unit reasoning layered on top of that oracle:

* type flags: the congruences q(r-s) = 2(k-1) and q(r+s) = 0 (mod n), plus
  the four parameter congruences k=1, k=1+q, r=0, s=0 (mod n) that make
  perfectness obvious when s = r-1;
* a fast classifier that decides perfectness from congruences alone on the
  tuples where the classification theorems apply, and reports itself
  inapplicable elsewhere -- it must agree with the determinant wherever it
  renders a verdict, and the test suite treats any disagreement as a bug;
* the unit-symmetry search: if F(z) is a unit in Z[z] (z a primitive n-th
  root of unity) there are eps in {+1,-1} and j with
  eps * z^j * F(z) = F(1/z); the search finds the witness exhaustively and
  exactly, by divisibility modulo the n-th cyclotomic polynomial;
* a power-sum comparator for multisets of n-th roots of unity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple, Optional

from . import cyclic_words, exact_linear, poly, prishchepov
from .exact_linear import SmithForm
from .poly import IntPoly
from .prishchepov import PrishParams

__all__ = [
    "AbelianReport",
    "TypeFlags",
    "UnitSymmetry",
    "Verdict",
    "CorollaryB",
    "NewtonGirardResult",
    "abelianization",
    "exponent_vector",
    "det_of_params",
    "is_perfect",
    "type_flags",
    "corollary_b_classify",
    "theorem_a_instance",
    "is_unit_at",
    "unit_symmetry_search",
    "main_lemma_instance",
    "newton_girard_check",
]


@dataclass(frozen=True)
class AbelianReport:
    """Determinant, invariant factors and the flags derived from them."""

    det: int
    invariant_factors: SmithForm
    is_perfect: bool
    is_finite_ab: bool


@dataclass(frozen=True)
class TypeFlags:
    type_Z: bool          # q(r-s) = 2(k-1)  (mod n)
    type_Zprime: bool     # q(r+s) = 0       (mod n)
    obvious_k1: bool      # k = 1            (mod n)
    obvious_k1q: bool     # k = 1+q          (mod n)
    obvious_r0: bool      # r = 0            (mod n)
    obvious_s0: bool      # s = 0            (mod n)

    @property
    def type_Ztilde(self) -> bool:
        return self.type_Z or self.type_Zprime

    @property
    def any_obvious(self) -> bool:
        return self.obvious_k1 or self.obvious_k1q or self.obvious_r0 or self.obvious_s0

    def obvious_labels(self) -> list[str]:
        out = []
        if self.obvious_k1:
            out.append("k1")
        if self.obvious_k1q:
            out.append("k1q")
        if self.obvious_r0:
            out.append("r0")
        if self.obvious_s0:
            out.append("s0")
        return out


@dataclass(frozen=True)
class UnitSymmetry:
    """Witness of eps * z^j * F(z) = F(1/z) at the primitive n-th roots z."""

    j: int
    epsilon: int


class Verdict(enum.Enum):
    PERFECT = "perfect"
    NOT_PERFECT = "not-perfect"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class CorollaryB:
    verdict: Verdict
    reason: Optional[str] = None


class NewtonGirardResult(NamedTuple):
    power_sums_equal: bool
    multisets_equal: bool


def exponent_vector(p: PrishParams) -> tuple[int, ...]:
    """Exponent-sum vector of the defining word of p."""
    return cyclic_words.exponent_sums(prishchepov.word_of(p))


@lru_cache(maxsize=1 << 17)
def _det_of_vector(c: tuple[int, ...]) -> int:
    return exact_linear.det(cyclic_words.circulant_of(c))


def det_of_params(p: PrishParams) -> int:
    """Signed determinant of the circulant relation matrix of p."""
    return _det_of_vector(exponent_vector(p))


def abelianization(p: PrishParams) -> AbelianReport:
    """Full abelianization report: determinant, Smith form, perfect/finite flags."""
    c = exponent_vector(p)
    d = _det_of_vector(c)
    snf = exact_linear.smith_normal_form(cyclic_words.circulant_of(c))
    return AbelianReport(
        det=d,
        invariant_factors=snf,
        is_perfect=abs(d) == 1,
        is_finite_ab=d != 0,
    )


def is_perfect(p: PrishParams) -> bool:
    """|det| = 1, decided by the exact circulant determinant."""
    return abs(det_of_params(p)) == 1


def type_flags(p: PrishParams) -> TypeFlags:
    n = p.n
    return TypeFlags(
        type_Z=(p.q * (p.r - p.s) - 2 * (p.k - 1)) % n == 0,
        type_Zprime=(p.q * (p.r + p.s)) % n == 0,
        obvious_k1=(p.k - 1) % n == 0,
        obvious_k1q=(p.k - 1 - p.q) % n == 0,
        obvious_r0=p.r % n == 0,
        obvious_s0=p.s % n == 0,
    )


def corollary_b_classify(p: PrishParams) -> CorollaryB:
    """Fast congruence-only perfectness classifier for gcd(n,6) = 1.

    Hypotheses: r >= s >= 1, gcd(n, k-1, q) = 1 and gcd(n, 6) = 1.  On
    type-Ztilde tuples perfectness is equivalent to

        s = r-1,  gcd(n,q) = 1,  gcd(k-1-qr, n) = 1,

    and a tuple that is neither of type Ztilde nor in an obvious congruence
    class cannot be perfect at all.  Obvious tuples outside type Ztilde are
    reported inapplicable: the three-condition test is wrong there (an
    obvious k=1 tuple with gcd(r,n) > 1 is perfect yet fails the gcd
    condition), and no congruence-only verdict is attempted.
    """
    if gcd(p.n, 6) != 1:
        return CorollaryB(Verdict.INAPPLICABLE, "gcd(n,6) != 1")
    if not p.r >= p.s >= 1:
        return CorollaryB(Verdict.INAPPLICABLE, "requires r >= s >= 1")
    if gcd(gcd(p.n, p.k - 1), p.q) != 1:
        return CorollaryB(Verdict.INAPPLICABLE, "gcd(n,k-1,q) != 1")
    flags = type_flags(p)
    if flags.type_Ztilde:
        conditions = (
            p.s == p.r - 1
            and gcd(p.n, p.q) == 1
            and gcd(p.k - 1 - p.q * p.r, p.n) == 1
        )
        return CorollaryB(Verdict.PERFECT if conditions else Verdict.NOT_PERFECT)
    if flags.any_obvious:
        return CorollaryB(
            Verdict.INAPPLICABLE,
            "obvious congruence outside type Ztilde: " + ",".join(flags.obvious_labels()),
        )
    return CorollaryB(Verdict.NOT_PERFECT)


def theorem_a_instance(p: PrishParams) -> bool:
    """Truth of: perfect implies type Ztilde or an obvious congruence.

    Requires gcd(n, 6) = 1.  Sweeping this over parameter boxes is how the
    classification statement is verified; the sweep drivers report any tuple
    where it comes out False.
    """
    if gcd(p.n, 6) != 1:
        raise ValueError(f"requires gcd(n,6) = 1, got n = {p.n}")
    if not is_perfect(p):
        return True
    flags = type_flags(p)
    return flags.type_Ztilde or flags.any_obvious


def is_unit_at(f: IntPoly, d: int) -> bool:
    """Whether f evaluates to a unit of Z[z_d], z_d a primitive d-th root of 1.

    Decided exactly: |Res(f mod Phi_d, Phi_d)| = 1.  The zero polynomial is
    never a unit, and for d = 1 this is just |f(1)| = 1.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if f.is_zero:
        return False
    phi = poly.cyclotomic(d)
    g = poly.reduce_mod(f, phi)
    if g.is_zero:
        return False
    return abs(poly.resultant(g, phi)) == 1


def _unit_symmetry_condition(n: int, F: IntPoly, j: int, epsilon: int) -> bool:
    # eps * z^j F(z) = F(1/z) at every primitive n-th root z, tested as
    # divisibility by Phi_n of eps*t^(j+D)*F - reversal(F, D), everything
    # first reduced mod t^n - 1.
    D = max(F.degree, 0)
    t_n = IntPoly((-1,) + (0,) * (n - 1) + (1,))  # t^n - 1
    lhs = (F * epsilon).shifted((j + D) % n)
    g = poly.reduce_mod(lhs - poly.reversal(F, D), t_n)
    return poly.reduce_mod(g, poly.cyclotomic(n)).is_zero


def unit_symmetry_search(n: int, r: int, k: int) -> Optional[UnitSymmetry]:
    """Exhaustive search for the unit symmetry of F = poly_F(r, k) at level n.

    Tries eps = +1 then eps = -1, j ascending from 0, and returns the first
    witness so results are reproducible; returns None when no (eps, j) works.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    F = prishchepov.poly_F(r, k)
    for epsilon in (1, -1):
        for j in range(n):
            if _unit_symmetry_condition(n, F, j, epsilon):
                return UnitSymmetry(j=j, epsilon=epsilon)
    return None


def main_lemma_instance(n: int, r: int, k: int) -> bool:
    """Truth of: a unit symmetry with r != 0,1 and k != 1,2 (mod n) forces
    2r = 1 or 2k = 3 (mod n).  Requires gcd(n,6) = 1."""
    if gcd(n, 6) != 1:
        raise ValueError(f"requires gcd(n,6) = 1, got n = {n}")
    if r % n in (0, 1) or k % n in (1, 2):
        return True
    if unit_symmetry_search(n, r, k) is None:
        return True
    return (2 * r - 1) % n == 0 or (2 * k - 3) % n == 0


def _power_sum_poly(n: int, j: int, residues) -> IntPoly:
    c = [0] * n
    for z in residues:
        c[(j * z) % n] += 1
    return IntPoly(tuple(c))


def newton_girard_check(n: int, Z, W) -> NewtonGirardResult:
    """Compare two size-l multisets of residues mod n as root-of-unity multisets.

    power_sums_equal: for every j in 1..l the j-th power sums of the two
    multisets of n-th roots of unity coincide, checked exactly in
    Z[t]/Phi_n.  multisets_equal: the residue multisets themselves coincide.
    Equality of the first l power sums forces multiset equality, so the
    first component can never be True while the second is False; sweeping
    both over all multiset pairs is how that is verified.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    Z = [z % n for z in Z]
    W = [w % n for w in W]
    if len(Z) != len(W) or not Z:
        raise ValueError("multisets must be nonempty and of equal size")
    phi = poly.cyclotomic(n)
    ell = len(Z)
    sums_equal = all(
        poly.reduce_mod(_power_sum_poly(n, j, Z) - _power_sum_poly(n, j, W), phi).is_zero
        for j in range(1, ell + 1)
    )
    return NewtonGirardResult(sums_equal, sorted(Z) == sorted(W))
