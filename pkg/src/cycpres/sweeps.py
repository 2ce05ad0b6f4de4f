"""Sweep drivers: exhaustive and sampled verification over parameter boxes.

Each function walks a box of tuples, checks one of the package's
classification statements against the exact-determinant oracle, and returns
the violations it found (empty list = statement verified on that box).  The
CLI and the acceptance tests are thin wrappers around these.
"""

from __future__ import annotations

import itertools
import random
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence

from . import classify, poly, prishchepov
from .classify import Verdict
from .poly import IntPoly
from .prishchepov import PrishParams, ReductionError

__all__ = [
    "params_box",
    "theorem_a_violations",
    "corollary_b_disagreements",
    "flip_mismatches",
    "main_lemma_violations",
    "odoni_violations",
    "resultant_symmetry_violations",
    "dual_path_failures",
    "reduction_mismatches",
    "newton_girard_anomalies",
    "open_case_tuples",
    "sample_range",
]


def sample_range(n: int, count: int, seed: int = 20) -> list[int]:
    """Deterministic sample of `count` values from 1..n (all of them if small)."""
    if count >= n:
        return list(range(1, n + 1))
    rng = random.Random(seed * 1_000_003 + n)
    return sorted(rng.sample(range(1, n + 1), count))


def params_box(
    n: int,
    r_values: Optional[Sequence[int]] = None,
    s_values: Optional[Sequence[int]] = None,
    k_values: Optional[Sequence[int]] = None,
    q_values: Optional[Sequence[int]] = None,
) -> Iterator[PrishParams]:
    """All tuples P(r,n,k,s,q) with each parameter in its range (default 1..n)."""
    full = range(1, n + 1)
    for r, s, k, q in itertools.product(
        r_values or full, s_values or full, k_values or full, q_values or full
    ):
        yield PrishParams(r, n, k, s, q)


def theorem_a_violations(
    n_values: Iterable[int],
    q_values: Optional[dict[int, Sequence[int]]] = None,
    s_values: Optional[dict[int, Sequence[int]]] = None,
    include_mirror: bool = False,
) -> list[PrishParams]:
    """Perfect tuples carrying none of the classification congruences.

    The checked disjunction is: type Z, type Z', k = 1, k = 1+q, r = 0, s = 0
    (mod n).  With include_mirror the flip image k = 1-q (mod n) of the
    k = 1+q class is accepted as well; without it the sweep finds exactly the
    perfect tuples with s = r+1 and k = 1-q (mod n), whose flips are obvious
    but which satisfy none of the six congruences themselves.
    """
    bad = []
    for n in n_values:
        qs = (q_values or {}).get(n)
        ss = (s_values or {}).get(n)
        for p in params_box(n, q_values=qs, s_values=ss):
            if not classify.is_perfect(p):
                continue
            flags = classify.type_flags(p)
            ok = flags.type_Ztilde or flags.any_obvious
            if not ok and include_mirror:
                ok = (p.k - 1 + p.q) % n == 0
            if not ok:
                bad.append(p)
    return bad


def corollary_b_disagreements(
    n_values: Iterable[int],
    q_values: Optional[dict[int, Sequence[int]]] = None,
    s_values: Optional[dict[int, Sequence[int]]] = None,
) -> tuple[list[PrishParams], int]:
    """Tuples where the congruence classifier contradicts the determinant.

    Returns (disagreements, number of tuples on which a verdict was rendered).
    """
    bad = []
    decided = 0
    for n in n_values:
        qs = (q_values or {}).get(n)
        ss = (s_values or {}).get(n)
        for p in params_box(n, q_values=qs, s_values=ss):
            verdict = classify.corollary_b_classify(p).verdict
            if verdict is Verdict.INAPPLICABLE:
                continue
            decided += 1
            if (verdict is Verdict.PERFECT) != classify.is_perfect(p):
                bad.append(p)
    return bad, decided


def flip_mismatches(
    n_values: Iterable[int],
    q_values: Optional[dict[int, Sequence[int]]] = None,
    s_values: Optional[dict[int, Sequence[int]]] = None,
) -> list[PrishParams]:
    """Tuples whose flip image has a different determinant magnitude."""
    bad = []
    for n in n_values:
        qs = (q_values or {}).get(n)
        ss = (s_values or {}).get(n)
        for p in params_box(n, q_values=qs, s_values=ss):
            if abs(classify.det_of_params(p)) != abs(
                classify.det_of_params(prishchepov.flip(p))
            ):
                bad.append(p)
    return bad


def main_lemma_violations(n_values: Iterable[int]) -> list[tuple[int, int, int]]:
    """(n, r, k) grids, 2 <= r <= n, 1 <= k <= n, where the symmetry lemma fails."""
    bad = []
    for n in n_values:
        for r in range(2, n + 1):
            for k in range(1, n + 1):
                if not classify.main_lemma_instance(n, r, k):
                    bad.append((n, r, k))
    return bad


def odoni_violations(n_values: Iterable[int]) -> list[tuple[int, int, int]]:
    """(n, r, k) where F(z) is a cyclotomic unit yet no symmetry witness exists."""
    bad = []
    for n in n_values:
        for r in range(2, n + 1):
            for k in range(1, n + 1):
                F = prishchepov.poly_F(r, k)
                if classify.is_unit_at(F, n) and classify.unit_symmetry_search(n, r, k) is None:
                    bad.append((n, r, k))
    return bad


def _reduced_mod_tn(f: IntPoly, n: int) -> IntPoly:
    t_n = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    return poly.reduce_mod(f, t_n)


def resultant_symmetry_violations(n_max: int) -> list[tuple[int, int, int]]:
    """(n, r, k) with |R_n(F)| != |R_n(G)| for 2 <= r, k <= n, n <= n_max.

    F and G are connected by the involution (k,r) -> (r+1, k-1), so the two
    circulant determinants must agree in magnitude.
    """
    bad = []
    for n in range(2, n_max + 1):
        for r in range(2, n + 1):
            for k in range(2, n + 1):
                F = _reduced_mod_tn(prishchepov.poly_F(r, k), n)
                G = _reduced_mod_tn(prishchepov.poly_G(r, k), n)
                if abs(poly.circulant_resultant(F, n)) != abs(poly.circulant_resultant(G, n)):
                    bad.append((n, r, k))
    return bad


def dual_path_failures(
    n_values: Iterable[int], per_n: int, seed: int = 7, coeff_bound: int = 3
) -> list[tuple[int, tuple[int, ...]]]:
    """Random polynomials whose circulant determinant and cyclotomic-norm
    product disagree.  circulant_resultant performs the comparison itself on
    every call; a failure surfaces as its internal-consistency error."""
    bad = []
    for n in n_values:
        rng = random.Random(seed * 99991 + n)
        for _ in range(per_n):
            coeffs = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(n))
            try:
                poly.circulant_resultant(IntPoly(coeffs), n)
            except poly.InternalCheckError:
                bad.append((n, coeffs))
    return bad


def reduction_mismatches(
    n_max: int, r_values: Sequence[int] = (2, 3, 4, 5)
) -> tuple[list[PrishParams], int]:
    """Check |R_n(f)| = |R_N(F_reduced)|^d over all applicable tuples.

    Sweeps every n <= n_max, q <= n and k <= n with k = 1 (mod gcd(n,q)),
    s locked to r-1.  Tuples where the reduction degenerates (N = 1) are
    skipped.  Returns (mismatches, number of tuples checked).
    """
    bad = []
    checked = 0
    for n in range(2, n_max + 1):
        for q in range(1, n + 1):
            d = gcd(n, q)
            if n // d == 1:
                continue
            for k in range(1, n + 1):
                if (k - 1) % d != 0:
                    continue
                for r in r_values:
                    if r < 2:
                        continue
                    p = PrishParams(r, n, k, r - 1, q)
                    try:
                        red = prishchepov.reduce_params(p)
                    except ReductionError:
                        continue
                    checked += 1
                    lhs = abs(classify.det_of_params(p))
                    rhs = abs(classify.det_of_params(red.reduced)) ** red.copies
                    if lhs != rhs:
                        bad.append(p)
    return bad, checked


def newton_girard_anomalies(n: int, ell: int) -> list[tuple[tuple, tuple]]:
    """Distinct size-ell residue multisets sharing all power sums 1..ell.

    Groups every multiset by the exact reduced form of its first ell power
    sums in Z[t]/Phi_n; any group holding two different multisets is a pair
    whose power sums agree while the multisets do not.  Covering all pairs
    this way is exhaustive because power-sum equality is transitive.
    """
    phi = poly.cyclotomic(n)
    buckets: dict[tuple, list[tuple]] = {}
    for ms in itertools.combinations_with_replacement(range(n), ell):
        sig = tuple(
            poly.reduce_mod(classify._power_sum_poly(n, j, ms), phi).coeffs
            for j in range(1, ell + 1)
        )
        buckets.setdefault(sig, []).append(ms)
    return [
        (group[0], other)
        for group in buckets.values()
        if len(group) > 1
        for other in group[1:]
    ]


def open_case_tuples(n: int) -> list[PrishParams]:
    """The q = 1, s = r-1 tuples whose triviality stays open: 2r = 1 (mod n),
    gcd(k-1-r, n) = 1 and 2 < k <= (n+1)/2.  All of them are perfect."""
    if n < 3 or n % 2 == 0:
        raise ValueError("2r = 1 (mod n) needs an odd n >= 3")
    r = (n + 1) // 2
    out = []
    for k in range(3, (n + 1) // 2 + 1):
        if gcd(k - 1 - r, n) == 1:
            out.append(PrishParams(r, n, k, r - 1, 1))
    return out
