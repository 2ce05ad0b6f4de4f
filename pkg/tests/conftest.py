"""Shared oracles and session-wide sweep fixtures.

The oracles here are deliberately naive and independent of the library's
algorithms: cofactor expansion for determinants, gcds of k x k minors for
Smith invariant factors.  They are what the fast implementations are judged
against.
"""

from __future__ import annotations

import itertools
from math import gcd

import pytest

from cycpres import classify, sweeps


def det_cofactor(rows) -> int:
    """Determinant by recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        a = rows[0][j]
        if a:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * a * det_cofactor(minor)
    return total


def snf_minors_gcd(rows) -> tuple[int, ...]:
    """Invariant factors as successive quotients of k x k minor gcds."""
    m, n = len(rows), len(rows[0])
    bound = min(m, n)
    out: list[int] = []
    prev = 1
    for k in range(1, bound + 1):
        g = 0
        for rsel in itertools.combinations(range(m), k):
            for csel in itertools.combinations(range(n), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = gcd(g, det_cofactor(sub))
        if g == 0:
            out.extend([0] * (bound - len(out)))
            return tuple(out)
        out.append(g // prev)
        prev = g
    return tuple(out)


@pytest.fixture(scope="session")
def sweep_small():
    """|det| for every tuple with n in {5, 7, 11, 13} and 1 <= r,s,k,q <= n."""
    table: dict[tuple[int, int, int, int, int], int] = {}
    for n in (5, 7, 11, 13):
        for p in sweeps.params_box(n):
            table[p.key()] = abs(classify.det_of_params(p))
    return table


@pytest.fixture(scope="session")
def sweep_sampled_large():
    """|det| over full (r, k) boxes with deterministically sampled (s, q) for
    n in {25, 35}; returns (table, q_samples, s_samples)."""
    q_samples = {25: sweeps.sample_range(25, 4, seed=20), 35: sweeps.sample_range(35, 3, seed=20)}
    s_samples = {25: sweeps.sample_range(25, 4, seed=21), 35: sweeps.sample_range(35, 3, seed=21)}
    table: dict[tuple[int, int, int, int, int], int] = {}
    for n in (25, 35):
        for p in sweeps.params_box(n, s_values=s_samples[n], q_values=q_samples[n]):
            table[p.key()] = abs(classify.det_of_params(p))
    return table, q_samples, s_samples
