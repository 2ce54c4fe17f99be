"""Spearman rank correlation with an exact permutation p-value for small n."""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy import stats as _st

EXACT_MAX_N = 10


class DegenerateInput(ValueError):
    pass


def average_ranks(xs: Sequence[float]) -> list[float]:
    """1-based ranks; tied values share the mean of their positions."""
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    ranks = [0.0] * len(xs)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and xs[order[j + 1]] == xs[order[i]]:
            j += 1
        for k in range(i, j + 1):
            ranks[order[k]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def _pearson(a: Sequence[float], b: Sequence[float]) -> float:
    n = len(a)
    ma, mb = sum(a) / n, sum(b) / n
    da = [x - ma for x in a]
    db = [y - mb for y in b]
    num = sum(x * y for x, y in zip(da, db))
    den = math.sqrt(sum(x * x for x in da) * sum(y * y for y in db))
    return num / den


def _exact_pvalue(rx: list[float], ry: list[float]) -> float:
    """Two-sided permutation p-value, enumerating all n! pairings via a subset DP.

    Ranks are doubled so every quantity is an integer; under permutation of
    ``ry`` the statistic is an affine function of S = sum(rx_i * ry_pi(i)).
    """
    n = len(rx)
    x = [int(round(2 * v)) for v in rx]
    y = [int(round(2 * v)) for v in ry]
    sx, sy = sum(x), sum(y)
    observed = abs(n * sum(a * b for a, b in zip(x, y)) - sx * sy)
    top = sum(sorted(x)[i] * sorted(y)[i] for i in range(n))
    width = top + 1
    # dist[mask][s]: number of ways to pair x[0:popcount(mask)] with the y's in mask
    dist = np.zeros((1 << n, width), dtype=np.int64)
    dist[0, 0] = 1
    masks_by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        masks_by_size[bin(mask).count("1")].append(mask)
    for size in range(n):
        xi = x[size]
        for mask in masks_by_size[size]:
            row = dist[mask]
            if not row.any():
                continue
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                shift = xi * y[j]
                dist[mask | bit, shift:] += row[: width - shift]
    final = dist[(1 << n) - 1]
    s_values = np.arange(width, dtype=np.int64)
    extreme = np.abs(n * s_values - sx * sy) >= observed
    return float(final[extreme].sum()) / math.factorial(n)


def spearman(xs: Sequence[float], ys: Sequence[float], method: str = "auto") -> tuple[float, float]:
    """Return (rho, p_value).

    ``method`` is ``"exact"`` (permutation), ``"t"`` (Student t with n-2
    degrees of freedom) or ``"auto"``: exact up to 10 points, t beyond.
    """
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    n = len(xs)
    if n < 3:
        raise ValueError("need at least 3 pairs")
    if len(set(xs)) == 1 or len(set(ys)) == 1:
        raise DegenerateInput("a constant list has no rank correlation")
    rx, ry = average_ranks(list(xs)), average_ranks(list(ys))
    rho = _pearson(rx, ry)
    if rx == ry:
        rho = 1.0
    elif rx == [n + 1 - r for r in ry]:
        rho = -1.0
    rho = max(-1.0, min(1.0, rho))
    if method == "auto":
        method = "exact" if n <= EXACT_MAX_N else "t"
    if method == "exact":
        if n > 12:
            raise ValueError("exact permutation test is limited to n <= 12")
        return rho, _exact_pvalue(rx, ry)
    if method == "t":
        if abs(rho) == 1.0:
            return rho, 0.0
        t = rho * math.sqrt((n - 2) / (1 - rho * rho))
        return rho, float(2 * _st.t.sf(abs(t), n - 2))
    raise ValueError(f"unknown method {method!r}")
