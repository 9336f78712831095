"""Detection of positive weights making polynomials weighted-homogeneous."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .poly import Polynomial


def _is_homogeneous_for(weights: Sequence[int], polys: Sequence[Polynomial]) -> bool:
    for p in polys:
        degs = {sum(w * a for w, a in zip(weights, e)) for e in p.terms}
        if len(degs) > 1:
            return False
    return True


def weighted_degree(p: Polynomial, weights: Sequence[int]) -> int:
    return max(sum(w * a for w, a in zip(weights, e)) for e in p.terms)


def find_positive_weights(polys: Sequence[Polynomial]) -> tuple[int, ...] | None:
    """Positive integer weights w with every p weighted-homogeneous, else None.

    The linear program proposes a candidate; the answer is always verified
    exactly, so a float failure can only produce a false ``None``.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return None
    n = polys[0].ring.n
    ones = (1,) * n
    if _is_homogeneous_for(ones, polys):
        return ones
    rows = []
    for p in polys:
        exps = list(p.terms)
        for e in exps[1:]:
            rows.append([a - b for a, b in zip(e, exps[0])])
    if not rows:
        return ones
    import numpy as np
    from scipy.optimize import linprog

    # minimize sum(w) subject to A w = 0, w >= 1
    A = np.array(rows, dtype=float)
    res = linprog(np.ones(n), A_eq=A, b_eq=np.zeros(len(rows)), bounds=[(1, None)] * n, method="highs")
    if not res.success:
        return None
    fr = [Fraction(float(v)).limit_denominator(1000) for v in res.x]
    den = lcm(*(f.denominator for f in fr))
    w = [int(f * den) for f in fr]
    if min(w) <= 0:
        return None
    g = reduce(gcd, w)
    w = tuple(v // g for v in w)
    return w if _is_homogeneous_for(w, polys) else None
