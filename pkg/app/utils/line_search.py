"""
Golden-Section Line Search
==========================

Derivative-free maximization of a unimodal function on a closed interval.
Used by the optimizer for its coordinate-wise refinement.
"""

import math

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section_max(f, a, b, tol=1e-8):
    """
    Golden-section search for the maximum of f on [a, b].

    Shrinks the bracket until its width is at most tol, then returns the
    best point evaluated, so the endpoints a and b themselves are never
    evaluated here.

    Args:
        f (callable): Objective, float -> float
        a (float): Left bracket edge
        b (float): Right bracket edge
        tol (float): Final bracket width

    Returns:
        tuple: (x_best, f_best)
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc > yd:
        return c, yc
    return d, yd
