"""Pure-Python kernels for exact sparse bivariate polynomial arithmetic.

A polynomial is a dict mapping exponent pairs (i, j) to nonzero exact
coefficients (int or Fraction).  These three functions are the hot
loops of the iteration oracle; _speedups.pyx holds a compiled version
with identical semantics and the poly module picks one at import time.

All arithmetic goes through the coefficient objects themselves, so
exactness and arbitrary precision are preserved by construction.
"""

BACKEND = "pure"


def add_terms(a, b):
    """Sum of two term dicts; zero coefficients are dropped."""
    out = dict(a)
    get = out.get
    for key, c in b.items():
        v = get(key)
        if v is None:
            out[key] = c
        else:
            v = v + c
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def scale_terms(a, c):
    """Term dict scaled by a nonzero coefficient."""
    return {key: v * c for key, v in a.items()}


def mul_terms(a, b):
    """Product of two term dicts; cancellations are dropped."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            v = get(key)
            if v is None:
                out[key] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out
