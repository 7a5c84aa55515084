# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for exact sparse bivariate polynomial arithmetic.

Semantics match _kernels.py exactly: term dicts map (i, j) exponent
tuples to nonzero exact coefficients.  Coefficients and exponents stay
arbitrary-precision Python objects; the speedup comes from running the
dict-merge loops at C level instead of through the bytecode interpreter.
"""

BACKEND = "compiled"


def add_terms(dict a, dict b):
    """Sum of two term dicts; zero coefficients are dropped."""
    cdef dict out = dict(a)
    cdef object key, c, v
    for key, c in b.items():
        v = out.get(key)
        if v is None:
            out[key] = c
        else:
            v = v + c
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def scale_terms(dict a, object c):
    """Term dict scaled by a nonzero coefficient."""
    cdef dict out = {}
    cdef object key, v
    for key, v in a.items():
        out[key] = v * c
    return out


def mul_terms(dict a, dict b):
    """Product of two term dicts; cancellations are dropped."""
    cdef dict out = {}
    cdef dict small, big
    cdef object ka, kb, c1, c2, v, key
    if len(a) > len(b):
        small, big = b, a
    else:
        small, big = a, b
    for ka, c1 in small.items():
        for kb, c2 in big.items():
            key = ((<tuple>ka)[0] + (<tuple>kb)[0],
                   (<tuple>ka)[1] + (<tuple>kb)[1])
            v = out.get(key)
            if v is None:
                out[key] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out
