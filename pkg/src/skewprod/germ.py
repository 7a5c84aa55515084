"""Skew-product germs f(z, w) = (p(z), q(z, w)) and their exact iteration.

The oracle computes f^n = (p^n, Q^n) by brute-force symbolic
composition: Q^{k+1}(z, w) = q(p^k(z), Q^k(z, w)).  Substitution is
Horner-style in the w-variable, so the number of multiplications by the
large iterate Q^k is bounded by the w-degree of q.
"""

from __future__ import annotations

from .poly import (
    ResourceLimits,
    SparsePoly2,
    format_poly,
    parse_poly,
    poly_mul,
    poly_pow,
)


class InvalidGermError(ValueError):
    """The pair (p, q) does not define a skew-product germ fixing 0."""


class GermFileError(ValueError):
    """Malformed germ file."""


class SkewGerm:
    """A validated pair (p, q) with p(0) = 0, q(0, 0) = 0.

    Caches delta (the order of p) and a_delta (its lowest coefficient).
    Instances are immutable and safe to share.
    """

    __slots__ = ("p", "q", "delta", "a_delta")

    def __init__(self, p: SparsePoly2, q: SparsePoly2):
        if p.is_zero or q.is_zero:
            raise InvalidGermError("p and q must be nonzero")
        if not p.depends_only_on_z():
            raise InvalidGermError("p must depend only on z")
        if any(i + j < 1 for i, j in p.support()) or any(
                i + j < 1 for i, j in q.support()):
            raise InvalidGermError("constant term: the germ must fix the origin")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        delta = min(i for i, _ in p.support())
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "a_delta", p.coeff(delta, 0))

    def __setattr__(self, name, value):
        raise AttributeError("SkewGerm is immutable")

    def __eq__(self, other):
        if not isinstance(other, SkewGerm):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"SkewGerm(p={format_poly(self.p)}, q={format_poly(self.q)})"


def _eval_univariate_at(coeffs_by_i: dict, P: SparsePoly2,
                        limits: ResourceLimits | None) -> SparsePoly2:
    # Horner over descending z-exponent with gap powers of P.
    acc = SparsePoly2.zero()
    prev_i = None
    for i in sorted(coeffs_by_i, reverse=True):
        c = SparsePoly2.constant(coeffs_by_i[i])
        if prev_i is None:
            acc = c
        else:
            acc = poly_mul(acc, poly_pow(P, prev_i - i, limits), limits) + c
        prev_i = i
    if prev_i:
        acc = poly_mul(acc, poly_pow(P, prev_i, limits), limits)
    return acc


def substitute(poly: SparsePoly2, P: SparsePoly2, W: SparsePoly2,
               limits: ResourceLimits | None = None) -> SparsePoly2:
    """Exact value of poly(P, W), Horner in the w-variable."""
    if poly.is_zero:
        return SparsePoly2.zero()
    by_j: dict = {}
    for (i, j), c in poly.items():
        by_j.setdefault(j, {})[i] = c
    acc = SparsePoly2.zero()
    prev_j = None
    for j in sorted(by_j, reverse=True):
        layer = _eval_univariate_at(by_j[j], P, limits)
        if prev_j is None:
            acc = layer
        else:
            acc = poly_mul(acc, poly_pow(W, prev_j - j, limits), limits) + layer
        prev_j = j
    if prev_j:
        acc = poly_mul(acc, poly_pow(W, prev_j, limits), limits)
    return acc


def compose_germ(g: SkewGerm, h: SkewGerm,
                 limits: ResourceLimits | None = None) -> SkewGerm:
    """The composite germ g(h(z, w))."""
    p_new = substitute(g.p, h.p, SparsePoly2.zero(), limits)
    q_new = substitute(g.q, h.p, h.q, limits)
    return SkewGerm(p_new, q_new)


def iterate_germ(f: SkewGerm, n: int,
                 limits: ResourceLimits | None = None) -> SkewGerm:
    """f^n = (p^n, Q^n) for n >= 1 by exact composition."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    cur = f
    for _ in range(n - 1):
        cur = compose_germ(f, cur, limits)
    return cur


def iterates(f: SkewGerm, n_max: int, limits: ResourceLimits | None = None):
    """Yield (n, f^n) for n = 1 .. n_max, computing incrementally."""
    cur = f
    yield 1, cur
    for n in range(2, n_max + 1):
        cur = compose_germ(f, cur, limits)
        yield n, cur


# -- germ files ---------------------------------------------------------


def parse_germ_file(text: str) -> SkewGerm:
    """Parse a germ file: one `p = ...` and one `q = ...` assignment.

    Order-insensitive; `#` starts a comment.
    """
    exprs: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, rhs = line.partition("=")
        name = name.strip()
        if not sep or name not in ("p", "q"):
            raise GermFileError(
                f"line {lineno}: expected 'p = ...' or 'q = ...'")
        if name in exprs:
            raise GermFileError(f"line {lineno}: duplicate assignment to {name}")
        exprs[name] = (lineno, rhs.strip())
    for required in ("p", "q"):
        if required not in exprs:
            raise GermFileError(f"missing assignment for {required}")
    lineno, p_src = exprs["p"]
    try:
        p = parse_poly(p_src, allowed_vars=("z",))
    except ValueError as exc:
        raise GermFileError(f"line {lineno}: p: {exc}") from exc
    lineno, q_src = exprs["q"]
    try:
        q = parse_poly(q_src, allowed_vars=("z", "w"))
    except ValueError as exc:
        raise GermFileError(f"line {lineno}: q: {exc}") from exc
    return SkewGerm(p, q)


def format_germ_file(f: SkewGerm) -> str:
    return f"p = {format_poly(f.p)}\nq = {format_poly(f.q)}\n"
