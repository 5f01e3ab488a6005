"""Exact permanents and permanental polynomials.

The production path evaluates per(tI - A) at t = 0..n with a Gray-code
inclusion-exclusion kernel and interpolates the coefficients exactly in
integer arithmetic. A factorial-time sum over all permutations serves as
the independent oracle for both the scalar kernel and the polynomial.
"""

from __future__ import annotations

from itertools import permutations

from . import _purepy, backend, poly
from .errors import ArithmeticOverflow, TooLarge
from .graphs import Graph, degrees

NAIVE_MAX = 9
RYSER_MAX = 12
POLY_MAX = 12
SYMBOLIC_MAX = 7

# the compiled kernels accumulate in 128 bits; stay below 2**126 with a
# margin for the interpolation's forward differences (factor <= 2**n)
_ACC_BOUND = 1 << 126
_ENTRY_BOUND = 1 << 62


def _square(matrix) -> int:
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("matrix is not square")
    return k


def permanent_naive(matrix) -> int:
    """Permanent by direct summation over all k! permutations."""
    k = _square(matrix)
    if k > NAIVE_MAX:
        raise TooLarge(f"naive permanent supports k <= {NAIVE_MAX}")
    total = 0
    for sigma in permutations(range(k)):
        p = 1
        for i, j in enumerate(sigma):
            p *= matrix[i][j]
            if p == 0:
                break
        total += p
    return total


def _ryser_fits(matrix) -> bool:
    bound = 1
    big = 0
    for row in matrix:
        s = 0
        for e in row:
            a = -e if e < 0 else e
            s += a
            if a > big:
                big = a
        bound *= max(s, 1)
    return big < _ENTRY_BOUND and bound < _ACC_BOUND


def permanent_ryser(matrix, widened: bool = False) -> int:
    """Permanent via Gray-code inclusion-exclusion, O(2^k * k) ring ops.

    With widened=True, inputs past the 128-bit safety bound fall back to
    arbitrary-precision arithmetic instead of raising.
    """
    k = _square(matrix)
    if k > RYSER_MAX:
        raise TooLarge(f"Ryser kernel supports k <= {RYSER_MAX}")
    flat = [e for row in matrix for e in row]
    if _ryser_fits(matrix):
        return backend.permanent(flat, k)
    if not widened:
        raise ArithmeticOverflow(
            "row-sum product exceeds the 128-bit accumulator; rerun widened")
    return _purepy.permanent(flat, k)


def _poly_fits(g: Graph) -> bool:
    bound = 1
    for d in degrees(g):
        bound *= g.n + d
    return bound << (2 * g.n) < _ACC_BOUND


def perm_poly(g: Graph, widened: bool = False) -> tuple[int, ...]:
    """Monic permanental polynomial of g, coefficients constant-term first."""
    if g.n > POLY_MAX:
        raise TooLarge(f"permanental polynomial supports n <= {POLY_MAX}")
    if not _poly_fits(g):  # unreachable for n <= 12; guards the fixed path
        if not widened:
            raise ArithmeticOverflow("evaluation values exceed the 128-bit accumulator")
        return tuple(_purepy.graph_poly(list(g.rows), g.n, "perm"))
    return tuple(backend.graph_poly(list(g.rows), g.n, "perm"))


def perm_poly_symbolic(g: Graph) -> tuple[int, ...]:
    """Oracle: expand per(xI - A) over all n! permutations with exact
    polynomial arithmetic. Factorial time, so n is capped low."""
    n = g.n
    if n > SYMBOLIC_MAX:
        raise TooLarge(f"symbolic expansion supports n <= {SYMBOLIC_MAX}")
    if n == 0:
        return (1,)
    total = [0] * (n + 1)
    x_factor = (0, 1)
    for sigma in permutations(range(n)):
        term = (1,)
        for i, j in enumerate(sigma):
            if i == j:
                term = poly.mul(term, x_factor)
            elif (g.rows[i] >> j) & 1:
                term = poly.mul(term, (-1,))
            else:
                term = None
                break
        if term is not None:
            for d, c in enumerate(term):
                total[d] += c
    return tuple(total)
