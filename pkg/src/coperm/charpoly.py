"""Exact determinants and characteristic polynomials.

Shares the evaluation-interpolation scaffolding with the permanental
side: det(tI - A) at t = 0..n, then exact integer interpolation. The
determinant kernel is fraction-free Bareiss elimination.
"""

from __future__ import annotations

from . import _purepy, backend
from .errors import ArithmeticOverflow, TooLarge
from .graphs import Graph, degrees

DET_MAX = 12
POLY_MAX = 12

_ACC_BOUND = 1 << 120  # Bareiss multiplies two intermediates before dividing
_ENTRY_BOUND = 1 << 58


def _square(matrix) -> int:
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("matrix is not square")
    return k


def _bareiss_fits(matrix) -> bool:
    # squared Hadamard bound on every intermediate minor
    bound = 1
    big = 0
    for row in matrix:
        s = 0
        for e in row:
            s += e * e
            a = -e if e < 0 else e
            if a > big:
                big = a
        bound *= max(s, 1)
    return big < _ENTRY_BOUND and bound < _ACC_BOUND


def determinant_exact(matrix, widened: bool = False) -> int:
    """Determinant via fraction-free elimination in integer arithmetic."""
    k = _square(matrix)
    if k > DET_MAX:
        raise TooLarge(f"determinant kernel supports k <= {DET_MAX}")
    flat = [e for row in matrix for e in row]
    if _bareiss_fits(matrix):
        return backend.determinant(flat, k)
    if not widened:
        raise ArithmeticOverflow(
            "intermediate minors exceed the 128-bit accumulator; rerun widened")
    return _purepy.determinant(flat, k)


def _poly_fits(g: Graph) -> bool:
    bound = 1
    for d in degrees(g):
        bound *= g.n * g.n + d
    return bound << (2 * g.n) < _ACC_BOUND


def char_poly(g: Graph, widened: bool = False) -> tuple[int, ...]:
    """Monic characteristic polynomial of g, coefficients constant-term first."""
    if g.n > POLY_MAX:
        raise TooLarge(f"characteristic polynomial supports n <= {POLY_MAX}")
    if not _poly_fits(g):  # unreachable for n <= 12; guards the fixed path
        if not widened:
            raise ArithmeticOverflow("evaluation values exceed the 128-bit accumulator")
        return tuple(_purepy.graph_poly(list(g.rows), g.n, "char"))
    return tuple(backend.graph_poly(list(g.rows), g.n, "char"))
