"""Simple-graph representation, graph6 codec, and canonical labeling.

A graph is one adjacency bitmask per vertex: bit j of ``rows[i]`` is set
when {i, j} is an edge. Vertex counts are capped at 32 so one row fits a
machine word in the compiled kernels.

The graph6 wire format is the short form only: the byte n+63, then the
upper-triangle bits in column order (1,0), (2,0), (2,1), (3,0), ...
packed big-endian into 6-bit groups, each group offset by 63.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend
from .errors import (
    BadPermutation,
    InvalidChar,
    TooLarge,
    TrailingGarbage,
    TruncatedBody,
)

MAX_VERTICES = 32
CANONICAL_MAX = 10  # backtracking canonical search is exponential past this


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edges(self):
        for i in range(self.n):
            r = self.rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    yield (i, j)
                r >>= 1
                j += 1


def graph_from_edges(n: int, edges) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise TooLarge(f"n={n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"bad edge ({i}, {j}) for n={n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def degrees(g: Graph) -> list[int]:
    return [r.bit_count() for r in g.rows]


def edge_count(g: Graph) -> int:
    """Number of edges: half the total adjacency popcount."""
    return sum(r.bit_count() for r in g.rows) // 2


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r ^ (1 << i)) & full for i, r in enumerate(g.rows)))


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 word (n <= 32, no format header)."""
    if text.startswith(">>graph6<<"):
        raise TrailingGarbage("graph6 format headers are not supported")
    data = text.rstrip("\n")
    if not data:
        raise TruncatedBody("empty graph6 word")
    for ch in data:
        o = ord(ch)
        if o < 63 or o > 126:
            raise InvalidChar(f"byte {o} outside the graph6 range 63..126")
    n = ord(data[0]) - 63
    if n == 63:
        raise TooLarge("multi-byte vertex counts (n > 62) are not supported")
    if n > MAX_VERTICES:
        raise TooLarge(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise TruncatedBody(f"need {need} bit characters for n={n}, got {len(body)}")
    if len(body) > need:
        raise TrailingGarbage(f"{len(body) - need} extra characters after the adjacency bits")

    rows = [0] * n
    i, j = 0, 1
    idx = 0
    for ch in body:
        v = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (v >> shift) & 1
            if idx >= nbits:
                if bit:
                    raise TrailingGarbage("nonzero padding bits")
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode to the short graph6 form with canonical zero padding."""
    if g.n > MAX_VERTICES:
        raise TooLarge(f"n={g.n} exceeds the {MAX_VERTICES}-vertex cap")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.rows[j] >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def adjacency_char_matrix(g: Graph, t: int) -> list[list[int]]:
    """The integer matrix tI - A(G)."""
    return [
        [t if i == j else (-1 if (g.rows[i] >> j) & 1 else 0) for j in range(g.n)]
        for i in range(g.n)
    ]


def permute(g: Graph, sigma) -> Graph:
    """Relabel: edge (i, j) maps to (sigma[i], sigma[j])."""
    sig = list(sigma)
    if sorted(sig) != list(range(g.n)):
        raise BadPermutation(f"not a bijection on 0..{g.n - 1}: {sig}")
    rows = [0] * g.n
    for i, j in g.edges():
        a, b = sig[i], sig[j]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(g.n, tuple(rows))


def canonical_form(g: Graph) -> Graph:
    """The minimum-lex representative of g's isomorphism class."""
    if g.n > CANONICAL_MAX:
        raise TooLarge(f"canonical labeling supports n <= {CANONICAL_MAX}")
    return Graph(g.n, tuple(backend.canonical_form(list(g.rows), g.n)))


def is_canonical(g: Graph) -> bool:
    if g.n > CANONICAL_MAX:
        raise TooLarge(f"canonical labeling supports n <= {CANONICAL_MAX}")
    return backend.is_canonical(list(g.rows), g.n)
