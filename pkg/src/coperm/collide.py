"""Polynomial fingerprints, family grouping, and census statistics.

Graphs sharing a polynomial are collected into families keyed by a
canonical byte encoding of the coefficient vector. Shards never mix
(n, m), which keeps grouping embarrassingly parallel: two graphs with a
different edge count cannot share a polynomial, since the x^(n-2)
coefficient is m on the permanental side and -m on the characteristic
side.

Fingerprint layout (bit-exact): u8 n, u16 little-endian m, then the
coefficients c_(n-2) down to c_0 (c_n and c_(n-1) are omitted, always 1
and 0), each as a sign byte (0x00 nonnegative, 0x01 negative), a u8
magnitude length L, and L little-endian magnitude bytes, minimal L.
"""

from __future__ import annotations

import heapq
import struct
from contextlib import ExitStack
from dataclasses import dataclass

from .errors import (
    DegreeMismatch,
    DuplicateMember,
    MixedN,
    RunFormatError,
    ShardViolation,
    UnsortedRun,
)

RUN_MAGIC = b"CPRM"
RUN_VERSION = 1
_HEADER = struct.Struct("<4sHBHQ")  # magic, version, n, m, record count


def fingerprint(p, n: int, m: int, kind: str | None = "perm") -> bytes:
    """Canonical bytes for a monic degree-n graph polynomial.

    kind selects the x^(n-2) consistency check (m for "perm", -m for
    "char"); pass None to skip it.
    """
    if len(p) != n + 1 or p[n] != 1:
        raise DegreeMismatch(f"expected a monic polynomial of degree {n}")
    if n >= 1 and p[n - 1] != 0:
        raise DegreeMismatch("x^(n-1) coefficient must vanish for a graph polynomial")
    if n >= 2 and kind is not None:
        want = m if kind == "perm" else -m
        if p[n - 2] != want:
            raise DegreeMismatch(
                f"x^(n-2) coefficient {p[n - 2]} disagrees with m={m} ({kind})")
    out = bytearray()
    out.append(n)
    out += m.to_bytes(2, "little")
    for j in range(n - 2, -1, -1):
        c = p[j]
        mag = -c if c < 0 else c
        blen = (mag.bit_length() + 7) // 8
        out.append(1 if c < 0 else 0)
        out.append(blen)
        out += mag.to_bytes(blen, "little")
    return bytes(out)


def fingerprint_parts(fp: bytes) -> tuple[int, int, bytes]:
    """Split a fingerprint into (n, m, coefficient body)."""
    return fp[0], int.from_bytes(fp[1:3], "little"), fp[3:]


def poly_from_fingerprint(fp: bytes) -> tuple[int, ...]:
    """Inverse codec: reconstruct the full coefficient vector."""
    n, _, body = fingerprint_parts(fp)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    pos = 0
    for j in range(n - 2, -1, -1):
        sign, blen = body[pos], body[pos + 1]
        pos += 2
        mag = int.from_bytes(body[pos:pos + blen], "little")
        pos += blen
        coeffs[j] = -mag if sign else mag
    if pos != len(body):
        raise DegreeMismatch("fingerprint body has trailing bytes")
    return tuple(coeffs)


@dataclass(frozen=True)
class FamilyRecord:
    """All graphs sharing one polynomial, graph6 members sorted."""

    fingerprint: bytes
    members: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ShardStats:
    n: int
    m: int | None  # None for a per-n aggregate
    graphs: int
    distinct_polys: int
    with_mate: int
    max_family: int


def _family(fp: bytes, members) -> FamilyRecord:
    ms = sorted(members)
    for a, b in zip(ms, ms[1:]):
        if a == b:
            raise DuplicateMember(f"graph {a!r} appears twice within one shard")
    return FamilyRecord(fp, tuple(ms))


def group_families(records) -> list[FamilyRecord]:
    """Group (fingerprint, graph6) records of one shard into families.

    Order-insensitive: the same input multiset yields the same output,
    sorted by fingerprint bytes.
    """
    shard = None
    groups: dict[bytes, list[str]] = {}
    for fp, g6 in records:
        key = fp[:3]
        if shard is None:
            shard = key
        elif key != shard:
            got = (fp[0], int.from_bytes(fp[1:3], "little"))
            want = (shard[0], int.from_bytes(shard[1:3], "little"))
            raise ShardViolation(f"mixed shards: record for (n, m)={got}, shard is {want}")
        groups.setdefault(fp, []).append(g6)
    return [_family(fp, groups[fp]) for fp in sorted(groups)]


def shard_stats(families, n: int | None = None, m: int | None = None) -> ShardStats:
    """Counting columns of one census row from its families."""
    if families:
        fn, fm, _ = fingerprint_parts(families[0].fingerprint)
        n = fn if n is None else n
        m = fm if m is None else m
    elif n is None or m is None:
        raise ValueError("empty shard needs explicit n and m")
    graphs = sum(f.size for f in families)
    with_mate = sum(f.size for f in families if f.size >= 2)
    max_family = max((f.size for f in families), default=0)
    return ShardStats(n, m, graphs, len(families), with_mate, max_family)


def aggregate(stats_list) -> ShardStats:
    """Fold per-m shard stats into the per-n row.

    Sound because polynomials in different m shards can never collide,
    so distinct counts add up and max_family is a plain maximum.
    """
    stats_list = list(stats_list)
    ns = {s.n for s in stats_list}
    if len(ns) != 1:
        raise MixedN(f"aggregate over mixed vertex counts {sorted(ns)}")
    return ShardStats(
        n=ns.pop(),
        m=None,
        graphs=sum(s.graphs for s in stats_list),
        distinct_polys=sum(s.distinct_polys for s in stats_list),
        with_mate=sum(s.with_mate for s in stats_list),
        max_family=max((s.max_family for s in stats_list), default=0),
    )


def persist_fingerprints(records, path, n: int, m: int) -> int:
    """Write one shard's (fingerprint, graph6) records as a sorted run file.

    Returns the record count. The on-disk format is the header (magic,
    version u16, n u8, m u16, count u64) followed by records of
    fingerprint bytes, u8 graph6 length, graph6 bytes.
    """
    recs = sorted(records)
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(RUN_MAGIC, RUN_VERSION, n, m, len(recs)))
        for fp, g6 in recs:
            if fp[:3] != bytes([n]) + m.to_bytes(2, "little"):
                raise ShardViolation(
                    f"record for shard {fingerprint_parts(fp)[:2]} in run (n={n}, m={m})")
            raw = g6.encode("ascii")
            fh.write(fp)
            fh.write(bytes([len(raw)]))
            fh.write(raw)
    return len(recs)


def read_run_header(path) -> tuple[int, int, int]:
    """(n, m, record count) of a run file; raises RunFormatError if corrupt."""
    with open(path, "rb") as fh:
        raw = fh.read(_HEADER.size)
    if len(raw) != _HEADER.size:
        raise RunFormatError(f"{path}: short header")
    magic, version, n, m, count = _HEADER.unpack(raw)
    if magic != RUN_MAGIC:
        raise RunFormatError(f"{path}: bad magic {magic!r}")
    if version != RUN_VERSION:
        raise RunFormatError(f"{path}: unsupported version {version}")
    return n, m, count


def _read_exact(fh, size, path):
    raw = fh.read(size)
    if len(raw) != size:
        raise RunFormatError(f"{path}: truncated record")
    return raw


def _iter_run(fh, path):
    magic, version, n, m, count = _HEADER.unpack(_read_exact(fh, _HEADER.size, path))
    prev = None
    for _ in range(count):
        head = _read_exact(fh, 3, path)
        fp = bytearray(head)
        ncoef = max(head[0] - 1, 0)
        for _ in range(ncoef):
            pair = _read_exact(fh, 2, path)
            fp += pair
            fp += _read_exact(fh, pair[1], path)
        g6len = _read_exact(fh, 1, path)[0]
        g6 = _read_exact(fh, g6len, path).decode("ascii")
        fp = bytes(fp)
        if prev is not None and fp < prev:
            raise UnsortedRun(f"{path}: records out of order")
        prev = fp
        yield fp, g6
    if fh.read(1):
        raise RunFormatError(f"{path}: trailing bytes after {count} records")


def merge_sorted_runs(paths):
    """K-way merge of sorted run files into one globally sorted record stream.

    All runs must belong to the same (n, m) shard.
    """
    paths = list(paths)
    if not paths:
        return
    shard = None
    for p in paths:
        n, m, _ = read_run_header(p)
        if shard is None:
            shard = (n, m)
        elif shard != (n, m):
            raise ShardViolation(f"run {p} is shard {(n, m)}, expected {shard}")
    with ExitStack() as stack:
        streams = [_iter_run(stack.enter_context(open(p, "rb")), p) for p in paths]
        yield from heapq.merge(*streams)


def group_sorted(records):
    """Streaming grouper over a fingerprint-sorted record stream.

    Yields the same FamilyRecords, in the same order, as group_families
    applied to the whole multiset.
    """
    shard = None
    cur = None
    members: list[str] = []
    for fp, g6 in records:
        key = fp[:3]
        if shard is None:
            shard = key
        elif key != shard:
            raise ShardViolation("mixed shards in sorted stream")
        if fp != cur:
            if cur is not None:
                if fp < cur:
                    raise UnsortedRun("record stream is not sorted")
                yield _family(cur, members)
            cur = fp
            members = []
        members.append(g6)
    if cur is not None:
        yield _family(cur, members)
