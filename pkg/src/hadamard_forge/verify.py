"""Exact verification with first-failure witnesses.

Row pairs are scanned in lexicographic order ``(i, j)`` with ``i < j``; only
the upper triangle is checked since the Gram matrix is symmetric.  The
witness on a failure is always the first offending pair in that order, no
matter which path (dense or packed) or how many workers ran the scan.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .matrix import PackedMatrix, SignMatrix, pack, packed_dots_after

PACKED_THRESHOLD = 64

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class Witness:
    """First failure found.

    ``kind`` is one of ``"entry"`` (value is the offending entry),
    ``"inner_product"`` (value is the dot product of rows i and j),
    ``"skew"`` (value is ``H[i, j] + H[j, i]``), ``"diagonal"`` or ``"gram"``
    (value is the Gram entry at ``(i, j)``).
    """

    kind: str
    i: int
    j: int
    value: int


@dataclass
class Certificate:
    order: int
    checks: list[str]
    verdict: str
    witness: Witness | None = None
    method: str = "dense"
    elapsed: float = 0.0
    pairs_checked: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        d = asdict(self)
        d["elapsed"] = round(self.elapsed, 6)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        d = dict(d)
        if d.get("witness") is not None:
            d["witness"] = Witness(**d["witness"])
        return cls(**d)

    def summary(self) -> str:
        line = f"{self.verdict} order={self.order} method={self.method} checks={','.join(self.checks)}"
        if self.witness is not None:
            w = self.witness
            line += f" witness={w.kind}({w.i},{w.j})={w.value}"
        return line


def _first_bad_entry(arr: np.ndarray):
    bad = np.argwhere(np.abs(arr) != 1)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        return Witness("entry", i, j, int(arr[i, j]))
    return None


def _dense_first_pair(arr: np.ndarray):
    gram = arr @ arr.T
    bad = np.argwhere(np.triu(gram, 1) != 0)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        return Witness("inner_product", i, j, int(gram[i, j]))
    return None


def _packed_scan(p: PackedMatrix, start: int, stop: int):
    """First failing pair with ``start <= i < stop``."""
    for i in range(start, stop):
        dots = packed_dots_after(p, i)
        nz = np.flatnonzero(dots)
        if nz.size:
            j = i + 1 + int(nz[0])
            return Witness("inner_product", i, j, int(dots[nz[0]]))
    return None


def _packed_first_pair(arr: np.ndarray, workers: int):
    p = pack(arr)
    n = p.n
    if workers <= 1 or n < 2 * workers:
        return _packed_scan(p, 0, n)
    # equal-work chunks: row i costs n - i - 1 pairs
    cum = np.cumsum(np.arange(n - 1, -1, -1))
    total = int(cum[-1])
    cuts = [0] + [int(np.searchsorted(cum, total * k / workers)) for k in range(1, workers)] + [n]
    ranges = [(a, b) for a, b in zip(cuts, cuts[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda r: _packed_scan(p, *r), ranges))
    found = [w for w in results if w is not None]
    # chunks are row-ordered, so the first non-empty chunk holds the global minimum
    return found[0] if found else None


def _pairs_through(n: int, w: Witness | None) -> int:
    """Number of pairs up to and including the witness in canonical order."""
    if w is None:
        return n * (n - 1) // 2
    return w.i * (n - 1) - w.i * (w.i - 1) // 2 + (w.j - w.i)


def is_hadamard(h, *, method: str | None = None, workers: int = 1) -> Certificate:
    """Check that ``h`` is square, +1/-1 valued and has orthogonal rows.

    ``method`` forces ``"dense"`` or ``"packed"``; by default the packed path is
    used from order 64 upward.
    """
    t0 = time.perf_counter()
    arr = h.entries if isinstance(h, SignMatrix) else np.asarray(h, dtype=np.int64)
    rows, cols = arr.shape
    if rows != cols:
        return Certificate(rows, ["square"], FAIL, Witness("shape", rows, cols, 0),
                           elapsed=time.perf_counter() - t0)
    n = rows
    if method is None:
        method = "packed" if n >= PACKED_THRESHOLD else "dense"
    checks = ["entries", "orthogonality"]

    w = _first_bad_entry(arr)
    if w is not None:
        return Certificate(n, checks, FAIL, w, method, time.perf_counter() - t0)

    if method == "dense":
        w = _dense_first_pair(arr)
    elif method == "packed":
        w = _packed_first_pair(arr, workers)
    else:
        raise ValueError(f"unknown method {method!r}")

    verdict = FAIL if w is not None else PASS
    return Certificate(n, checks, verdict, w, method, time.perf_counter() - t0,
                       _pairs_through(n, w))


def is_symmetric(h) -> bool:
    arr = h.entries if isinstance(h, SignMatrix) else np.asarray(h)
    return arr.shape[0] == arr.shape[1] and bool(np.array_equal(arr, arr.T))


def is_skew_hadamard(h, *, method: str | None = None, workers: int = 1) -> Certificate:
    """Hadamard and ``H + H^T = 2I``."""
    cert = is_hadamard(h, method=method, workers=workers)
    cert.checks.append("skew")
    if not cert.passed:
        return cert
    t0 = time.perf_counter()
    arr = h.entries if isinstance(h, SignMatrix) else np.asarray(h, dtype=np.int64)
    n = arr.shape[0]
    resid = arr + arr.T - 2 * np.eye(n, dtype=np.int64)
    bad = np.argwhere(resid != 0)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        cert.verdict = FAIL
        cert.witness = Witness("skew", i, j, int(arr[i, j] + arr[j, i]))
    cert.elapsed += time.perf_counter() - t0
    return cert


def is_conference_core(c, q: int) -> Certificate:
    """Zero diagonal, +1/-1 elsewhere, and ``C C^T = qI - J``."""
    t0 = time.perf_counter()
    arr = c.entries if isinstance(c, SignMatrix) else np.asarray(c, dtype=np.int64)
    checks = ["square", "diagonal", "entries", "gram"]
    if arr.shape != (q, q):
        return Certificate(arr.shape[0], checks, FAIL, Witness("shape", *arr.shape, q),
                           elapsed=time.perf_counter() - t0)
    diag = np.flatnonzero(np.diagonal(arr))
    if diag.size:
        i = int(diag[0])
        return Certificate(q, checks, FAIL, Witness("diagonal", i, i, int(arr[i, i])),
                           elapsed=time.perf_counter() - t0)
    off = arr + np.eye(q, dtype=np.int64)
    w = _first_bad_entry(off)
    if w is not None:
        return Certificate(q, checks, FAIL, w, elapsed=time.perf_counter() - t0)
    gram = arr @ arr.T
    expected = q * np.eye(q, dtype=np.int64) - 1
    bad = np.argwhere(np.triu(gram != expected))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        return Certificate(q, checks, FAIL, Witness("gram", i, j, int(gram[i, j])),
                           elapsed=time.perf_counter() - t0)
    return Certificate(q, checks, PASS, elapsed=time.perf_counter() - t0,
                       pairs_checked=q * (q + 1) // 2)
