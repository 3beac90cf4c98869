"""Conference matrices, Paley skew Hadamard seeds and the doubling step.

Every constructor re-verifies its output and raises
:class:`~hadamard_forge.errors.ConstructionError` if the check fails.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstructionError,
    EvenCharacteristicError,
    NotSkewHadamardError,
    UnreachableError,
    WrongResidueError,
)
from .field import PrimePowerField, field_of_order, prime_power
from .matrix import SignMatrix, identity
from .verify import is_conference_core, is_skew_hadamard, is_symmetric


class Symmetry(enum.Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew-symmetric"


@dataclass(frozen=True)
class ConferenceMatrix:
    q: int
    matrix: SignMatrix
    symmetry: Symmetry
    circulant: bool
    field: PrimePowerField

    @property
    def is_skew(self) -> bool:
        return self.symmetry is Symmetry.SKEW


@dataclass(frozen=True)
class SkewHadamard:
    """A skew Hadamard matrix with its construction chain.

    ``seed_q`` is the Paley parameter at the root of the chain, or None when
    the root is the trivial order 1 or 2 or a matrix supplied by the caller.
    """

    n: int
    matrix: SignMatrix
    seed_q: int | None
    doublings: int = 0

    @property
    def provenance(self) -> str:
        if self.seed_q is not None:
            root = f"Paley(q={self.seed_q})"
        else:
            n0 = self.n >> self.doublings
            root = f"trivial(n={n0})" if n0 in _TRIVIAL else f"external(n={n0})"
        return "double(" * self.doublings + root + ")" * self.doublings


def is_circulant(m: SignMatrix) -> bool:
    a = m.entries
    return all(np.array_equal(a[i], np.roll(a[0], i)) for i in range(1, a.shape[0]))


@functools.lru_cache(maxsize=64)
def conference(f: PrimePowerField) -> ConferenceMatrix:
    """``C[i, j] = chi(alpha_j - alpha_i)`` in the field's canonical order."""
    if f.p == 2:
        raise EvenCharacteristicError()
    idx = np.arange(f.q)
    diff = f.sub(idx[None, :], idx[:, None])
    c = SignMatrix(f.character(diff))
    cert = is_conference_core(c, f.q)
    if not cert.passed:
        raise ConstructionError(f"conference matrix for {f!r} failed: {cert.summary()}")
    symmetry = Symmetry.SYMMETRIC if is_symmetric(c) else Symmetry.SKEW
    expected = Symmetry.SYMMETRIC if f.q % 4 == 1 else Symmetry.SKEW
    if symmetry is not expected or (symmetry is Symmetry.SKEW and c.T != -c):
        raise ConstructionError(f"conference matrix for {f!r} has unexpected symmetry")
    return ConferenceMatrix(f.q, c, symmetry, is_circulant(c), f)


def conference_of_order(q: int) -> ConferenceMatrix:
    return conference(field_of_order(q))


def q_matrix(c: ConferenceMatrix) -> SignMatrix:
    """``C + I``: a +1/-1 matrix with every row and column summing to 1."""
    return c.matrix + identity(c.q)


def _checked_skew(h: SkewHadamard) -> SkewHadamard:
    cert = is_skew_hadamard(h.matrix)
    if not cert.passed:
        raise ConstructionError(f"{h.provenance} is not skew Hadamard: {cert.summary()}")
    return h


@functools.lru_cache(maxsize=64)
def paley_skew_hadamard(f: PrimePowerField) -> SkewHadamard:
    """Order q+1 skew Hadamard matrix ``I + S`` bordering the conference matrix.

    The border is +1 along the first row and -1 down the first column, which
    keeps ``S`` skew-symmetric.
    """
    if f.q % 4 != 3:
        raise WrongResidueError(f"Paley skew seed needs q = 3 (mod 4), got q = {f.q}")
    c = conference(f).matrix.entries
    n = f.q + 1
    s = np.zeros((n, n), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = c
    h = SignMatrix(s + np.eye(n, dtype=np.int64))
    return _checked_skew(SkewHadamard(n, h, f.q))


def skew_double(h: SkewHadamard) -> SkewHadamard:
    """``[[S+I, S+I], [S-I, -S+I]]`` from ``H = S + I``."""
    cert = is_skew_hadamard(h.matrix)
    if not cert.passed:
        raise NotSkewHadamardError(f"input is not skew Hadamard: {cert.summary()}")
    n = h.n
    s = h.matrix.entries - np.eye(n, dtype=np.int64)
    i = np.eye(n, dtype=np.int64)
    out = np.block([[s + i, s + i], [s - i, -s + i]])
    return _checked_skew(SkewHadamard(2 * n, SignMatrix(out), h.seed_q, h.doublings + 1))


def skew_part(h: SkewHadamard) -> SignMatrix:
    """``S = H - I``; skew-symmetric with ``S S^T = (n-1) I``."""
    return h.matrix - identity(h.n)


_TRIVIAL = {
    1: SignMatrix([[1]]),
    2: SignMatrix([[1, 1], [-1, 1]]),
}


def skew_chains(order: int) -> list[tuple[int, int]]:
    """All ``(paley_q, doublings)`` pairs that reach ``order``, fewest doublings first."""
    chains = []
    m, k = order, 0
    while m >= 4 and m % 4 == 0:
        pp = prime_power(m - 1)
        if pp is not None and pp[0] != 2:
            chains.append((m - 1, k))
        m, k = m // 2, k + 1
    return chains


def _attempts(order: int) -> list[str]:
    out = []
    m, k = order, 0
    if order % 4:
        return [f"{order} is not 1, 2 or a multiple of 4"]
    while m >= 4 and m % 4 == 0:
        prefix = f"double^{k} " if k else ""
        out.append(f"{prefix}Paley(q={m - 1}): {m - 1} is not an odd prime power")
        m, k = m // 2, k + 1
    out.append(f"stopped at {m}: not a multiple of 4")
    return out


@functools.lru_cache(maxsize=256)
def build_chain(seed_q: int, doublings: int) -> SkewHadamard:
    h = paley_skew_hadamard(field_of_order(seed_q))
    for _ in range(doublings):
        h = skew_double(h)
    return h


def skew_provider(order: int) -> SkewHadamard:
    """Resolve a skew Hadamard matrix of the given order.

    Direct Paley is preferred, then the chain with the fewest doublings.
    """
    if order in _TRIVIAL:
        return SkewHadamard(order, _TRIVIAL[order], None)
    chains = skew_chains(order) if order > 0 else []
    if not chains:
        raise UnreachableError(order, _attempts(order) if order > 0 else [])
    return build_chain(*chains[0])


def paley_of_order(q: int) -> SkewHadamard:
    return paley_skew_hadamard(field_of_order(q))
