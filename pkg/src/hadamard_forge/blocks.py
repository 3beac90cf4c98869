"""2q x 2q block matrices assembled from q x q atoms.

Atoms are ``J`` (all ones), ``P = J - 2I``, ``Q = C + I`` and ``Qt = Q^T``, each
carrying a sign.  A :class:`BlockSpec` is a 2x2 grid of atoms with a canonical
text form such as ``[[+P,+Q],[-Q,+P]]``.

Variant families
----------------
:func:`enumerate_variants` walks a fixed, documented order:

1. outermost, the *shape*: the base grid first, then its swap
   ``[[g01, g00], [-g11, -g10]]`` (this maps ``[[A, B], [-B, A]]`` onto
   ``[[B, A], [-A, B]]``);
2. then cells in row-major order, cell 0 most significant;
3. within a cell, sign varies before the Q/Qt toggle:
   ``(keep, keep), (flip, keep), (keep, toggle), (flip, toggle)``.
   Cells whose base is J or P only have the two sign options.

Index 0 is therefore the base itself.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, replace

import numpy as np

from .errors import SymmetryMismatchError
from .matrix import SignMatrix, all_ones, block, identity, kron
from .seeds import ConferenceMatrix, q_matrix


class Base(enum.Enum):
    J = "J"
    P = "P"
    Q = "Q"
    QT = "Qt"

    def toggled(self) -> Base:
        return {Base.Q: Base.QT, Base.QT: Base.Q}.get(self, self)


@dataclass(frozen=True)
class BlockAtom:
    base: Base
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __str__(self):
        return ("+" if self.sign > 0 else "-") + self.base.value

    def __neg__(self):
        return BlockAtom(self.base, -self.sign)

    @classmethod
    def parse(cls, text: str) -> BlockAtom:
        m = re.fullmatch(r"\s*([+-]?)\s*(Qt|QT|Q|J|P)\s*", text)
        if not m:
            raise ValueError(f"bad block atom {text!r}")
        base = Base.QT if m.group(2).upper() == "QT" else Base(m.group(2))
        return cls(base, -1 if m.group(1) == "-" else 1)


@dataclass(frozen=True)
class BlockSpec:
    """A 2x2 grid of atoms stored row-major as ``(g00, g01, g10, g11)``."""

    grid: tuple[BlockAtom, BlockAtom, BlockAtom, BlockAtom]
    label: str = ""

    def __post_init__(self):
        if len(self.grid) != 4:
            raise ValueError("a block grid has exactly four cells")

    @property
    def text(self) -> str:
        g = [str(a) for a in self.grid]
        return f"[[{g[0]},{g[1]}],[{g[2]},{g[3]}]]"

    def __str__(self):
        return self.text

    def same_grid(self, other: BlockSpec) -> bool:
        return self.grid == other.grid

    def swapped(self) -> BlockSpec:
        g00, g01, g10, g11 = self.grid
        return BlockSpec((g01, g00, -g11, -g10), self.label)

    def relabel(self, label: str) -> BlockSpec:
        return replace(self, label=label)

    @classmethod
    def parse(cls, text: str, label: str = "") -> BlockSpec:
        m = re.fullmatch(r"\s*\[\s*\[(.*?),(.*?)\]\s*,\s*\[(.*?),(.*?)\]\s*\]\s*", text)
        if not m:
            raise ValueError(f"bad block spec {text!r}; expected e.g. [[+P,+Q],[-Q,+P]]")
        return cls(tuple(BlockAtom.parse(x) for x in m.groups()), label or text.strip())


def spec(text: str, label: str = "") -> BlockSpec:
    return BlockSpec.parse(text, label)


def atom_matrix(atom: BlockAtom, c: ConferenceMatrix) -> SignMatrix:
    q = c.q
    if atom.base is Base.J:
        m = all_ones(q)
    elif atom.base is Base.P:
        m = all_ones(q) - 2 * identity(q)
    elif atom.base is Base.Q:
        m = q_matrix(c)
    else:
        m = q_matrix(c).T
    return m if atom.sign > 0 else -m


def realize_block(bs: BlockSpec, c: ConferenceMatrix) -> SignMatrix:
    g = [atom_matrix(a, c) for a in bs.grid]
    out = block([[g[0], g[1]], [g[2], g[3]]])
    # every atom is +1/-1 valued (P has -1 on its diagonal), so the grid is too
    assert out.is_sign(), bs.text
    return out


# -- M ------------------------------------------------------------------------

class MKind(enum.Enum):
    CASE_A = "A"
    CASE_B = "B"


M_CASE_A = BlockSpec.parse("[[+Q,+Q],[+Q,-Q]]", "M-case-A")


def m_case_a(c: ConferenceMatrix, variant: BlockSpec | None = None) -> SignMatrix:
    """``[[Q, Q], [Q, -Q]]`` for a skew-symmetric conference matrix.

    ``M M^T = I_2 (x) (2(q+1)I - 2J)`` relies on ``C + C^T = 0``, so q must be
    3 mod 4.  ``variant`` swaps in a transpose pattern from :func:`m_variants`.
    """
    if not c.is_skew:
        raise SymmetryMismatchError(
            f"case-A M needs a skew-symmetric conference matrix (q = 3 mod 4), got q = {c.q}")
    return realize_block(variant or M_CASE_A, c)


def m_case_b(c: ConferenceMatrix) -> SignMatrix:
    """``[[C+I, -C+I], [-C+I, -C-I]]`` for a symmetric conference matrix."""
    if c.is_skew:
        raise SymmetryMismatchError(
            f"case-B M needs a symmetric conference matrix (q = 1 mod 4), got q = {c.q}")
    cm, i = c.matrix, identity(c.q)
    return block([[cm + i, -cm + i], [-cm + i, -cm - i]])


def m_variants(base: BlockSpec = M_CASE_A) -> list[BlockSpec]:
    """Q/Qt toggles on the Q-type cells of ``base``; signs are kept.

    Cells are toggled in row-major order with cell 0 most significant, so
    the first entry is ``base`` itself.
    """
    options = [
        [a, BlockAtom(a.base.toggled(), a.sign)] if a.base in (Base.Q, Base.QT) else [a]
        for a in base.grid
    ]
    out = []
    for k, cells in enumerate(itertools.product(*options)):
        out.append(BlockSpec(tuple(cells), base.label if k == 0 else f"M-variant-{k}"))
    return out


# -- N ------------------------------------------------------------------------

class NCase(enum.Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"
    IV = "IV"


_PRINTED = {
    NCase.I: "[[+P,+J],[-J,+P]]",
    NCase.II: "[[+J,+Q],[-Q,+J]]",
    NCase.III: "[[+P,+Q],[-Q,+P]]",
    NCase.IV: "[[+P,+P],[+P,-P]]",
}

# (A, B) in N = K2 (x) A + I2 (x) B
_EQ4_AB = {
    NCase.I: (Base.P, Base.J),
    NCase.II: (Base.J, Base.Q),
    NCase.III: (Base.P, Base.Q),
}

# N N^T = I2 (x) (alpha J + beta I); alpha, beta as functions of q
_GRAM_CLAIM = {
    NCase.I: lambda q: (2 * q - 4, 4),
    NCase.II: lambda q: (q - 1, q + 1),
    NCase.III: lambda q: (q - 5, q + 5),
    NCase.IV: lambda q: (2 * q - 8, 8),
}


def n_printed(case: NCase) -> BlockSpec:
    return BlockSpec.parse(_PRINTED[NCase(case)], "printed")


def n_eq4(case: NCase) -> BlockSpec:
    """``K2 (x) A + I2 (x) B = [[B, A], [-A, B]]``."""
    case = NCase(case)
    if case not in _EQ4_AB:
        raise ValueError(f"case {case.value} has no (A, B) form")
    a, b = _EQ4_AB[case]
    return BlockSpec((BlockAtom(b), BlockAtom(a), BlockAtom(a, -1), BlockAtom(b)), "eq4")


def kron_form(a: SignMatrix, b: SignMatrix) -> SignMatrix:
    """``K2 (x) A + I2 (x) B`` for arbitrary square A, B of equal order."""
    k2 = SignMatrix([[0, 1], [-1, 0]])
    return kron(k2, a) + kron(identity(2), b)


def gram_claim_coefficients(case: NCase, q: int) -> tuple[int, int]:
    return _GRAM_CLAIM[NCase(case)](q)


def gram_claim(case: NCase, q: int) -> SignMatrix:
    """The closed form ``I2 (x) (alpha J + beta I)`` claimed for ``N N^T``."""
    alpha, beta = gram_claim_coefficients(case, q)
    inner = alpha * all_ones(q) + beta * identity(q)
    return kron(identity(2), inner)


def gram_residual(n: SignMatrix, case: NCase, q: int) -> SignMatrix:
    return n @ n.T - gram_claim(case, q)


def _cell_options(atom: BlockAtom):
    opts = [atom, -atom]
    if atom.base in (Base.Q, Base.QT):
        t = BlockAtom(atom.base.toggled(), atom.sign)
        opts += [t, -t]
    return opts


def variant_count(base: BlockSpec) -> int:
    return 2 * int(np.prod([len(_cell_options(a)) for a in base.grid]))


def enumerate_variants(base: BlockSpec) -> list[BlockSpec]:
    """All sign / transpose / swap variants of ``base`` in canonical order."""
    out = []
    k = 0
    for shape in (base, base.swapped()):
        for cells in itertools.product(*(_cell_options(a) for a in shape.grid)):
            label = base.label if k == 0 and base.label else f"variant-{k}"
            out.append(BlockSpec(tuple(cells), label))
            k += 1
    return out
