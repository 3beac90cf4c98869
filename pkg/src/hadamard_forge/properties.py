"""Exact identity checks for Q = C + I, J, I and the back-diagonal R."""

from __future__ import annotations

from dataclasses import dataclass

from .field import field_of_order
from .matrix import all_ones, back_diagonal, identity
from .seeds import conference, q_matrix

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    status: str
    note: str = ""


@dataclass
class PropertyReport:
    q: int
    checks: list[IdentityCheck]

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def status(self, name: str) -> str:
        return next(c.status for c in self.checks if c.name == name)

    def lines(self) -> list[str]:
        return [f"{c.status:7s} {c.name}" + (f"  ({c.note})" if c.note else "") for c in self.checks]


def property_suite(q: int) -> PropertyReport:
    c = conference(field_of_order(q))
    Q, J, I, R = q_matrix(c), all_ones(q), identity(q), back_diagonal(q)
    P = J - 2 * I
    cm = c.matrix

    def chk(name, ok):
        return IdentityCheck(name, PASS if ok else FAIL)

    row_sums = cm.entries.sum(axis=1)
    col_sums = cm.entries.sum(axis=0)
    checks = [
        chk("C C^T = qI - J", cm @ cm.T == q * I - J),
        chk("row and column sums of C are 0", not row_sums.any() and not col_sums.any()),
        chk("row and column sums of Q are 1",
            bool((Q.entries.sum(axis=1) == 1).all() and (Q.entries.sum(axis=0) == 1).all())),
        chk("J Q^T = J", J @ Q.T == J),
        chk("Q^T J = J", Q.T @ J == J),
        chk("Q J = J", Q @ J == J),
        chk("J Q = J", J @ Q == J),
        chk("Q (J - 2I) = (J - 2I) Q", Q @ P == P @ Q),
        chk("Q^T (J - 2I) = (J - 2I) Q^T", Q.T @ P == P @ Q.T),
        chk("R^T R = I", R.T @ R == I),
    ]
    if c.circulant:
        QR = Q @ R
        checks.append(chk("Q R symmetric", QR == QR.T))
    else:
        checks.append(IdentityCheck("Q R symmetric", SKIPPED, "conference matrix is not circulant"))
    return PropertyReport(q, checks)
