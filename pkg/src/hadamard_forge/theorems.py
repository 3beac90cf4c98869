"""Parameter validation, assembly of ``H' = S (x) M + I (x) N`` and variant search.

Four parameter families are supported, named by the CLI ids ``3.1`` to
``3.4``:

====  =========================================  ======  ======
id    conditions                                 M       N
====  =========================================  ======  ======
3.1   q = 1 (mod 4), s = q - 2                   case B  case I
3.2   s = 3 (mod 4), q = 2s + 1                  case A  case II
3.3   q = 3 (mod 8), 2s = q - 5, s = 3 (mod 4)   case A  case III
3.4   s = q - 4 = 3 (mod 4)                      case A  case IV
====  =========================================  ======  ======

In every family the result has order ``2q(s+1)``.  A construction that fails
verification is returned as data with a FAIL certificate; only bad
parameters raise.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .blocks import (
    M_CASE_A,
    BlockSpec,
    MKind,
    NCase,
    enumerate_variants,
    gram_claim,
    m_case_a,
    m_case_b,
    m_variants,
    n_eq4,
    n_printed,
    realize_block,
)
from .errors import CongruenceViolationError, NoSkewSeedError, NotPrimePowerError, ShapeMismatchError
from .field import ELEMENT_ORDER, field_of_order, is_prime, prime_power
from .matrix import SignMatrix, identity, kron
from .seeds import conference, skew_chains, skew_part, skew_provider
from .verify import Certificate, is_hadamard

DEFAULT_BUDGET = 512


class Theorem(enum.Enum):
    T31 = "3.1"
    T32 = "3.2"
    T33 = "3.3"
    T34 = "3.4"

    @property
    def n_case(self) -> NCase:
        return {Theorem.T31: NCase.I, Theorem.T32: NCase.II,
                Theorem.T33: NCase.III, Theorem.T34: NCase.IV}[self]

    @property
    def m_kind(self) -> MKind:
        return MKind.CASE_B if self is Theorem.T31 else MKind.CASE_A

    def s_for(self, q: int) -> int:
        if self is Theorem.T31:
            return q - 2
        if self is Theorem.T32:
            return (q - 1) // 2
        if self is Theorem.T33:
            return (q - 5) // 2
        return q - 4

    @classmethod
    def coerce(cls, value) -> Theorem:
        if isinstance(value, Theorem):
            return value
        key = str(value).strip().upper().lstrip("T").replace(".", "")
        for t in cls:
            if t.value.replace(".", "") == key:
                return t
        raise ValueError(f"unknown theorem {value!r}; expected one of 3.1, 3.2, 3.3, 3.4")


@dataclass(frozen=True)
class ConstructionParams:
    theorem: Theorem
    q: int
    s: int
    order: int
    corollary: bool | None = None  # prime-power refinement, only defined for 3.1 / 3.2

    @property
    def seed_order(self) -> int:
        return self.s + 1


def _twin_prime_note(q):
    for p in range(3, int(q**0.5) + 1, 2):
        if q % p == 0 and q // p == p + 2 and is_prime(p) and is_prime(p + 2):
            return f"q = {p}*{p + 2} is a twin-prime product; twin-prime conference matrices are not implemented"
    return ""


def _require(cond, msg):
    if not cond:
        raise CongruenceViolationError(msg)


def validate_params(theorem, q: int, s: int | None = None) -> ConstructionParams:
    """Check congruences, the prime-power condition and seed availability.

    ``s`` defaults to the value forced by ``q``.
    """
    t = Theorem.coerce(theorem)
    pp = prime_power(q)
    if q < 3 or pp is None or pp[0] == 2:
        raise NotPrimePowerError(q, _twin_prime_note(q))
    if s is None:
        s = t.s_for(q)

    if t is Theorem.T31:
        _require(q % 4 == 1, f"q ≢ 1 (mod 4) (q = {q})")
        _require(s == q - 2, f"s must equal q - 2 = {q - 2}, got {s}")
    elif t is Theorem.T32:
        _require(s % 4 == 3, f"s ≢ 3 (mod 4) (s = {s})")
        _require(q == 2 * s + 1, f"q must equal 2s + 1 = {2 * s + 1}, got {q}")
    elif t is Theorem.T33:
        _require(q % 8 == 3, f"q ≢ 3 (mod 8) (q = {q})")
        _require(2 * s == q - 5, f"2s must equal q - 5 = {q - 5}, got 2s = {2 * s}")
        _require(s % 4 == 3, f"s ≢ 3 (mod 4) (s = {s})")
    else:
        _require(s == q - 4, f"s must equal q - 4 = {q - 4}, got {s}")
        _require(s % 4 == 3, f"s ≢ 3 (mod 4) (s = {s})")

    if s < 1 or not (s + 1 in (1, 2) or skew_chains(s + 1)):
        raise NoSkewSeedError(f"no skew Hadamard seed of order s + 1 = {s + 1}")

    corollary = None
    sp = prime_power(s)
    s_odd_pp = sp is not None and sp[0] != 2
    if t is Theorem.T31:
        corollary = s_odd_pp
    elif t is Theorem.T32:
        corollary = s_odd_pp and s % 4 == 3
    return ConstructionParams(t, q, s, 2 * q * (s + 1), corollary)


def bookkeeping_identities(params: ConstructionParams) -> list[tuple[str, int, int]]:
    """The scalar equalities that close each Gram computation, as (name, lhs, rhs)."""
    q, s, t = params.q, params.s, params.theorem
    n = 2 * q * (s + 1)
    if t is Theorem.T31:
        return [("2s(q+1)+4 = 2q(s+1)", 2 * s * (q + 1) + 4, n), ("2q-4-2s = 0", 2 * q - 4 - 2 * s, 0)]
    if t is Theorem.T32:
        return [("2sq+2s+q+1 = 2q(s+1)", 2 * s * q + 2 * s + q + 1, n), ("q-1-2s = 0", q - 1 - 2 * s, 0)]
    if t is Theorem.T33:
        return [("2s(q+1)+(q+5) = 2q(s+1)", 2 * s * (q + 1) + q + 5, n), ("q-5-2s = 0", q - 5 - 2 * s, 0)]
    return [("2s(q+1)+8 = 2q(s+1)", 2 * s * (q + 1) + 8, n), ("2q-8-2s = 0", 2 * q - 8 - 2 * s, 0)]


def assemble(s_mat: SignMatrix, m: SignMatrix, n: SignMatrix) -> SignMatrix:
    """``S (x) M + I (x) N`` for a zero-diagonal skew S and +1/-1 blocks M, N."""
    k = s_mat.order
    if m.shape != n.shape or m.rows != m.cols:
        raise ShapeMismatchError(f"M {m.shape} and N {n.shape} must be equal square shapes")
    if np.any(np.diagonal(s_mat.entries)) or s_mat.T != -s_mat:
        raise ValueError("S must be skew-symmetric with zero diagonal")
    h = kron(s_mat, m) + kron(identity(k), n)
    if not h.is_sign():
        raise ValueError("assembled matrix has entries outside +1/-1")
    return h


def commutator_residual(m: SignMatrix, n: SignMatrix) -> SignMatrix:
    """``M N^T - N M^T``; the cross terms cancel only when this is zero."""
    return m @ n.T - n @ m.T


@dataclass
class ConstructionResult:
    params: ConstructionParams
    n_spec: BlockSpec
    m_kind: MKind
    m_spec: BlockSpec | None
    seed_provenance: str
    seed_q: int | None
    seed_doublings: int
    certificate: Certificate
    commutator_residual_zero: bool
    gram_residual_zero: bool
    matrix: SignMatrix | None = None
    field_info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.certificate.passed

    @property
    def variant_label(self) -> str:
        m = f"M-{self.m_kind.value}"
        if self.m_spec is not None and self.m_spec.grid != M_CASE_A.grid:
            m += self.m_spec.text
        return f"{self.n_spec.label or self.n_spec.text} / {m}"

    def summary(self) -> str:
        p = self.params
        return (f"T{p.theorem.value} q={p.q} s={p.s} order={p.order} N={self.n_spec.text} "
                f"[{self.n_spec.label}] M={self.m_kind.value}"
                f"{'' if self.m_spec is None else ' ' + self.m_spec.text} "
                f"commutator_zero={self.commutator_residual_zero} "
                f"gram_claim_holds={self.gram_residual_zero} -> {self.certificate.summary()}")


def resolve_variant(theorem, variant) -> BlockSpec:
    """Accept a BlockSpec, ``"printed"``, ``"eq4"`` or a grid text."""
    t = Theorem.coerce(theorem)
    if variant is None or variant == "printed":
        return n_printed(t.n_case)
    if isinstance(variant, BlockSpec):
        return variant
    if variant == "eq4":
        return n_eq4(t.n_case)
    return BlockSpec.parse(variant)


def construct(params: ConstructionParams, variant=None, m_variant: BlockSpec | str | None = None,
              *, workers: int = 1) -> ConstructionResult:
    """Build and fully verify one construction.

    ``variant`` selects N (default: the printed grid); ``m_variant`` is a
    Q/Qt transpose pattern for case-A M.
    """
    t = params.theorem
    fld = field_of_order(params.q)
    c = conference(fld)

    n_spec = resolve_variant(t, variant)
    if isinstance(m_variant, str):
        m_variant = BlockSpec.parse(m_variant)
    if t.m_kind is MKind.CASE_B:
        if m_variant is not None:
            raise ValueError("case-B M has no transpose variants")
        m, m_spec = m_case_b(c), None
    else:
        m_spec = m_variant or M_CASE_A
        m = m_case_a(c, m_spec)
    n = realize_block(n_spec, c)

    seed = skew_provider(params.seed_order)
    s_mat = skew_part(seed)
    h = assemble(s_mat, m, n)

    cert = is_hadamard(h, workers=workers)
    for name, lhs, rhs in bookkeeping_identities(params):
        cert.notes.append(f"{name}: {lhs} = {rhs} {'ok' if lhs == rhs else 'VIOLATED'}")

    comm_zero = not np.any(commutator_residual(m, n).entries)
    gram_zero = (n @ n.T) == gram_claim(t.n_case, params.q)
    info = {"p": fld.p, "r": fld.r, "modulus": list(fld.modulus), "element_order": ELEMENT_ORDER}
    return ConstructionResult(
        params, n_spec, t.m_kind, m_spec, seed.provenance, seed.seed_q, seed.doublings,
        cert, comm_zero, gram_zero, h if cert.passed else None, info,
    )


def n_candidates(theorem) -> list[BlockSpec]:
    """Printed N, the K2 (x) A + I2 (x) B form, then the variant family; duplicates dropped."""
    t = Theorem.coerce(theorem)
    first = [n_printed(t.n_case)]
    if t.n_case is not NCase.IV:
        first.append(n_eq4(t.n_case))
    out, seen = [], set()
    for bs in first + enumerate_variants(first[0]):
        if bs.grid not in seen:
            seen.add(bs.grid)
            out.append(bs)
    return out


@dataclass
class VariantReport:
    params: ConstructionParams
    results: list[ConstructionResult]
    n_family_size: int
    m_family_size: int
    crossed: bool

    @property
    def candidates_total(self) -> int:
        return self.n_family_size * (self.m_family_size if self.crossed else 1)

    @property
    def passes(self) -> list[ConstructionResult]:
        return [r for r in self.results if r.passed]

    @property
    def complete(self) -> bool:
        return len(self.results) == self.candidates_total

    def lines(self) -> list[str]:
        out = [f"{'PASS' if r.passed else 'FAIL'} {r.n_spec.text} M={'B' if r.m_spec is None else r.m_spec.text}"
               f" comm0={int(r.commutator_residual_zero)} gram0={int(r.gram_residual_zero)}"
               + ("" if r.certificate.witness is None else
                  f" witness=({r.certificate.witness.i},{r.certificate.witness.j})={r.certificate.witness.value}")
               for r in self.results]
        p = self.params
        out.append(f"# T{p.theorem.value} q={p.q} s={p.s} order={p.order}: evaluated {len(self.results)}"
                   f" of {self.candidates_total} candidates (N family {self.n_family_size},"
                   f" M crossing {'on' if self.crossed else 'off'}); {len(self.passes)} PASS")
        return out


def _evaluate(params, pairs, workers):
    def run(pair):
        n_spec, m_spec = pair
        return construct(params, n_spec, m_spec)
    if workers <= 1:
        return [run(x) for x in pairs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, pairs))


def scan_variants(params: ConstructionParams, budget: int = DEFAULT_BUDGET, *, workers: int = 1,
                  stop_at_first_pass: bool = False) -> VariantReport:
    """Evaluate candidates in canonical order, up to ``budget`` constructions.

    N candidates come first with the default M.  Only if none of them pass
    (and M has Q cells) is the N family crossed with the M transpose
    variants, M-major.  Output order never depends on ``workers``.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    t = params.theorem
    ns = n_candidates(t)
    ms = m_variants() if t.m_kind is MKind.CASE_A else [None]
    default_m = ms[0]

    results: list[ConstructionResult] = []

    def run_phase(pairs):
        remaining = budget - len(results)
        pairs = pairs[:remaining]
        if stop_at_first_pass:
            step = max(workers, 1)
            for k in range(0, len(pairs), step):
                chunk = _evaluate(params, pairs[k:k + step], workers)
                for r in chunk:
                    results.append(r)
                    if r.passed:
                        return True
            return False
        results.extend(_evaluate(params, pairs, workers))
        return any(r.passed for r in results)

    found = run_phase([(n, default_m) for n in ns])
    crossed = False
    if not found and len(ms) > 1 and len(results) < budget:
        crossed = True
        run_phase([(n, m) for m in ms[1:] for n in ns])
    return VariantReport(params, results, len(ns), len(ms), crossed)


def variant_search(params: ConstructionParams, budget: int = DEFAULT_BUDGET, *,
                   workers: int = 1) -> list[ConstructionResult]:
    """Every PASS plus the first FAIL, in canonical order."""
    report = scan_variants(params, budget, workers=workers)
    out, seen_fail = [], False
    for r in report.results:
        if r.passed:
            out.append(r)
        elif not seen_fail:
            out.append(r)
            seen_fail = True
    return out
