"""Which orders 4t the constructions here actually reach.

A route is listed only after its matrix has been built and verified: seed
routes through the self-checking seed constructors, theorem routes through
:func:`~hadamard_forge.theorems.scan_variants` stopping at the first PASS.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import HadamardError
from .field import prime_power
from .seeds import build_chain
from .theorems import DEFAULT_BUDGET, ConstructionParams, Theorem, scan_variants, validate_params


@dataclass(frozen=True)
class CatalogEntry:
    order: int
    route: str  # "paley", "doubling" or a theorem id such as "3.1"
    q: int
    s: int | None = None
    corollary: bool | None = None
    seed_provenance: str = ""
    variant: str = ""

    def describe(self) -> str:
        if self.route in ("paley", "doubling"):
            return self.seed_provenance
        text = f"T{self.route}(q={self.q},s={self.s})"
        if self.variant and self.variant != "printed":
            text += f" {self.variant}"
        return text

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class CoverageRow:
    t: int
    order: int
    routes: list[CatalogEntry] = field(default_factory=list)

    @property
    def reached(self) -> bool:
        return bool(self.routes)


def enumerate_params(theorem, max_order: int) -> list[ConstructionParams]:
    """Every valid parameter set of ``theorem`` with order at most ``max_order``."""
    t = Theorem.coerce(theorem)
    out = []
    q = 3
    # order 2q(s+1) grows with q in every family
    while True:
        s = t.s_for(q)
        if s >= 0 and 2 * q * (s + 1) > max_order:
            break
        try:
            out.append(validate_params(t, q))
        except HadamardError:
            pass
        q += 2
    return sorted(out, key=lambda p: (p.order, p.q))


def seed_routes(max_order: int) -> list[CatalogEntry]:
    out = []
    for q in range(3, max_order, 4):
        pp = prime_power(q)
        if pp is None:
            continue
        k = 0
        while (q + 1) << k <= max_order:
            h = build_chain(q, k)
            out.append(CatalogEntry(h.n, "paley" if k == 0 else "doubling", q,
                                    seed_provenance=h.provenance))
            k += 1
    return sorted(out, key=lambda e: (e.order, e.q))


def _theorem_route(params: ConstructionParams, budget: int) -> CatalogEntry | None:
    report = scan_variants(params, budget, stop_at_first_pass=True)
    if not report.passes:
        return None
    r = report.passes[0]
    variant = r.n_spec.label if r.n_spec.label in ("printed", "eq4") else f"N={r.n_spec.text}"
    if r.m_spec is not None and r.m_spec.label != "M-case-A":
        variant += f" M={r.m_spec.text}"
    return CatalogEntry(params.order, params.theorem.value, params.q, params.s,
                        params.corollary, r.seed_provenance, variant)


def theorem_routes(max_order: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[CatalogEntry]:
    params = [p for t in Theorem for p in enumerate_params(t, max_order)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(lambda p: _theorem_route(p, budget), params))
    else:
        found = [_theorem_route(p, budget) for p in params]
    return sorted((e for e in found if e is not None), key=lambda e: (e.order, e.route, e.q))


def coverage(max_t: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[CoverageRow]:
    max_order = 4 * max_t
    rows = {t: CoverageRow(t, 4 * t) for t in range(1, max_t + 1)}
    for e in seed_routes(max_order) + theorem_routes(max_order, budget, workers):
        rows[e.order // 4].routes.append(e)
    for row in rows.values():
        # direct Paley, then doubling chains, then theorem routes
        rank = {"paley": 0, "doubling": 1}
        row.routes.sort(key=lambda e: (rank.get(e.route, 2), e.route, e.q))
    return [rows[t] for t in sorted(rows)]


def render_coverage(rows: list[CoverageRow], reached_only: bool = False) -> str:
    lines = [f"{'order':>6}  {'t':>4}  routes"]
    for row in rows:
        if reached_only and not row.reached:
            continue
        routes = ", ".join(e.describe() for e in row.routes) if row.routes else "unreached"
        lines.append(f"{row.order:>6}  {row.t:>4}  {routes}")
    reached = sum(r.reached for r in rows)
    lines.append(f"# {reached} of {len(rows)} orders 4t reached")
    return "\n".join(lines) + "\n"
