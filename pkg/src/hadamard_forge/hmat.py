"""HMAT text matrices and JSON manifests.

An HMAT file looks like::

    HMAT 1
    n 2
    kind hadamard
    ++
    +-

``kind`` is optional and one of ``hadamard``, ``conference`` or ``skew``;
``0`` entries are only legal for ``conference`` (or when ``kind`` is absent).

A manifest records everything needed to rebuild a matrix bit for bit with
the same tool version; :func:`reproduce` does the rebuilding.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import __version__
from .errors import ParseError
from .field import ELEMENT_ORDER, field_of_order
from .matrix import SignMatrix
from .seeds import SkewHadamard, build_chain, conference, skew_provider
from .theorems import ConstructionResult, construct, validate_params

KINDS = ("hadamard", "conference", "skew")
_CHAR = {1: "+", -1: "-", 0: "0"}
_VAL = {"+": 1, "-": -1, "0": 0}

TOOL = "hadamard-forge"


def render(m: SignMatrix, kind: str | None = None) -> str:
    if kind is not None and kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    n = m.order
    arr = m.entries
    if m.max_abs() > 1:
        raise ValueError("only {-1, 0, +1} matrices can be rendered")
    if kind in ("hadamard", "skew") and not m.is_sign():
        raise ValueError(f"a {kind} matrix cannot contain zeros")
    lines = ["HMAT 1", f"n {n}"]
    if kind is not None:
        lines.append(f"kind {kind}")
    lines.extend("".join(_CHAR[int(v)] for v in row) for row in arr)
    return "\n".join(lines) + "\n"


def parse(text: str) -> tuple[SignMatrix, str | None]:
    """Return ``(matrix, kind)``; raises :class:`ParseError` with a line number."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    else:
        raise ParseError("missing trailing newline", len(lines))
    if not lines or lines[0] != "HMAT 1":
        raise ParseError("expected header 'HMAT 1'", 1)
    if len(lines) < 2 or not lines[1].startswith("n "):
        raise ParseError("expected 'n <order>'", 2)
    try:
        n = int(lines[1][2:])
    except ValueError:
        raise ParseError(f"bad order {lines[1][2:]!r}", 2) from None
    if n < 1:
        raise ParseError("order must be positive", 2)
    pos = 2
    kind = None
    if len(lines) > pos and lines[pos].startswith("kind "):
        kind = lines[pos][5:]
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r}", pos + 1)
        pos += 1
    body = lines[pos:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}", pos + min(len(body), n) + 1)
    rows = []
    for k, row in enumerate(body):
        lineno = pos + k + 1
        if len(row) != n:
            raise ParseError(f"row has length {len(row)}, expected {n}", lineno)
        vals = []
        for col, ch in enumerate(row, start=1):
            if ch not in _VAL:
                raise ParseError(f"illegal character {ch!r}", lineno, col)
            if ch == "0" and kind in ("hadamard", "skew"):
                raise ParseError(f"zero entry in a {kind} matrix", lineno, col)
            vals.append(_VAL[ch])
        rows.append(vals)
    return SignMatrix(rows), kind


def write_hmat(path, m: SignMatrix, kind: str | None = None):
    Path(path).write_text(render(m, kind))


def read_hmat(path) -> tuple[SignMatrix, str | None]:
    return parse(Path(path).read_text())


# -- manifests ---------------------------------------------------------------

def _field_block(q):
    f = field_of_order(q)
    return {"p": f.p, "r": f.r, "modulus": list(f.modulus), "element_order": ELEMENT_ORDER}


def _base(construction):
    return {"tool": TOOL, "version": __version__, "construction": construction}


def conference_manifest(q: int) -> dict:
    return _base("conference") | {"q": q, "order": q, "field": _field_block(q)}


def skew_manifest(h: SkewHadamard) -> dict:
    d = _base("skew") | {"order": h.n, "seed_q": h.seed_q, "doublings": h.doublings,
                        "provenance": h.provenance}
    if h.seed_q is not None:
        d["field"] = _field_block(h.seed_q)
    return d


def construction_manifest(r: ConstructionResult) -> dict:
    p = r.params
    return _base("theorem") | {
        "theorem": p.theorem.value,
        "q": p.q,
        "s": p.s,
        "order": p.order,
        "corollary": p.corollary,
        "n_variant": r.n_spec.text,
        "n_label": r.n_spec.label,
        "m_case": r.m_kind.value,
        "m_variant": None if r.m_spec is None else r.m_spec.text,
        "field": r.field_info,
        "seed": {"provenance": r.seed_provenance, "seed_q": r.seed_q, "doublings": r.seed_doublings},
        "commutator_residual_zero": r.commutator_residual_zero,
        "gram_residual_zero": r.gram_residual_zero,
        "certificate": r.certificate.to_dict(),
    }


def dump_manifest(d: dict) -> str:
    return json.dumps(d, indent=2, sort_keys=True) + "\n"


def load_manifest(text: str) -> dict:
    d = json.loads(text)
    if d.get("tool") != TOOL:
        raise ValueError("not a manifest written by this tool")
    return d


def reproduce(manifest: dict) -> tuple[SignMatrix, str]:
    """Rebuild the matrix a manifest describes; returns ``(matrix, kind)``."""
    kind = manifest["construction"]
    if kind == "conference":
        return conference(field_of_order(manifest["q"])).matrix, "conference"
    if kind == "skew":
        if manifest["seed_q"] is None:
            return skew_provider(manifest["order"]).matrix, "skew"
        return build_chain(manifest["seed_q"], manifest["doublings"]).matrix, "skew"
    if kind == "theorem":
        params = validate_params(manifest["theorem"], manifest["q"], manifest["s"])
        r = construct(params, manifest["n_variant"], manifest["m_variant"])
        if r.matrix is None:
            raise ValueError(f"manifest describes a construction that does not verify: {r.summary()}")
        return r.matrix, "hadamard"
    raise ValueError(f"unknown construction {kind!r}")
