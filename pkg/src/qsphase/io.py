"""File formats: targets, phases, coefficient dumps, validation reports.

Documents are line-oriented JSON with every float written as a
17-significant-digit decimal, which round-trips doubles bit-faithfully
and keeps the files diff-friendly.  Phase files can also be written as
CSV (index, phase) for plotting.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import DomainError
from .target import ChebyshevTarget, PhaseFactors
from .weiss import WeissResult


def _fmt(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"cannot serialize non-finite value {x}")
    return format(x, ".17g")


def _fmt_list(values) -> str:
    return "[" + ", ".join(_fmt(v) for v in values) + "]"


def dump_target(t: ChebyshevTarget, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("{\n")
        fh.write('  "parity": "even",\n')
        fh.write(f'  "half_degree": {t.half_degree},\n')
        fh.write(f'  "coeffs": {_fmt_list(t.coeffs)},\n')
        fh.write(f'  "eta": {_fmt(t.eta)}\n')
        fh.write("}\n")


def load_target(path) -> ChebyshevTarget:
    with open(path, "r", encoding="ascii") as fh:
        doc = json.load(fh)
    if doc.get("parity") != "even":
        raise DomainError(f"unsupported parity {doc.get('parity')!r}")
    return ChebyshevTarget(
        half_degree=int(doc["half_degree"]),
        coeffs=np.asarray(doc["coeffs"], dtype=float),
        eta=float(doc["eta"]),
    )


def dump_phases(p: PhaseFactors, path, fmt: str = "json") -> None:
    """Write a phase file; meta must carry d, eta, eps and N for JSON."""
    if fmt == "csv":
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write("index,phase\n")
            for k, v in enumerate(p.values):
                fh.write(f"{k},{_fmt(v)}\n")
        return
    if fmt != "json":
        raise DomainError(f"unknown phase format {fmt!r}")
    meta = p.meta
    with open(path, "w", encoding="ascii") as fh:
        fh.write("{\n")
        fh.write(f'  "d": {int(meta["d"])},\n')
        fh.write(f'  "eta": {_fmt(meta["eta"])},\n')
        fh.write(f'  "eps": {_fmt(meta["eps"])},\n')
        fh.write(f'  "N": {int(meta["N"])},\n')
        fh.write(f'  "phases": {_fmt_list(p.values)}\n')
        fh.write("}\n")


def load_phases(path) -> PhaseFactors:
    """Read a phase file in either JSON or CSV form (sniffed by content)."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        values = np.asarray(doc["phases"], dtype=float)
        meta = {key: doc[key] for key in ("d", "eta", "eps", "N") if key in doc}
        if int(meta.get("d", len(values) - 1)) != len(values) - 1:
            raise DomainError("phase file d field disagrees with the list length")
        return PhaseFactors(values, meta)
    rows = [line for line in stripped.splitlines() if line]
    if rows and rows[0].lower().startswith("index"):
        rows = rows[1:]
    values = np.array([float(row.split(",")[1]) for row in rows])
    return PhaseFactors(values, {"d": len(values) - 1})


def dump_coefficients(w: WeissResult, path) -> None:
    """Imaginary parts of the b/a coefficients (real parts projected away)."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write("{\n")
        fh.write('  "k_min": 0,\n')
        fh.write(f'  "k_max": {w.d},\n')
        fh.write(f'  "coeffs_imag": {_fmt_list(w.coeffs.imag)}\n')
        fh.write("}\n")


def dump_validation_report(roundtrip_max_err: float, plancherel_residual: float,
                           nodes: int, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("{\n")
        fh.write(f'  "roundtrip_max_err": {_fmt(roundtrip_max_err)},\n')
        fh.write(f'  "plancherel_residual": {_fmt(plancherel_residual)},\n')
        fh.write(f'  "nodes": {int(nodes)}\n')
        fh.write("}\n")


def write_node_table(path, xs, exact, reconstructed) -> None:
    """Plot-ready CSV with columns x, f(x), Im u_d(x), |diff|."""
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write("x,f,im_u,abs_diff\n")
        for x, f, u in zip(xs, exact, reconstructed):
            fh.write(f"{_fmt(x)},{_fmt(f)},{_fmt(u)},{_fmt(abs(u - f))}\n")
