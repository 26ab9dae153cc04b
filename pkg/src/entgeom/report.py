"""Report documents: building, machine serialization and text rendering."""

from __future__ import annotations

import json
import math
from importlib import resources
from typing import Any

import numpy as np

from .core import DEFAULT_TOL, PureState, Tolerances, as_bipartition, single_party_splits
from .entropy import entanglement_entropy
from .geometry import (
    concurrence_purity,
    concurrence_wedge,
    polygon_check,
    schmidt_coefficients,
    three_qubit_identity_residual,
)
from .parser import format_state
from .teleport import TeleportResult

SCHEMA_VERSION = 1
MACHINE_DIGITS = 17
TEXT_DIGITS = 7


def load_schema() -> dict:
    return json.loads(resources.files("entgeom").joinpath("report.schema.json").read_text())


# --- analyses -----------------------------------------------------------------


def state_echo(state: PureState) -> dict:
    return {"dims": list(state.dims), "ket": format_state(state, digits=MACHINE_DIGITS)}


def eval_results(state: PureState, splits=None, base=2, tol: Tolerances = DEFAULT_TOL) -> dict:
    """Per-split concurrences (both routes), Schmidt coefficients and entropies.

    ``splits`` defaults to every single-party split; a one-party state has none.
    """
    if splits:
        splits = [as_bipartition(s, state.n_parties) for s in splits]
    else:
        splits = single_party_splits(state.n_parties) if state.n_parties > 1 else []
    rows = []
    for split in splits:
        c_w = concurrence_wedge(state, split)
        c_p = concurrence_purity(state, split)
        rows.append(
            {
                "split": split.label(),
                "c_wedge": c_w,
                "c_purity": c_p,
                "discrepancy": abs(c_w - c_p),
                "schmidt": [float(x) for x in schmidt_coefficients(state, split)],
                "entropy": entanglement_entropy(state, split.focus, base, tol),
            }
        )
    everyone = list(range(state.n_parties))
    return {"splits": rows, "full_entropy": entanglement_entropy(state, everyone, base, tol)}


def polygon_results(state: PureState) -> dict:
    rep = polygon_check(state)
    out = {
        "concurrences": list(rep.concurrences),
        "linear_slacks": list(rep.linear_slacks),
        "squared_slacks": list(rep.squared_slacks),
        "identity": None,
    }
    if state.dims == (2, 2, 2):
        lhs, rhs = three_qubit_identity_residual(state)
        out["identity"] = {"lhs": lhs, "rhs": rhs, "residual": lhs - rhs}
    return out


def teleport_results(result: TeleportResult, decoupled: bool) -> dict:
    rows = []
    for t in result.transcripts:
        rows.append(
            {
                "outcome": t.outcome_name,
                "index": t.outcome,
                "probability": t.probability,
                "correction": t.correction_name,
                "bob_state": None if t.bob_state is None else [[float(z.real), float(z.imag)] for z in t.bob_state.amps],
                "fidelity": t.fidelity,
            }
        )
    return {"transcripts": rows, "average_fidelity": result.average_fidelity, "decoupled": decoupled}


def document(command: str, input_echo: dict, options: dict, results: dict) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, "input": input_echo, "options": options, "results": results}


# --- machine serialization ------------------------------------------------------


def _number(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    s = format(x, f".{MACHINE_DIGITS}g")
    return "0" if s == "-0" else s


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written to 17 significant digits.

    Output is deterministic: dict order is insertion order and nothing
    depends on the environment.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _number(float(obj))
    return json.dumps(obj)


# --- text rendering ---------------------------------------------------------------


def fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, complex):
        sign = "-" if x.imag < 0 else "+"
        return f"{fmt(x.real)}{sign}{fmt(abs(x.imag))}i"
    if isinstance(x, float):
        s = format(x, f".{TEXT_DIGITS}g")
        return "0" if s == "-0" else s
    return str(x)


def _fmt_list(xs) -> str:
    return "(" + ", ".join(fmt(x) for x in xs) + ")"


def render_text(doc: dict) -> str:
    cmd, res = doc["command"], doc["results"]
    lines = []
    echo = doc["input"]
    if "ket" in echo:
        lines.append(f"state  {format_state_text(echo)}   dims={echo['dims']}")
    if cmd in ("eval", "catalog-show"):
        if cmd == "catalog-show":
            lines.insert(0, f"name   {res['name']}")
            res = res["eval"]
        for row in res["splits"]:
            lines.append(
                f"split {row['split']:<8} C_wedge={fmt(row['c_wedge'])}  C_purity={fmt(row['c_purity'])}  "
                f"disc={fmt(row['discrepancy'])}  S={fmt(row['entropy'])}  schmidt={_fmt_list(row['schmidt'])}"
            )
        lines.append(f"full-state entropy {fmt(res['full_entropy'])}")
    elif cmd == "polygon":
        lines.append(f"concurrences   {_fmt_list(res['concurrences'])}")
        lines.append(f"linear slacks  {_fmt_list(res['linear_slacks'])}")
        lines.append(f"squared slacks {_fmt_list(res['squared_slacks'])}")
        if res["identity"] is not None:
            ident = res["identity"]
            lines.append(f"identity lhs={fmt(ident['lhs'])} rhs={fmt(ident['rhs'])} residual={fmt(ident['residual'])}")
    elif cmd == "teleport":
        for t in res["transcripts"]:
            bob = "undefined" if t["bob_state"] is None else _fmt_list(complex(re_, im) for re_, im in t["bob_state"])
            lines.append(
                f"outcome {t['outcome']:<9} p={fmt(t['probability'])}  correction={t['correction']:<3} "
                f"fidelity={fmt(t['fidelity'])}  bob={bob}"
            )
        lines.append(f"average fidelity {fmt(res['average_fidelity'])}")
        lines.append(f"decoupled {fmt(res['decoupled'])}")
    elif cmd == "catalog-list":
        lines.extend(res["names"])
    elif cmd == "sweep":
        for key, value in res.items():
            lines.append(f"{key:<18} {fmt(value)}")
    return "\n".join(lines) + "\n"


def format_state_text(echo: dict) -> str:
    from .parser import parse_ket_expr

    return format_state(parse_ket_expr(echo["ket"], dims_hint=echo["dims"]), digits=TEXT_DIGITS)
