"""Command-line front end: ``entgeom {eval,polygon,sweep,teleport,catalog}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import report
from .core import NamedState, PureState, Tolerances, catalog, catalog_names, random_pure
from .errors import EntanglementError, InvalidDims, InvalidParameters, KetSyntaxError, NotThreeParty
from .geometry import concurrence_purity, polygon_check
from .parser import parse_ket_expr
from .teleport import decoupling_check, teleport

CSV_COLUMNS = ["index", "seed", "C_0", "C_1", "C_2", "slack_lin_min", "slack_sq_min", "oracle_disc_max"]
SLACK_FLOOR = -1e-10


class CliError(Exception):
    def __init__(self, kind: str, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.kind, self.message, self.position = kind, message, position


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("UsageError", message)


def _base(text: str):
    if text == "2":
        return 2
    if text == "e":
        return "e"
    raise argparse.ArgumentTypeError("base must be 2 or e")


def _dims(text: str) -> list[int]:
    try:
        dims = [int(x) for x in text.replace("x", ",").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must look like 2,2,2, got {text!r}") from None
    if not dims or any(d < 2 for d in dims):
        raise argparse.ArgumentTypeError(f"every dimension must be >= 2, got {text!r}")
    return dims


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands must not overwrite flags already given before the subcommand name
    def default(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=default("text"))
    common.add_argument("--base", type=_base, default=default(2), help="entropy log base: 2 or e")
    common.add_argument("--tol", type=_positive_float, default=default(None), help="norm and equality tolerance")
    common.add_argument("--seed", type=int, default=default(0))
    common.add_argument("--out", default=default(None), help="write the report here instead of stdout")
    common.add_argument(
        "--normalize", action="store_true", default=default(False), help="rescale parsed states to unit norm"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags(suppress=True)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("expr", nargs="?", help="ket expression, e.g. '(|00>+|11>)/sqrt(2)'")
    source.add_argument("--catalog", dest="catalog_name", metavar="NAME", help="catalog state, e.g. GHZ(3,3)")
    source.add_argument("--random", dest="random_dims", type=_dims, metavar="DIMS", help="Haar-random state, e.g. 2,2,2")

    parser = _Parser(prog="entgeom", description=__doc__, parents=[_common_flags(suppress=False)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common, source], help="concurrences, Schmidt coefficients, entropies")
    p.add_argument("--split", action="append", default=None, help="bipartition like 0|12 (repeatable)")

    sub.add_parser("polygon", parents=[common, source], help="polygon inequalities of a 3-party state")

    p = sub.add_parser("sweep", parents=[common], help="random-state sweep writing CSV rows")
    p.add_argument("--dims", type=_dims, default=[2, 2, 2])
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", default=None, help="CSV path ('-' for stdout, the default)")

    p = sub.add_parser("teleport", parents=[common], help="teleport one qubit through a two-qubit resource")
    p.add_argument("input_expr")
    p.add_argument("--resource", default="(|00>+|11>)/sqrt(2)")

    p = sub.add_parser("catalog", parents=[common], help="list or show catalog states")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    return parser


def _tolerances(args) -> Tolerances:
    if args.tol is None:
        return Tolerances()
    return Tolerances(norm_tol=args.tol, equality_tol=args.tol)


def _options(args) -> dict:
    out = {"base": args.base}
    if args.tol is not None:
        out["tol"] = args.tol
    return out


def load_state(args, tol: Tolerances) -> tuple[PureState, dict]:
    sources = [x is not None for x in (args.expr, args.catalog_name, args.random_dims)]
    if sum(sources) != 1:
        raise CliError("UsageError", "give exactly one state source: an expression, --catalog or --random")
    if args.expr is not None:
        state = parse_ket_expr(args.expr, normalize=args.normalize, tol=tol)
        echo = {"source": "ket", "text": args.expr}
    elif args.catalog_name is not None:
        name = NamedState.parse(args.catalog_name)
        state = catalog(name)
        echo = {"source": "catalog", "name": name.label()}
    else:
        state = random_pure(args.random_dims, args.seed)
        echo = {"source": "random", "seed": args.seed}
    echo.update(report.state_echo(state))
    return state, echo


# --- sweep --------------------------------------------------------------------


def sweep_row(dims: Sequence[int], seed: int, index: int) -> list:
    state = random_pure(dims, seed)
    rep = polygon_check(state)
    disc = max(abs(rep.concurrences[k] - concurrence_purity(state, [k])) for k in range(3))
    return [index, seed, *rep.concurrences, rep.min_linear_slack, rep.min_squared_slack, disc]


def _row_task(task):
    return sweep_row(*task)


def run_sweep(dims: Sequence[int], count: int, seed: int, workers: int = 1, tol: Optional[Tolerances] = None):
    """Rows ordered by sample index; sample ``i`` uses seed ``seed + i``."""
    if count < 1:
        raise InvalidParameters("count must be >= 1")
    if len(dims) != 3:
        raise InvalidDims(f"sweep covers three-party states, got dims {list(dims)}")
    tol = tol or Tolerances()
    tasks = [(tuple(dims), seed + i, i) for i in range(count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row_task, tasks, chunksize=max(1, count // (8 * workers))))
    else:
        rows = [_row_task(t) for t in tasks]
    summary = {
        "dims": list(dims),
        "count": count,
        "seed": seed,
        "min_linear_slack": min(r[5] for r in rows),
        "min_squared_slack": min(r[6] for r in rows),
        "max_discrepancy": max(r[7] for r in rows),
        "violations": sum(1 for r in rows if min(r[5], r[6]) < SLACK_FLOOR),
        "oracle_failures": sum(1 for r in rows if r[7] > tol.equality_tol),
    }
    return rows, summary


def write_csv(rows, stream) -> None:
    stream.write("# schema=1\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([r[0], r[1], *(report._number(float(x)) for x in r[2:])])


# --- commands -------------------------------------------------------------------


def cmd_eval(args) -> dict:
    tol = _tolerances(args)
    state, echo = load_state(args, tol)
    return report.document("eval", echo, _options(args), report.eval_results(state, args.split, args.base, tol))


def cmd_polygon(args) -> dict:
    tol = _tolerances(args)
    state, echo = load_state(args, tol)
    if state.n_parties != 3:
        raise NotThreeParty(f"polygon needs a 3-party state, got dims {list(state.dims)}")
    return report.document("polygon", echo, _options(args), report.polygon_results(state))


def cmd_teleport(args) -> dict:
    tol = _tolerances(args)
    payload = parse_ket_expr(args.input_expr, dims_hint=[2], normalize=args.normalize, tol=tol)
    resource = parse_ket_expr(args.resource, dims_hint=[2, 2], normalize=args.normalize, tol=tol)
    result = teleport(payload, resource, tol)
    echo = {"input": report.state_echo(payload), "resource": report.state_echo(resource)}
    results = report.teleport_results(result, decoupling_check(payload, resource, tol))
    return report.document("teleport", echo, _options(args), results)


def cmd_catalog(args) -> dict:
    if args.action == "list":
        return report.document("catalog-list", {}, _options(args), {"names": catalog_names()})
    if not args.name:
        raise CliError("UsageError", "catalog show needs a name")
    tol = _tolerances(args)
    name = NamedState.parse(args.name)
    state = catalog(name)
    echo = {"source": "catalog", "name": name.label(), **report.state_echo(state)}
    results = {
        "name": name.label(),
        "ket": report.format_state(state, digits=report.TEXT_DIGITS),
        "eval": report.eval_results(state, None, args.base, tol),
    }
    return report.document("catalog-show", echo, _options(args), results)


def cmd_sweep(args, stdout) -> dict:
    tol = _tolerances(args)
    rows, summary = run_sweep(args.dims, args.count, args.seed, args.workers, tol)
    if args.csv in (None, "-"):
        write_csv(rows, stdout)
    else:
        with open(args.csv, "w", newline="") as fh:
            write_csv(rows, fh)
    return report.document("sweep", {"dims": list(args.dims), "count": args.count, "seed": args.seed}, _options(args), summary)


def render(doc: dict, fmt: str) -> str:
    return report.dumps(doc) + "\n" if fmt == "json" else report.render_text(doc)


def _error_line(exc) -> str:
    if isinstance(exc, CliError):
        kind, message, position = exc.kind, exc.message, exc.position
    elif isinstance(exc, KetSyntaxError):
        kind, message, position = type(exc).__name__, exc.reason, exc.position
    else:
        kind, message, position = type(exc).__name__, str(exc), None
    payload = {"error": kind, "message": message}
    if position is not None:
        payload["position"] = position
    return json.dumps(payload)


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "sweep":
            csv_to_stdout = args.csv in (None, "-")
            doc = cmd_sweep(args, stdout)
            text = render(doc, args.format)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                # keep stdout a clean CSV stream when it carries the rows
                (stderr if csv_to_stdout else stdout).write(text)
            return 0
        handler = {"eval": cmd_eval, "polygon": cmd_polygon, "teleport": cmd_teleport, "catalog": cmd_catalog}
        doc = handler[args.command](args)
        text = render(doc, args.format)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            stdout.write(text)
        return 0
    except (CliError, EntanglementError, OSError) as exc:
        stderr.write(_error_line(exc) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
