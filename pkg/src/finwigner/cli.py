"""Command line interface.

Subcommands: dyck-enum, dyck-poly, genseries, segment-poly, moments,
prewigner, wigner, verify.  Data goes to stdout (or --out), diagnostics
to stderr.  Exit codes: 0 success, 1 failed verification, 2 invalid
arguments, 3 route mismatch in dyck-poly --verify, 4 cost-guard breach
(override with --unsafe-no-guard).
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from .dyck import (
    PathConstraint,
    dyck_poly_enum,
    dyck_poly_rec,
    gen_series,
    iter_paths,
    restrict_height,
    u_segment_poly,
)
from .errors import CostGuardError, DomainError
from .oscillator import MOMENT_ROUTES, OscillatorModel
from .polynomials import MultiPoly
from .scalars import decimal_str, rational_to_str
from .verify import SUITE_ORDER, run_suites
from .wigner import check_marginals, pre_wigner, wigner_matrix

FORMATS = click.Choice(["json", "csv", "table"])
ROUTES = click.Choice(["krawtchouk", "dyck", "oracle"])

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_ROUTE_MISMATCH = 3
EXIT_COST_GUARD = 4


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def _scalar_str(x: Fraction, precision: int | None) -> str:
    return rational_to_str(x) if precision is None else decimal_str(x, precision)


def _matrix_strings(matrix, precision: int | None) -> list[list[str]]:
    return [[_scalar_str(x, precision) for x in row] for row in matrix.tolist()]


def _aligned_table(rows: list[list[str]]) -> str:
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths))
                     for row in rows)


def _csv_lines(rows: list[list[str]], header_comment: str | None = None) -> str:
    buffer = io.StringIO()
    if header_comment:
        buffer.write(f"# {header_comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _poly_text(poly: MultiPoly, prefix: str = "u") -> str:
    return poly.to_text(prefix)


def _constraint_or_usage(r: int, h: int | None, a: int, b: int) -> PathConstraint:
    try:
        return PathConstraint(r, h=h, a=a, b=b)
    except DomainError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
def main():
    """Exact Wigner matrices for finite oscillators, and the weighted
    Dyck-path machinery behind them."""


@main.command("dyck-enum")
@click.option("--r", type=click.IntRange(min=0), required=True, help="Path size.")
@click.option("--h", type=click.IntRange(min=0), default=None, help="Height cap (default: unrestricted).")
@click.option("--a", type=click.IntRange(min=0), default=0, help="Minimum leading up steps.")
@click.option("--b", type=click.IntRange(min=0), default=0, help="Minimum trailing down steps.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output to a file.")
def cmd_dyck_enum(r, h, a, b, fmt, out):
    """List the constrained Dyck words in lexicographic order (u < d)."""
    constraint = _constraint_or_usage(r, h, a, b)
    words = [str(p) for p in iter_paths(constraint)]
    if fmt == "json":
        payload = {"r": r, "h": constraint.height_cap, "a": a, "b": b,
                   "words": words, "count": len(words)}
        _emit(_json_dumps(payload), out)
    else:
        lines = words + [f"count: {len(words)}"]
        _emit("\n".join(lines), out)


@main.command("dyck-poly")
@click.option("--r", type=click.IntRange(min=0), required=True, help="Path size.")
@click.option("--h", type=click.IntRange(min=0), default=None, help="Height cap (default: unrestricted).")
@click.option("--a", type=click.IntRange(min=0), default=0, help="Minimum leading up steps.")
@click.option("--b", type=click.IntRange(min=0), default=0, help="Minimum trailing down steps.")
@click.option("--route", type=click.Choice(["rec", "enum"]), default="rec",
              show_default=True, help="Recurrence or brute enumeration.")
@click.option("--verify", is_flag=True, help="Compute both routes; exit 3 on mismatch.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_dyck_poly(r, h, a, b, route, verify, fmt, out):
    """Print the weight-sum polynomial of a constrained path family."""
    constraint = _constraint_or_usage(r, h, a, b)

    def by_rec() -> MultiPoly:
        return restrict_height(dyck_poly_rec(r, a, b), constraint.height_cap)

    def by_enum() -> MultiPoly:
        return dyck_poly_enum(constraint)

    if verify:
        rec_poly, enum_poly = by_rec(), by_enum()
        if rec_poly != enum_poly:
            _fail("recurrence and enumeration routes disagree", EXIT_ROUTE_MISMATCH)
        poly = rec_poly
    else:
        poly = by_rec() if route == "rec" else by_enum()

    if fmt == "json":
        payload = {"r": r, "h": constraint.height_cap, "a": a, "b": b,
                   "terms": poly.to_json_obj()}
        _emit(_json_dumps(payload), out)
    elif fmt == "csv":
        rows = [["coeff", "monomial"]] + [[str(c), m.to_text()] for m, c in poly.sorted_terms()]
        _emit(_csv_lines(rows), out)
    else:
        _emit(_poly_text(poly), out)


@main.command("genseries")
@click.option("--order", type=click.IntRange(min=0), required=True,
              help="Highest power of t to expand.")
@click.option("--h", "n_vars", type=click.IntRange(min=0), default=None,
              help="Height cap / number of variables (default: the order).")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_genseries(order, n_vars, fmt, out):
    """Expand the continued-fraction generating function of weight sums."""
    if n_vars is None:
        n_vars = order
    coefficients = gen_series(order, n_vars)
    if fmt == "json":
        payload = {"order": order, "n_vars": n_vars,
                   "coefficients": [c.to_json_obj() for c in coefficients]}
        _emit(_json_dumps(payload), out)
    elif fmt == "csv":
        rows = [["power", "polynomial"]] + [[str(i), _poly_text(c)]
                                            for i, c in enumerate(coefficients)]
        _emit(_csv_lines(rows), out)
    else:
        lines = [f"t^{i}: {_poly_text(c)}" for i, c in enumerate(coefficients)]
        _emit("\n".join(lines), out)


@main.command("segment-poly")
@click.option("--r", type=click.IntRange(min=0), required=True, help="Path size.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_segment_poly(r, fmt, out):
    """Up-run length statistic over all size-r paths (variables t_i)."""
    poly = u_segment_poly(r)
    if fmt == "json":
        payload = {"r": r, "variable": "t", "terms": poly.to_json_obj()}
        _emit(_json_dumps(payload), out)
    elif fmt == "csv":
        rows = [["coeff", "monomial"]] + [[str(c), m.to_text("t")]
                                          for m, c in poly.sorted_terms()]
        _emit(_csv_lines(rows), out)
    else:
        _emit(_poly_text(poly, "t"), out)


@main.command("moments")
@click.option("--two-j", type=click.IntRange(min=1), required=True, help="Spectrum parameter 2j.")
@click.option("--n", type=click.IntRange(min=0), default=None,
              help="State index (default: all states).")
@click.option("--r", type=click.IntRange(min=0), required=True, help="Moment order (of q^2r).")
@click.option("--route", type=ROUTES, default="krawtchouk", show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--unsafe-no-guard", is_flag=True, help="Disable the cost guard.")
def cmd_moments(two_j, n, r, route, fmt, out, unsafe_no_guard):
    """Diagonal moments <n| q^(2r) |n>, cross-checked over all three routes."""
    model = OscillatorModel(two_j)
    if n is not None and n > model.two_j:
        _fail(f"n must be in 0..{model.two_j}", EXIT_USAGE)
    states = range(model.dim) if n is None else [n]
    rows = []
    try:
        for state in states:
            values = {name: MOMENT_ROUTES[name](state, r, model, unguarded=unsafe_no_guard)
                      for name in ("krawtchouk", "dyck", "matrix")}
            value = values["matrix" if route == "oracle" else route]
            rows.append({"n": state, "r": r, "value": rational_to_str(value),
                         "routes_agree": len(set(values.values())) == 1})
    except CostGuardError as exc:
        _fail(str(exc), EXIT_COST_GUARD)
    if fmt == "json":
        _emit(_json_dumps({"two_j": two_j, "route": route, "moments": rows}), out)
    elif fmt == "csv":
        table = [["n", "r", "value", "routes_agree"]]
        table += [[str(m["n"]), str(m["r"]), m["value"], str(m["routes_agree"]).lower()]
                  for m in rows]
        _emit(_csv_lines(table), out)
    else:
        table = [["n", "r", "value", "routes_agree"]]
        table += [[str(m["n"]), str(m["r"]), m["value"], "yes" if m["routes_agree"] else "NO"]
                  for m in rows]
        _emit(_aligned_table(table), out)


def _marginal_json(report) -> dict:
    return {
        "position": {
            "nodes": [rational_to_str(e.node) for e in report.position],
            "sums": [rational_to_str(e.total) for e in report.position],
            "reference": [rational_to_str(e.reference) for e in report.position],
            "exact": report.position_exact,
        },
        "momentum": {
            "nodes": [rational_to_str(e.node) for e in report.momentum],
            "sums": [rational_to_str(e.total) for e in report.momentum],
            "reference": [rational_to_str(e.reference) for e in report.momentum],
            "exact": report.momentum_exact,
        },
        "total": rational_to_str(report.total),
    }


@main.command("prewigner")
@click.option("--two-j", type=click.IntRange(min=1), required=True, help="Spectrum parameter 2j.")
@click.option("--n", type=click.IntRange(min=0), required=True, help="State index.")
@click.option("--route", type=ROUTES, default="krawtchouk", show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--precision", type=click.IntRange(min=0), default=None,
              help="Render decimals with this many digits instead of exact strings.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--unsafe-no-guard", is_flag=True, help="Disable the cost guard.")
def cmd_prewigner(two_j, n, route, fmt, precision, out, unsafe_no_guard):
    """The symmetrized-average matrix Z(n) (indices are powers a, b = 0..N)."""
    model = OscillatorModel(two_j)
    if n > model.two_j:
        _fail(f"n must be in 0..{model.two_j}", EXIT_USAGE)
    try:
        z = pre_wigner(n, model, route, unguarded=unsafe_no_guard)
    except CostGuardError as exc:
        _fail(str(exc), EXIT_COST_GUARD)
    cells = _matrix_strings(z.matrix, precision)
    if fmt == "json":
        _emit(_json_dumps({"two_j": two_j, "n": n, "route": route, "Z": cells}), out)
    elif fmt == "csv":
        _emit(_csv_lines(cells, "pre-Wigner Z(n); row/column indices are powers a,b = 0..N"), out)
    else:
        _emit(_aligned_table(cells), out)


@main.command("wigner")
@click.option("--two-j", type=click.IntRange(min=1), required=True, help="Spectrum parameter 2j.")
@click.option("--n", type=click.IntRange(min=0), required=True, help="State index.")
@click.option("--route", type=ROUTES, default="krawtchouk", show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--precision", type=click.IntRange(min=0), default=None,
              help="Render decimals with this many digits instead of exact strings.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--plot", type=click.Path(dir_okay=False), default=None,
              help="Also render the W grid as a heatmap image at this path.")
@click.option("--unsafe-no-guard", is_flag=True, help="Disable the cost guard.")
def cmd_wigner(two_j, n, route, fmt, precision, out, plot, unsafe_no_guard):
    """The Wigner grid W(n) with Z(n) and marginal checks."""
    model = OscillatorModel(two_j)
    if n > model.two_j:
        _fail(f"n must be in 0..{model.two_j}", EXIT_USAGE)
    try:
        z = pre_wigner(n, model, route, unguarded=unsafe_no_guard)
        w = wigner_matrix(n, model, route, unguarded=unsafe_no_guard)
    except CostGuardError as exc:
        _fail(str(exc), EXIT_COST_GUARD)
    report = check_marginals(w, model)
    w_cells = _matrix_strings(w.matrix, precision)
    if fmt == "json":
        payload = {
            "two_j": two_j,
            "n": n,
            "route": route,
            "Z": _matrix_strings(z.matrix, precision),
            "W": w_cells,
            "marginals": _marginal_json(report),
            "sum": rational_to_str(report.total),
        }
        _emit(_json_dumps(payload), out)
    elif fmt == "csv":
        comment = ("Wigner grid W(n); rows: momentum nodes -j..+j top to bottom; "
                   "columns: position nodes -j..+j left to right")
        _emit(_csv_lines(w_cells, comment), out)
    else:
        blocks = [
            "Z(n) (row/column indices are powers a,b = 0..N):",
            _aligned_table(_matrix_strings(z.matrix, precision)),
            "",
            "W(n) (rows: momentum nodes -j..+j; columns: position nodes -j..+j):",
            _aligned_table(w_cells),
            "",
            "position marginal (column sums vs |phi_n|^2):",
        ]
        for e in report.position:
            status = "ok" if e.equal else "MISMATCH"
            blocks.append(f"  q={rational_to_str(e.node)}: {rational_to_str(e.total)}"
                          f" vs {rational_to_str(e.reference)} {status}")
        blocks.append("momentum marginal (row sums vs |phi_n|^2, reported):")
        for e in report.momentum:
            status = "ok" if e.equal else "differs"
            blocks.append(f"  p={rational_to_str(e.node)}: {rational_to_str(e.total)}"
                          f" vs {rational_to_str(e.reference)} {status}")
        blocks.append(f"total: {rational_to_str(report.total)}")
        _emit("\n".join(blocks), out)
    if plot:
        from .plotting import save_heatmap

        save_heatmap(w, model, plot)
        click.echo(f"heatmap written to {plot}", err=True)


@main.command("verify")
@click.option("--two-j", "two_j_max", type=click.IntRange(min=1), default=4,
              show_default=True, help="Largest 2j exercised.")
@click.option("--r", "r_max", type=click.IntRange(min=1), default=4,
              show_default=True, help="Largest size/order exercised.")
@click.option("--suites", default=",".join(SUITE_ORDER), show_default=True,
              help="Comma-separated suite names.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_verify(two_j_max, r_max, suites, out):
    """Re-derive the cross-route identities and report pass/fail per case."""
    names = [s.strip() for s in suites.split(",") if s.strip()]
    try:
        results = run_suites(names, two_j_max, r_max)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    lines = [f"{'PASS' if c.ok else 'FAIL'} {c.suite}: {c.case}" for c in results]
    failed = sum(1 for c in results if not c.ok)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    _emit("\n".join(lines), out)
    if failed:
        sys.exit(EXIT_VERIFY_FAILED)


if __name__ == "__main__":
    main()
