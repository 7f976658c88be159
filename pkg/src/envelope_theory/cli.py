"""Command-line front end.

Exit codes: 0 Ok, 1 usage/config error, 2 Irrelevant, 3 NoSolution,
4 NoBracket. Reports go to stdout (or ``--output``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from contextlib import contextmanager
from pathlib import Path

from . import config as config_mod
from .calibration import dataset_error, et_energy, fit_phi, fit_phi_dataset, mean_relative_error
from .closed_forms import SystemKind, SystemPreset, add_cm_offset
from .errors import ConfigError, DomainError, EnvelopeError, NoBracketError
from .et_solver import EtSolution, Status, solve
from .hamiltonian import HamiltonianSpec, Harmonic
from .observables import ground_state_observables
from .quantum_numbers import StateSpec, global_q_phi
from .refdata import (
    PRESET_NAMES,
    SGB_LITERATURE_BOUND_COEFF,
    TABLE1_DELTAS,
    TABLE1_PHIS,
    preset,
    state_from_record,
    table1,
    table1_csv,
)

EXIT_OK, EXIT_USAGE, EXIT_IRRELEVANT, EXIT_NO_SOLUTION, EXIT_NO_BRACKET = 0, 1, 2, 3, 4
STATUS_EXIT = {Status.OK: EXIT_OK, Status.IRRELEVANT: EXIT_IRRELEVANT, Status.NO_SOLUTION: EXIT_NO_SOLUTION}
SCAN_COLUMNS = ("N", "Q_phi", "E", "r0", "p0", "lambda1", "mean_r", "delta", "bound", "status")
PRESET_FIELDS = ("m", "V0", "R", "g", "omega", "tension")

TABLE1_TOL = 0.002
DELTA_TOL = 0.0015
SGB_COEFF_TOL = 1e-12
CB_LIMIT_TOL = 1e-4


class UsageError(EnvelopeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".9g")


def _add_system_args(p, *, with_state=True):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=PRESET_NAMES, help="named benchmark system")
    src.add_argument("--config", type=Path, help="key = value Hamiltonian file")
    p.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                   help=f"override a preset parameter ({', '.join(PRESET_FIELDS)})")
    if with_state:
        p.add_argument("--n", type=int, help="particle number (presets default to 3)")
        p.add_argument("--state", help='quantum numbers "n,l;n,l;..." (default: ground state)')
    p.add_argument("--phi", type=float, help="phi of the modified quantum number (default 2)")
    p.add_argument("--method", choices=("closed", "generic"), default=None,
                   help="closed form (presets only) or numerical solver")
    p.add_argument("--add-cm-energy", action="store_true",
                   help="add the centre-of-mass oscillator energy D*omega/2")
    p.add_argument("--output", type=Path, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("csv", "table"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="envelope", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="approximate eigenvalue of one state")
    _add_system_args(p)
    p.add_argument("--observables", action="store_true", help="also print lambda_1, <r>, <r^2>, delta")

    p = sub.add_parser("scan", help="ground state for a range of N, as CSV")
    _add_system_args(p, with_state=False)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(format="csv")

    p = sub.add_parser("fit-phi", help="fit phi to reference energies")
    _add_system_args(p)
    refs = p.add_mutually_exclusive_group(required=True)
    refs.add_argument("--e-ref", type=float, help="reference energy of --state")
    refs.add_argument("--references", help="'table1' or a CSV with n_sum,l_sum,exact columns")
    p.add_argument("--bracket", default="0.5,3", help="phi search interval 'lo,hi'")

    p = sub.add_parser("reproduce", help="recompute published values and compare")
    p.add_argument("target", choices=("table1", "sgb-coefficient", "cb-limit"))

    p = sub.add_parser("export-table1", help="write the embedded reference table as CSV")
    p.add_argument("--output", type=Path)
    return parser


# ---------------------------------------------------------------------------
# system resolution


def _overrides(items):
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in PRESET_FIELDS:
            raise UsageError(f"--set expects KEY=VALUE with KEY in {', '.join(PRESET_FIELDS)}, got {item!r}")
        try:
            out[key] = float(value)
        except ValueError:
            raise UsageError(f"--set {key}: not a number: {value!r}") from None
    return out


def resolve_system(args, n=None):
    """Return ``(system, state, phi)`` where system is a preset or a Hamiltonian."""
    phi = args.phi
    state_text = getattr(args, "state", None)
    if args.preset:
        n = n if n is not None else getattr(args, "n", None)
        system = preset(args.preset, n)
        try:
            system = system.replace(**_overrides(args.overrides))
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        state = StateSpec.parse(state_text, system.N) if state_text else None
    else:
        if args.overrides:
            raise UsageError("--set only applies to presets")
        cfg = config_mod.load(args.config)
        h = cfg.hamiltonian
        if n is not None or getattr(args, "n", None) is not None:
            h = HamiltonianSpec(n or args.n, h.D, h.kinetic, h.one_body, h.pairwise)
        system = h
        state = StateSpec.parse(state_text, h.N) if state_text else cfg.state
        if phi is None:
            phi = cfg.phi
        if args.method == "closed":
            raise UsageError("--method closed needs a --preset")
    if state is not None and state.n_particles != system.N:
        raise UsageError(f"state has {state.n_particles - 1} pairs but N = {system.N}")
    return system, state or StateSpec.ground(system.N), 2.0 if phi is None else phi


def run_solver(system, q_phi, phi, method) -> EtSolution:
    if isinstance(system, SystemPreset):
        if method == "generic":
            return solve(system.hamiltonian(), q_phi, phi=phi)
        return system.closed_form(q_phi, phi)
    return solve(system, q_phi, phi=phi)


def cm_omega(system):
    if isinstance(system, SystemPreset):
        if system.kind is SystemKind.CB:
            return system.omega
    elif isinstance(system.one_body, Harmonic):
        return system.one_body.omega
    raise UsageError("--add-cm-energy needs a harmonic one-body term")


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _emit(rows, header, fmt_kind, out):
    if fmt_kind == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])
        return
    cells = [list(header)] + [[fmt(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_solve(args) -> int:
    system, state, phi = resolve_system(args)
    q = global_q_phi(state, system.D, phi)
    sol = run_solver(system, q, phi, args.method)
    energy = sol.energy
    if args.add_cm_energy and sol.status is not Status.NO_SOLUTION:
        energy = add_cm_offset(energy, system.D, cm_omega(system))
    report = [
        ("N", system.N), ("D", system.D), ("state", state.format()), ("phi", phi),
        ("Q_phi", q), ("E", energy), ("r0", sol.r0), ("p0", sol.p0),
        ("bound", str(sol.bound_tag)), ("status", str(sol.status)),
    ]
    if isinstance(system, SystemPreset) and system.units:
        report.append(("units", system.units))
    if args.observables:
        if not state.is_ground:
            raise UsageError("--observables is only available for the ground state")
        if sol.ok:
            obs = ground_state_observables(system.N, system.D, q, sol.r0, state)
            report += [("lambda1", obs.lambda1), ("mean_r", obs.moments[1]),
                       ("mean_r2", obs.moments[2]), ("delta", obs.delta)]
    with _sink(args.output) as out:
        if args.format == "csv":
            _emit([[v for _, v in report]], [k for k, _ in report], "csv", out)
        else:
            for key, value in report:
                out.write(f"{key:>8} = {fmt(value)}\n")
    if sol.status is not Status.OK:
        print(f"status {sol.status}", file=sys.stderr)
    return STATUS_EXIT[sol.status]


def scan_rows(system_factory, n_min, n_max, phi, method, add_cm):
    rows = []
    for n in range(n_min, n_max + 1):
        system = system_factory(n)
        state = StateSpec.ground(n)
        q = global_q_phi(state, system.D, phi)
        sol = run_solver(system, q, phi, method)
        if not sol.ok:
            rows.append([n, q, None, None, None, None, None, None, str(sol.bound_tag), str(sol.status)])
            continue
        energy = add_cm_offset(sol.energy, system.D, cm_omega(system)) if add_cm else sol.energy
        obs = ground_state_observables(n, system.D, q, sol.r0, state)
        rows.append([n, q, energy, sol.r0, sol.p0, obs.lambda1, obs.moments[1], obs.delta,
                     str(sol.bound_tag), str(sol.status)])
    return rows


def cmd_scan(args) -> int:
    if not 2 <= args.n_min <= args.n_max:
        raise UsageError("need 2 <= n-min <= n-max")
    _, _, phi = resolve_system(args, args.n_min)
    rows = scan_rows(lambda n: resolve_system(args, n)[0], args.n_min, args.n_max, phi,
                     args.method, args.add_cm_energy)
    with _sink(args.output) as out:
        _emit(rows, SCAN_COLUMNS, args.format, out)
    return EXIT_OK


def _read_references(path, n):
    records = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = {"n_sum", "l_sum", "exact"} - set(reader.fieldnames or ())
        if missing:
            raise ConfigError(f"reference CSV lacks columns {sorted(missing)}", 1)
        for lineno, row in enumerate(reader, start=2):
            try:
                pairs = ((int(row["n_sum"]), int(row["l_sum"])),) + ((0, 0),) * (n - 2)
                records.append((StateSpec(pairs), float(row["exact"])))
            except (ValueError, DomainError) as exc:
                raise ConfigError(str(exc), lineno) from None
    return records


def cmd_fit_phi(args) -> int:
    system, state, _ = resolve_system(args)
    try:
        lo, hi = (float(x) for x in args.bracket.split(","))
    except ValueError:
        raise UsageError(f"--bracket expects 'lo,hi', got {args.bracket!r}") from None
    if args.e_ref is not None:
        result = fit_phi(system, state, args.e_ref, (lo, hi))
        records = [(state, args.e_ref)]
    else:
        if args.references == "table1":
            records = [(state_from_record(r), r.exact) for r in table1()]
        else:
            records = _read_references(args.references, system.N)
        result = fit_phi_dataset(system, records, (lo, hi))
    rows = [[s.format(), e_ref, et_energy(system, s, result.phi)] for s, e_ref in records]
    with _sink(args.output) as out:
        out.write(f"phi = {fmt(result.phi)}\n")
        out.write(f"residual = {fmt(result.residual)}\n")
        out.write(f"iterations = {result.iterations}\n")
        out.write(f"mean_relative_error = {fmt(dataset_error(system, records, result.phi))}\n")
        _emit(rows, ("state", "e_ref", "E"), args.format, out)
    return EXIT_OK


def reproduce_table1(out) -> bool:
    lnb = preset("lnb", 3)
    records = table1()
    ok = True
    worst = 0.0
    for column, phi in TABLE1_PHIS.items():
        computed = []
        for rec in records:
            e = et_energy(lnb, state_from_record(rec), phi)
            computed.append(e)
            dev = abs(e - getattr(rec, column))
            worst = max(worst, dev)
            if not dev <= TABLE1_TOL:
                ok = False
                out.write(f"FAIL {column} ({rec.n_sum},{rec.l_sum}): {e:.4f} vs {getattr(rec, column):.3f}\n")
        delta = mean_relative_error(computed, [r.exact for r in records])
        passed = abs(delta - TABLE1_DELTAS[column]) <= DELTA_TOL
        ok &= passed
        out.write(f"{'PASS' if passed else 'FAIL'} Delta {column}: {100 * delta:.2f}% "
                  f"(printed {100 * TABLE1_DELTAS[column]:.1f}%)\n")
    out.write(f"{'PASS' if worst <= TABLE1_TOL else 'FAIL'} 64 ET values, max deviation {worst:.4f} GeV "
              f"(tolerance {TABLE1_TOL})\n")
    return ok


def reproduce_sgb(out) -> bool:
    ok = True
    for n in range(2, 9):
        system = preset("sgb", n)
        e = et_energy(system, StateSpec.ground(n), 1.0)
        coeff = e / (n * n * (n - 1) * system.m * system.g**2)
        passed = abs(coeff + 1 / 16) <= SGB_COEFF_TOL
        ok &= passed
        out.write(f"{'PASS' if passed else 'FAIL'} N={n}: E/(N^2 (N-1) m g^2) = {coeff:.15f}\n")
    out.write(f"coefficient 0.0625 = 1/16; literature lower bound coefficient {SGB_LITERATURE_BOUND_COEFF}\n")
    return ok


def reproduce_cb(out) -> bool:
    ok = True
    base = preset("cb", 3)
    for n in (2, 3, 5, 8):
        system = base.replace(N=n)
        q = global_q_phi(StateSpec.ground(n), system.D, 2.0)
        exact = system.omega * q
        e0 = system.replace(g=0.0).energy(q)
        e_small = system.replace(g=1e-8).energy(q)
        rel = abs(e_small - exact) / exact
        passed = e0 == exact and rel < CB_LIMIT_TOL
        ok &= passed
        out.write(f"{'PASS' if passed else 'FAIL'} N={n}: g=0 E={e0!r} (omega Q = {exact!r}); "
                  f"g=1e-8 relative deviation {rel:.2e}\n")
    return ok


def cmd_reproduce(args) -> int:
    target = {"table1": reproduce_table1, "sgb-coefficient": reproduce_sgb, "cb-limit": reproduce_cb}
    return EXIT_OK if target[args.target](sys.stdout) else EXIT_USAGE


def cmd_export_table1(args) -> int:
    with _sink(args.output) as out:
        out.write(table1_csv())
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "scan": cmd_scan,
    "fit-phi": cmd_fit_phi,
    "reproduce": cmd_reproduce,
    "export-table1": cmd_export_table1,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return COMMANDS[args.command](args)
    except NoBracketError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_BRACKET
    except (EnvelopeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
