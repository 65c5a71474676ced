"""``bakersim`` command line entry point."""

import argparse
import json
import sys

from . import experiment as ex
from .baker import baker_map
from .circuit import circuit_to_dict, relabel_compress


def _add_run(sub):
    p = sub.add_parser("run", help="run one experiment scenario")
    p.add_argument("scenario", choices=ex.SCENARIOS)
    p.add_argument("--qubits", type=int, default=3, help="register size n")
    p.add_argument("--epsilon", type=float, default=1.0, help="pseudo-pure purity")
    p.add_argument("--initial", type=int, default=0, help="initial basis index")
    p.add_argument("--qubit", type=int, default=None, help="perturbed qubit (default: n, the LSB)")
    p.add_argument("--angles", default="0", help="start:end:count or comma list, e.g. pi/32,pi/16")
    p.add_argument("--shifts", default="1..4", help="lo..hi or comma list")
    p.add_argument("--p", type=float, default=0.5, help="dephasing probability in [0, 1/2]")
    p.add_argument("--average-basis", action="store_true", help="also average over basis inputs")
    p.add_argument("--matrices", action="store_true", help="include density matrices in JSON")
    p.add_argument("--csv", help="write CSV here")
    p.add_argument("--json", help="write JSON here")
    p.add_argument("--dump-circuit", metavar="PATH", help="write the baker circuit as JSON")


def _add_dump(sub):
    p = sub.add_parser("dump", help="write the baker map or its circuit as JSON")
    p.add_argument("what", choices=("baker", "circuit"))
    p.add_argument("--qubits", type=int, default=3)
    p.add_argument("--compress", action="store_true", help="relabel swaps away (circuit only)")
    p.add_argument("--json", help="output path (default: stdout)")


def _add_bench(sub):
    p = sub.add_parser("bench", help="time each stage for a range of register sizes")
    p.add_argument("--qubits", default="1..10", help="lo..hi or comma list, within 1..12")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bakersim", description="Quantum baker's map echo simulator")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_run(sub)
    _add_dump(sub)
    _add_bench(sub)
    return parser


def _config_from_args(args) -> ex.ScenarioConfig:
    try:
        angles = ex.parse_angle_grid(args.angles)
    except ValueError as exc:
        raise ex.ConfigError("angles", str(exc)) from exc
    try:
        shifts = ex.parse_int_range(args.shifts)
    except ValueError as exc:
        raise ex.ConfigError("shifts", str(exc)) from exc
    return ex.ScenarioConfig(
        scenario=args.scenario,
        qubits=args.qubits,
        epsilon=args.epsilon,
        initial=args.initial,
        qubit=args.qubit,
        angles=angles,
        shifts=shifts,
        p=args.p,
        average_basis=args.average_basis,
        include_matrices=args.matrices,
    )


def _emit(text: str, path) -> None:
    if path:
        ex._write(path, text)
    else:
        sys.stdout.write(text)


def _run(args) -> None:
    cfg = _config_from_args(args)
    rec = ex.run_scenario(cfg)
    if args.csv:
        ex.emit_csv(rec, args.csv)
    if args.json:
        ex.emit_json(rec, args.json)
    if args.dump_circuit:
        ex._write(args.dump_circuit, json.dumps(circuit_to_dict(baker_map(cfg.qubits).circuit), indent=2) + "\n")
    if not (args.csv or args.json):
        sys.stdout.write(ex.record_to_csv(rec))


def _dump(args) -> None:
    if not 1 <= args.qubits <= ex.MAX_QUBITS:
        raise ex.ConfigError("qubits", f"{args.qubits} outside 1..{ex.MAX_QUBITS}")
    if args.what == "baker":
        d = ex.baker_to_dict(args.qubits)
    else:
        circ = baker_map(args.qubits).circuit
        if args.compress:
            circ, perm = relabel_compress(circ)
            d = {**circuit_to_dict(circ), "final_permutation": list(perm)}
        else:
            d = circuit_to_dict(circ)
    _emit(json.dumps(d, indent=2) + "\n", args.json)


def _bench(args) -> None:
    try:
        qs = ex.parse_int_range(args.qubits)
    except ValueError as exc:
        raise ex.ConfigError("qubits", str(exc)) from exc
    sys.stdout.write(ex.format_bench(ex.bench(qs)))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": _run, "dump": _dump, "bench": _bench}[args.command]
    try:
        handler(args)
    except ex.ConfigError as exc:
        print(f"bakersim: invalid config: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, OSError, ValueError) as exc:
        print(f"bakersim: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
