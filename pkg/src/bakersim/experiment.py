"""Scenario runner, result records, CSV/JSON emitters and the scaling bench."""

import csv
import io
import json
import re
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import qmat
from .baker import BakerMap, baker_circuit, baker_map, baker_matrix
from .circuit import circuit_to_dict, circuit_unitary
from .metrics import (
    diagonal_entropy,
    echo_overlaps,
    overlap,
    populations,
    pseudo_pure,
    von_neumann_entropy,
)
from .perturb import Dephase, RotXPert, Shift, perturbation_channel, perturbed_echo

FORMAT_TAG = "bakersim-record/1"
SCENARIOS = ("echo", "dephase", "rotation-sweep", "shift-sweep")
MAX_QUBITS = 12


class ConfigError(ValueError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


# --- parameter syntax --------------------------------------------------------

_ANGLE_RE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<num>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*(?P<pi>pi)?"
    r"\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$"
)


def parse_angle(token: str) -> float:
    """Parse ``"pi/32"``, ``"3pi/4"``, ``"2*pi"``, ``"-0.1"`` and the like."""
    m = _ANGLE_RE.match(token.lower())
    if not m or not (m["num"] or m["pi"]):
        raise ValueError(f"cannot parse angle {token!r}")
    value = float(m["num"]) if m["num"] else 1.0
    if m["pi"]:
        value *= np.pi
    if m["den"]:
        value /= float(m["den"])
    return -value if m["sign"] == "-" else value


def parse_angle_grid(text: str) -> Tuple[float, ...]:
    """``start:end:count`` (inclusive linspace) or a comma-separated list."""
    parts = text.split(":")
    if len(parts) == 3:
        count = int(parts[2])
        if count < 1:
            raise ValueError("grid count must be at least 1")
        start, end = parse_angle(parts[0]), parse_angle(parts[1])
        return tuple(float(v) for v in np.linspace(start, end, count))
    if len(parts) != 1:
        raise ValueError(f"cannot parse angle grid {text!r}")
    return tuple(parse_angle(t) for t in text.split(","))


def parse_int_range(text: str) -> Tuple[int, ...]:
    """``"1..4"`` (inclusive) or a comma-separated list of integers."""
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if m:
        lo, hi = int(m[1]), int(m[2])
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return tuple(range(lo, hi + 1))
    return tuple(int(t) for t in text.split(","))


# --- config and record -------------------------------------------------------

@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str
    qubits: int = 3
    epsilon: float = 1.0
    initial: int = 0
    qubit: Optional[int] = None  # perturbed qubit; defaults to the LSB
    angles: Tuple[float, ...] = (0.0,)
    shifts: Tuple[int, ...] = (1, 2, 3, 4)
    p: float = 0.5
    average_basis: bool = False
    include_matrices: bool = False

    @property
    def target(self) -> int:
        return self.qubits if self.qubit is None else self.qubit

    def validate(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ConfigError("scenario", f"unknown scenario {self.scenario!r}")
        if not 1 <= self.qubits <= MAX_QUBITS:
            raise ConfigError("qubits", f"{self.qubits} outside 1..{MAX_QUBITS}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ConfigError("epsilon", f"{self.epsilon} outside [0, 1]")
        if not 0 <= self.initial < 2**self.qubits:
            raise ConfigError("initial", f"{self.initial} outside 0..{2**self.qubits - 1}")
        if not 1 <= self.target <= self.qubits:
            raise ConfigError("qubit", f"{self.target} outside 1..{self.qubits}")
        if self.scenario == "rotation-sweep" and len(self.angles) < 1:
            raise ConfigError("angles", "grid needs at least one value")
        if self.scenario == "shift-sweep" and len(self.shifts) < 1:
            raise ConfigError("shifts", "grid needs at least one value")
        if self.scenario == "dephase" and not 0.0 <= self.p <= 0.5:
            raise ConfigError("p", f"{self.p} outside [0, 1/2]")


@dataclass
class Row:
    param_value: float
    overlap_000: float
    overlap_avg: Optional[float]
    entropy_vn_bits: float
    entropy_diag_bits: float
    populations: List[float]
    rho_f: Optional[np.ndarray] = None
    rho_f_prime: Optional[np.ndarray] = None


@dataclass
class ExperimentRecord:
    config: ScenarioConfig
    param_name: str
    rows: List[Row] = field(default_factory=list)
    format: str = FORMAT_TAG


def _grid(cfg: ScenarioConfig):
    q = cfg.target
    if cfg.scenario == "echo":
        return "theta", [RotXPert(q, 0.0)]
    if cfg.scenario == "rotation-sweep":
        return "theta", [RotXPert(q, a) for a in cfg.angles]
    if cfg.scenario == "shift-sweep":
        return "shift", [Shift(s) for s in cfg.shifts]
    return "p", [Dephase(q, cfg.p)]


def _param_value(pert) -> float:
    if isinstance(pert, Shift):
        return float(pert.s)
    if isinstance(pert, RotXPert):
        return float(pert.theta)
    return float(pert.p)


def run_scenario(cfg: ScenarioConfig) -> ExperimentRecord:
    cfg.validate()
    n = cfg.qubits
    bmap = baker_map(n)
    rho0 = pseudo_pure(n, cfg.epsilon, cfg.initial)
    name, perts = _grid(cfg)
    rec = ExperimentRecord(cfg, name)
    for pert in perts:
        channel = perturbation_channel(pert, n)
        rho_f, rho_fp = perturbed_echo(bmap, rho0, pert, channel)
        if cfg.scenario == "echo":
            err = qmat.max_abs_diff(rho_fp, rho0)
            if err > 1e-10:
                raise ArithmeticError(f"echo did not return the initial state (error {err:.3g})")
        avg = None
        if cfg.average_basis:
            avg = float(np.mean(echo_overlaps(bmap, pert, cfg.epsilon)))
        pops = populations(rho_fp)
        if abs(pops.sum() - 1.0) > 1e-9:
            raise ArithmeticError(f"populations sum to {pops.sum()!r}")
        rec.rows.append(
            Row(
                param_value=_param_value(pert),
                overlap_000=overlap(rho_f, rho_fp),
                overlap_avg=avg,
                entropy_vn_bits=von_neumann_entropy(rho_fp),
                entropy_diag_bits=diagonal_entropy(rho_fp),
                populations=[float(v) for v in pops],
                rho_f=rho_f if cfg.include_matrices else None,
                rho_f_prime=rho_fp if cfg.include_matrices else None,
            )
        )
    return rec


# --- emitters ----------------------------------------------------------------

def fmt(x: Optional[float]) -> str:
    """Fixed 12-decimal rendering used in CSV output; None -> empty."""
    if x is None:
        return ""
    s = f"{x:.12f}"
    return "0.000000000000" if s == "-0.000000000000" else s


def csv_header(n: int) -> List[str]:
    return [
        "scenario", "qubits", "param_name", "param_value", "overlap_000",
        "overlap_avg", "entropy_vn_bits", "entropy_diag_bits",
    ] + [f"p_{i}" for i in range(2**n)]


def record_to_csv(rec: ExperimentRecord) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(csv_header(rec.config.qubits))
    for r in rec.rows:
        w.writerow(
            [rec.config.scenario, rec.config.qubits, rec.param_name]
            + [fmt(v) for v in (r.param_value, r.overlap_000, r.overlap_avg,
                                r.entropy_vn_bits, r.entropy_diag_bits)]
            + [fmt(v) for v in r.populations]
        )
    return buf.getvalue()


def record_to_dict(rec: ExperimentRecord) -> dict:
    rows = []
    for r in rec.rows:
        d = {
            "param_value": r.param_value,
            "overlap_000": r.overlap_000,
            "overlap_avg": r.overlap_avg,
            "entropy_vn_bits": r.entropy_vn_bits,
            "entropy_diag_bits": r.entropy_diag_bits,
            "populations": r.populations,
        }
        if r.rho_f is not None:
            d["rho_f"] = qmat.to_nested(r.rho_f)
            d["rho_f_prime"] = qmat.to_nested(r.rho_f_prime)
        rows.append(d)
    cfg = asdict(rec.config)
    cfg["angles"] = list(cfg["angles"])
    cfg["shifts"] = list(cfg["shifts"])
    return {"format": rec.format, "config": cfg, "param_name": rec.param_name, "rows": rows}


def record_to_json(rec: ExperimentRecord) -> str:
    return json.dumps(record_to_dict(rec), indent=2) + "\n"


def _write(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def emit_csv(rec: ExperimentRecord, path) -> None:
    _write(path, record_to_csv(rec))


def emit_json(rec: ExperimentRecord, path) -> None:
    _write(path, record_to_json(rec))


def baker_to_dict(n: int, include_circuit: bool = True) -> dict:
    bmap = baker_map(n)
    d = {"format": "bakersim-baker/1", "qubits": n, "matrix": qmat.to_nested(bmap.matrix)}
    if include_circuit:
        d["circuit"] = circuit_to_dict(bmap.circuit)
    return d


# --- bench -------------------------------------------------------------------

BENCH_STAGES = ("circuit", "oracle", "echo", "sweep_point")


def bench(qubit_range, theta: float = np.pi / 8) -> List[dict]:
    """Wall time (seconds) per stage for each register size.

    Stages: building the circuit and its unitary, building the direct
    matrix, one rotation echo from |0...0>, and one sweep point (echo plus
    overlap and both entropies).
    """
    rows = []
    for n in qubit_range:
        if not 1 <= n <= MAX_QUBITS:
            raise ConfigError("qubits", f"{n} outside 1..{MAX_QUBITS}")
        t = {}
        t0 = time.perf_counter()
        u_circ = circuit_unitary(baker_circuit(n))
        t["circuit"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        mat = baker_matrix(n)
        t["oracle"] = time.perf_counter() - t0
        err = qmat.max_abs_diff(u_circ, mat)
        if err > 1e-10:
            raise ArithmeticError(f"n={n}: circuit deviates from matrix by {err:.3g}")

        bmap = BakerMap(n, baker_circuit(n), mat)
        rho0 = pseudo_pure(n, 1.0, 0)
        pert = RotXPert(n, theta)
        t0 = time.perf_counter()
        perturbed_echo(bmap, rho0, pert)
        t["echo"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        rho_f, rho_fp = perturbed_echo(bmap, rho0, pert)
        overlap(rho_f, rho_fp)
        von_neumann_entropy(rho_fp)
        diagonal_entropy(rho_fp)
        t["sweep_point"] = time.perf_counter() - t0
        rows.append({"qubits": n, "dim": 2**n, "max_error": err, **t})
    return rows


def format_bench(rows) -> str:
    head = f"{'qubits':>6} {'dim':>6} " + " ".join(f"{s:>12}" for s in BENCH_STAGES) + f" {'max_error':>10}"
    lines = [head]
    for r in rows:
        lines.append(
            f"{r['qubits']:>6d} {r['dim']:>6d} "
            + " ".join(f"{r[s]:>12.4f}" for s in BENCH_STAGES)
            + f" {r['max_error']:>10.2e}"
        )
    return "\n".join(lines) + "\n"
