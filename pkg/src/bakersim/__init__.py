"""Quantum baker's map simulator: perturbed echoes, overlaps, entropy."""

from .baker import BakerMap, baker_circuit, baker_map, baker_matrix, iterate, qft_circuit, qft_matrix
from .circuit import (
    Circuit,
    CondPhase,
    Hadamard,
    MultiControlledX,
    PauliX,
    RotX,
    Swap,
    apply_to_density,
    apply_to_state,
    basis_state,
    circuit_unitary,
    embed_gate,
    inverse_circuit,
    permutation_unitary,
    relabel_compress,
)
from .experiment import ScenarioConfig, emit_csv, emit_json, run_scenario
from .metrics import (
    DeviationMatrix,
    basis_averaged_overlap,
    correlation_C,
    correlation_unattenuated,
    deviation,
    diagonal_entropy,
    overlap,
    pseudo_pure,
    von_neumann_entropy,
)
from .perturb import (
    Dephase,
    KrausChannel,
    RotXPert,
    Shift,
    apply_channel,
    dephase_channel,
    perturbed_echo,
    rotx_perturbation,
    shift_circuit,
    shift_matrix,
)

__version__ = "0.1.0"
