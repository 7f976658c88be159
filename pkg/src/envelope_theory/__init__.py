"""Envelope theory (auxiliary field method) for N identical particles in D dimensions."""

from .calibration import FitResult, fit_phi, fit_phi_dataset, mean_relative_error
from .closed_forms import (
    SystemKind,
    SystemPreset,
    add_cm_offset,
    cb_solution,
    lnb_solution,
    sgb_solution,
    wib_solution,
)
from .et_solver import BoundTag, EtSolution, Status, residual, solve
from .hamiltonian import (
    Coulomb,
    Gaussian,
    HamiltonianSpec,
    Harmonic,
    Linear,
    NonrelativisticKinetic,
    PowerLaw,
    UltrarelativisticKinetic,
    Zero,
    term_derivative,
    term_value,
)
from .observables import (
    ObservableSet,
    ScaleParams,
    delta_at_origin,
    ground_state_observables,
    pair_correlation,
    radial_moment,
    scale_params,
)
from .quantum_numbers import StateSpec, global_q, global_q_phi, pair_count, parity
from .refdata import ReferenceRecord, preset, state_from_record, table1
from .special_functions import g_root, lambert_w0

__version__ = "0.1.0"
