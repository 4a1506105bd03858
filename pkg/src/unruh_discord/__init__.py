"""Classical correlation, quantum discord and concurrence of Bell-diagonal
two-qubit states shared with a uniformly accelerated observer, under
phase-flip, bit-flip and phase-bit-flip decoherence."""

from .channels import (
    ChannelKind,
    KrausChannel,
    analytic_eigenvalues_phase_flip,
    apply_two_sided,
    evolve,
    evolved_phase_flip_analytic,
    kraus_for,
    p_of_t,
)
from .correlations import (
    CorrelationRecord,
    MeasurementAngles,
    classical_correlation,
    concurrence,
    conditional_entropy,
    conditioned_state,
    correlation_record,
    mutual_information,
    quantum_discord,
)
from .dynamics import (
    SweepConfig,
    TransitionReport,
    analyze,
    closed_form_transition_phase_flip_T0,
    find_sudden_death,
    find_transition,
    sweep,
)
from .errors import (
    ComplexSpectrum,
    DegenerateOutcome,
    DomainError,
    InvalidState,
    NoBracket,
    NoConvergence,
    NotHermitian,
    ParseError,
)
from .numerics import general_eigenvalues, hermitian_eigenvalues, shannon_term, von_neumann_entropy
from .states import (
    INFINITE,
    BellDiagonalParams,
    UnruhParams,
    bell_diagonal,
    partial_trace,
    unruh_joint_state,
    validate,
)

__version__ = "0.1.0"
