"""Quantum-information measures for top-pair spin states from QCD production."""

from .spin_algebra import (
    PAULI,
    EigenSystem,
    NonHermitianInput,
    NotADensityMatrix,
    PauliBasis,
    ZeroAxis,
    dephase_diagonal,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    local_dephase,
    partial_trace,
    von_neumann_entropy,
)
from .qcd_production import (
    DEFAULT_TOP_MASS,
    BelowThreshold,
    Kinematics,
    MixtureWeights,
    NotPSD,
    ProductionCoefficients,
    assemble_density,
    beta_of_mass,
    gg_coefficients,
    mixed_state,
    pauli_expansion_density,
    qqbar_coefficients,
)
from .info_measures import (
    DEFAULT_PAIR,
    MeasureReport,
    ObservablePair,
    ccr_audit,
    conditional_entropy,
    intrinsic_audit,
    measure_report,
    measured_conditional_entropy,
    mutual_information,
    predictability_joint,
    rel_entropy_coherence,
    uncertainty_audit,
)
from .closed_forms import (
    ChannelPairInput,
    Discriminant,
    DomainError,
    NegativeRadicand,
    closed_form_check,
    discriminant,
    qmi_closed,
    rec_closed,
)
from .scan import (
    AuditSummary,
    GridSpec,
    ParseError,
    ScanConfig,
    ScanRecord,
    Tolerances,
    ValidationError,
    evaluate_point,
    load_config,
    run_scan,
    summarize_audits,
    write_csv,
)

__version__ = "0.1.0"
