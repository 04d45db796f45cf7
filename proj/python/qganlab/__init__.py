"""Density-matrix simulator and adversarial training loops for quantum and
classical generators on discrete distributions."""

from ._core import (  # noqa: F401
    ConfigurationError,
    DensityMatrix,
    DimensionError,
    DiscriminatorModel,
    GeneratorModel,
    IoError,
    IterationRecord,
    NumericError,
    ObjectiveMode,
    SpecError,
    TrainingConfig,
    TrainingResult,
    __version__,
    classical_discriminator,
    classical_generator_probs,
    conjugate,
    discriminate,
    empirical_distribution,
    encode_distribution,
    evolve_unitary,
    fidelity,
    generate,
    grid_search_discriminator,
    iterations_to_convergence,
    kl_divergence,
    loss_discriminator,
    loss_generator,
    make_discriminator,
    make_generator,
    measure_probabilities,
    objective_literal,
    pauli_matrix,
    run_validation_suite,
    tv_distance,
    trace_distance,
    train,
    train_classical,
)
