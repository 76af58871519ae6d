"""Exception taxonomy for the battery solver."""


class QbatError(Exception):
    """Base class for all solver errors."""

    code = "error"


class InvalidParams(QbatError):
    """Battery parameters violate one or more invariants."""

    code = "invalid_params"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NullSpaceDegenerate(QbatError):
    """The generator's null direction is not isolated."""

    code = "null_space_degenerate"


class NonPhysical(QbatError):
    """A state has populations or eigenvalues below the physical floor."""

    code = "non_physical"


class StepSizeUnderflow(QbatError):
    """The adaptive integrator stalled."""

    code = "step_size_underflow"


class DivisionDegenerate(QbatError):
    """An indicator-ratio denominator is numerically zero."""

    code = "division_degenerate"


class BranchAmbiguous(QbatError):
    """Eigenvalue continuation cannot pick a unique branch."""

    code = "branch_ambiguous"


class ComplexDominant(QbatError):
    """The continued eigenvalue branch acquired an imaginary part."""

    code = "complex_dominant"


class DerivativeUnstable(QbatError):
    """A finite-difference derivative failed the step-halving check."""

    code = "derivative_unstable"

    def __init__(self, order, rel_diff):
        self.order = order
        self.rel_diff = rel_diff
        super().__init__(f"order {order} derivative unstable (rel diff {rel_diff:.3e})")


class BaselineDegenerate(QbatError):
    """A coherence-free baseline quantity is numerically zero."""

    code = "baseline_degenerate"

    def __init__(self, what):
        self.what = what
        super().__init__(f"baseline degenerate: {what}")


class AffinityDegenerate(QbatError):
    """An occupation in the affinity denominator underflowed."""

    code = "affinity_degenerate"


class SingleGroup(QbatError):
    """A group-aware split needs at least two distinct group keys."""

    code = "single_group"


class SchemaMismatch(QbatError):
    """A dataset file does not carry the expected columns."""

    code = "schema_mismatch"
