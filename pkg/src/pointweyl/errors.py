class NumericalFailure(RuntimeError):
    """A computation did not reach its tolerance or hit an ill-conditioned system."""


class PoleError(ValueError):
    """Evaluation requested at a singularity (a point of X, or an eigenvalue)."""
