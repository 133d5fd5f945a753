class ModelError(ValueError):
    """Base class for invalid inputs to the affinity model."""


class GammaNotPositive(ModelError):
    pass


class DegenerateModel(ModelError):
    pass


class NonFiniteInput(ModelError):
    pass


class NotConvergent(ModelError):
    """Raised when an equilibrium limit is requested but ``|lambda2| >= 1``."""


class NotOscillatory(ModelError):
    """Raised when period-2 orbit points are requested but ``lambda2 != -1``."""


class TrivialOrbit(ModelError):
    """Raised when the initial state is already an equilibrium (``a == b``)."""
