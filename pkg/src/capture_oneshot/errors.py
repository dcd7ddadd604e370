"""Exception and warning types shared across the package."""


class DecodeError(ValueError):
    """Image bytes could not be decoded as PNG or JPEG."""


class OutOfRangeError(ValueError):
    """A parameter lies outside its documented range."""


class EvenKernelError(ValueError):
    """Defocus kernel size must be odd."""


class DegenerateQuadError(ValueError):
    """Perspective corners are collinear or self-intersecting."""


class EmptyClassError(ValueError):
    """A class directory contains no images."""


class UnknownTestClassError(ValueError):
    """A positive-test class is absent from the training split."""


class EmptySplitError(ValueError):
    """Evaluation was requested on a split with no items."""


class ConfigError(ValueError):
    """Model or training configuration is internally inconsistent."""


class ShapeError(ValueError):
    """Tensor shapes do not match the model configuration."""


class StaleMaskError(RuntimeError):
    """A forward record does not match the batch passed to backward."""


class NonFiniteGradientError(FloatingPointError):
    """A gradient tensor contains NaN or infinity."""


class DivergedError(RuntimeError):
    """Training loss became non-finite."""


class NoStochasticityWarning(UserWarning):
    """Monte Carlo sampling requested on a model without dropout noise."""
