"""Spectral and statistical-mechanics toolkit for perturbed Cayley trees."""

__version__ = "0.1.0"

from .graph import GQq, HQ, Mode, TreeBall, PerturbedModel, build_ball, build_model, perturb
from .krein import ModelNorm, SecularProblem, a_mu, estimate_model_norm, green_entry

__all__ = [
    "GQq",
    "HQ",
    "Mode",
    "TreeBall",
    "PerturbedModel",
    "build_ball",
    "build_model",
    "perturb",
    "ModelNorm",
    "SecularProblem",
    "a_mu",
    "estimate_model_norm",
    "green_entry",
    "__version__",
]
