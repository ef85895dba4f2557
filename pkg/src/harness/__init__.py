"""Experiment engine: mutations, random sampling and one-hot export."""

from .mutation import (
    MutationError,
    MutationReport,
    Representation,
    default_start,
    mutate_string,
    mutation_experiment,
)
from .onehot import OneHotError, from_one_hot, to_one_hot
from .sampling import SamplingReport, SaturationReport, sample_random, sample_until_saturation

__all__ = [
    "MutationError",
    "MutationReport",
    "OneHotError",
    "Representation",
    "SamplingReport",
    "SaturationReport",
    "default_start",
    "from_one_hot",
    "mutate_string",
    "mutation_experiment",
    "sample_random",
    "sample_until_saturation",
    "to_one_hot",
]
