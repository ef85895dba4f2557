"""Random-string sampling: validity and diversity of decoded graphs."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from ..chem.canonical import MAX_CANONICAL_VERTICES, canonical_form
from ..chem.valence import ValenceTable, validate_molecule
from ..grammar.engine import derive_graph
from ..grammar.graph import LabeledGraph
from ..grammar.spec import GrammarSpec
from ..quantum.components import validate_experiment

logger = logging.getLogger(__name__)

GraphCheck = Callable[[LabeledGraph], bool]


class SamplingReport(BaseModel):
    grammar: str
    count: int
    min_len: int
    max_len: int
    valid: int
    rate: float
    unique: int
    seed: int


class SaturationReport(BaseModel):
    grammar: str
    draws: int
    distinct: int
    patience: int
    saturated: bool
    seed: int


def validator_for(spec: GrammarSpec) -> GraphCheck:
    """Domain validator: molecules for ``chem``, experiments for ``quantum``, degrees otherwise."""
    if spec.name == "chem":
        table = ValenceTable.from_grammar(spec)
        return lambda graph: validate_molecule(graph, table).valid
    if spec.name == "quantum":
        return lambda graph: validate_experiment(graph).valid
    return lambda graph: not graph.degree_violations()


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per trial, so results do not depend on scheduling."""
    return np.random.default_rng([seed, trial])


def random_symbols(spec: GrammarSpec, rng: np.random.Generator, length_range: Tuple[int, int]) -> List[int]:
    low, high = length_range
    length = int(rng.integers(low, high + 1))
    return rng.integers(0, spec.size, size=length).tolist()


def graph_key(graph: LabeledGraph) -> Optional[str]:
    """Canonical form of a non-empty graph small enough to canonicalize."""
    if not len(graph) or len(graph) > MAX_CANONICAL_VERTICES:
        return None
    return canonical_form(graph)


def run_trials(trial: Callable[[int], object], count: int, workers: int = 1) -> List:
    """Run ``trial(i)`` for i in 0..count-1, results in trial order."""
    if workers <= 1 or count < 2:
        return [trial(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(trial, range(count)))


def _check_range(length_range: Tuple[int, int]) -> None:
    low, high = length_range
    if low < 0 or high < low:
        raise ValueError(f"invalid length range {low}..{high}")


def sample_random(
    spec: GrammarSpec,
    length_range: Tuple[int, int],
    count: int,
    seed: int,
    workers: int = 1,
) -> SamplingReport:
    """Decode ``count`` uniformly random strings and count valid and distinct graphs.

    A run with ``count == 0`` reports rate 0.0.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    _check_range(length_range)
    is_valid = validator_for(spec)

    def trial(index: int) -> Tuple[bool, Optional[str]]:
        graph = derive_graph(spec, random_symbols(spec, trial_rng(seed, index), length_range))
        return is_valid(graph), graph_key(graph)

    results = run_trials(trial, count, workers)
    valid = sum(1 for ok, _ in results if ok)
    unique = len({key for ok, key in results if ok and key is not None})
    logger.debug("sampled %d strings from %s: %d valid, %d unique", count, spec.name, valid, unique)
    return SamplingReport(
        grammar=spec.name,
        count=count,
        min_len=length_range[0],
        max_len=length_range[1],
        valid=valid,
        rate=valid / count if count else 0.0,
        unique=unique,
        seed=seed,
    )


def sample_until_saturation(
    spec: GrammarSpec,
    length_range: Tuple[int, int],
    patience: int,
    max_count: int,
    seed: int,
) -> SaturationReport:
    """Draw until ``patience`` consecutive valid samples add no new graph, or ``max_count`` draws."""
    if patience < 1:
        raise ValueError("patience must be >= 1")
    _check_range(length_range)
    is_valid = validator_for(spec)
    seen = set()
    streak = 0
    draws = 0
    while draws < max_count and streak < patience:
        graph = derive_graph(spec, random_symbols(spec, trial_rng(seed, draws), length_range))
        draws += 1
        key = graph_key(graph)
        if not is_valid(graph) or key is None:
            continue
        if key in seen:
            streak += 1
        else:
            seen.add(key)
            streak = 0
    return SaturationReport(
        grammar=spec.name,
        draws=draws,
        distinct=len(seen),
        patience=patience,
        saturated=streak >= patience,
        seed=seed,
    )
