"""Random point mutations of SMILES and symbol strings, and their validity rates."""

import logging
from enum import StrEnum
from typing import List, Optional, Sequence, Tuple, TypeVar, Union

import numpy as np
from pydantic import BaseModel, Field

from ..chem.codec import TokenizeError, decode, encode, to_text, tokenize
from ..chem.molecules import mdma
from ..chem.smiles import SmilesError, parse_smiles, write_smiles
from ..chem.valence import chem_grammar
from ..grammar.spec import GrammarSpec
from .sampling import graph_key, run_trials, trial_rng, validator_for

logger = logging.getLogger(__name__)

T = TypeVar("T")

SMILES_ALPHABET = "CNOFcno-=#()123456789%"
MAX_EXAMPLES = 3


class MutationError(ValueError):
    """Raised for an impossible mutation request or an invalid start string."""


class Representation(StrEnum):
    SMILES = "smiles"
    SELFIES = "selfies"


class MutationExample(BaseModel):
    text: str
    valid: bool


class MutationReport(BaseModel):
    representation: Representation
    k: int
    trials: int
    valid: int
    rate: float
    unique: int
    seed: int
    start: str
    examples: List[MutationExample] = Field(default_factory=list)


def mutate_string(
    tokens: Sequence[T],
    k: int,
    seed: Union[int, np.random.Generator],
    alphabet: Sequence[T],
) -> List[T]:
    """Replace ``k`` distinct positions, each with a uniform draw from ``alphabet``.

    The draw covers the whole alphabet, so a position may get its own symbol
    back and fewer than ``k`` positions end up changed.
    """
    if k < 0 or k > len(tokens):
        raise MutationError(f"cannot mutate {k} positions of a string of length {len(tokens)}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    mutated = list(tokens)
    if k == 0:
        return mutated
    positions = rng.choice(len(tokens), size=k, replace=False)
    replacements = rng.integers(0, len(alphabet), size=k)
    for position, choice in zip(positions, replacements):
        mutated[int(position)] = alphabet[int(choice)]
    return mutated


def default_start(representation: Representation, spec: Optional[GrammarSpec] = None) -> str:
    """MDMA in the requested representation."""
    if representation == Representation.SMILES:
        return write_smiles(mdma())
    spec = spec or chem_grammar()
    return to_text(encode(mdma(), spec), spec)


def _judge_smiles(text: str) -> Tuple[bool, Optional[str]]:
    try:
        graph = parse_smiles(text)
    except SmilesError:
        return False, None
    return True, graph_key(graph)


def mutation_experiment(
    start: str,
    representation: Representation,
    k: int,
    trials: int,
    seed: int,
    spec: Optional[GrammarSpec] = None,
    workers: int = 1,
) -> MutationReport:
    """Mutate ``start`` in ``trials`` independent trials and report the validity rate."""
    representation = Representation(representation)
    if trials < 0:
        raise MutationError("trials must be non-negative")

    if representation == Representation.SMILES:
        if not _judge_smiles(start)[0]:
            raise MutationError(f"start string {start!r} is not valid SMILES")
        tokens: Sequence = list(start)
        alphabet: Sequence = SMILES_ALPHABET

        def judge(mutated: List) -> Tuple[bool, Optional[str], str]:
            text = "".join(mutated)
            ok, key = _judge_smiles(text)
            return ok, key, text
    else:
        spec = spec or chem_grammar()
        try:
            tokens = tokenize(start, spec)
        except TokenizeError as e:
            raise MutationError(f"start string is not a symbol string: {e}") from e
        alphabet = list(range(spec.size))
        is_valid = validator_for(spec)

        def judge(mutated: List) -> Tuple[bool, Optional[str], str]:
            graph = decode(mutated, spec)
            return is_valid(graph), graph_key(graph), to_text(mutated, spec)

    if not 0 <= k <= len(tokens):
        raise MutationError(f"k={k} outside 0..{len(tokens)} for this start string")

    def trial(index: int) -> Tuple[bool, Optional[str], str]:
        return judge(mutate_string(tokens, k, trial_rng(seed, index), alphabet))

    results = run_trials(trial, trials, workers)
    valid = sum(1 for ok, _, _ in results if ok)
    unique = len({key for ok, key, _ in results if ok and key is not None})
    examples = [MutationExample(text=text, valid=ok) for ok, _, text in results[:MAX_EXAMPLES]]
    logger.debug("%s k=%d: %d/%d valid", representation.value, k, valid, trials)
    return MutationReport(
        representation=representation,
        k=k,
        trials=trials,
        valid=valid,
        rate=valid / trials if trials else 0.0,
        unique=unique,
        seed=seed,
        start=start,
        examples=examples,
    )
