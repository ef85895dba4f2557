"""Mutate command: random point mutations and their validity rate."""

from typing import Optional

import click
from rich.markup import escape

from ..chem.codec import EncodingError
from ..config import config
from ..harness.mutation import MutationError, Representation, default_start, mutation_experiment
from ..utils.config_utils import get_profile_loader, grammar_for, show_profiles
from ..utils.display_utils import emit_report, print_header, print_info


@click.command()
@click.option("--rep", type=click.Choice([r.value for r in Representation]),
              help="String representation to mutate (default: selfies)")
@click.option("--k", type=click.IntRange(min=0), help="Positions replaced per trial")
@click.option("--trials", type=click.IntRange(min=0), help="Number of independent trials")
@click.option("--seed", type=click.IntRange(min=0), help="Random seed (default: VALENCE_SEED)")
@click.option("--start", help="Start string (default: MDMA in the chosen representation)")
@click.option("--profile", help="Experiment profile from config/experiment_profiles.yaml")
@click.option("--list-profiles", is_flag=True, expose_value=False, is_eager=True, callback=show_profiles,
              help="List experiment profiles and exit")
@click.option("--workers", type=click.IntRange(min=1), help="Worker threads (default: VALENCE_WORKERS)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", help="Report format")
@click.pass_context
def mutate(
    ctx: click.Context,
    rep: Optional[str],
    k: Optional[int],
    trials: Optional[int],
    seed: Optional[int],
    start: Optional[str],
    profile: Optional[str],
    workers: Optional[int],
    fmt: str,
):
    """Mutate a start string K times per trial and report how many mutants stay valid."""
    spec = grammar_for(ctx)
    settings = get_profile_loader().resolve_settings(
        "mutate", profile, {"rep": rep, "k": k, "trials": trials, "seed": seed}
    )
    representation = Representation(settings.get("rep", Representation.SELFIES))
    seed = settings.get("seed", config.seed)

    try:
        start = start or default_start(representation, spec)
    except EncodingError as e:
        raise click.UsageError(f"no default start string for grammar '{spec.name}': {e}", ctx) from e

    print_header(f"Mutating {representation.value} ({settings['k']} per trial, {settings['trials']} trials)", "🧬")
    print_info(f"start: {escape(start)}")

    try:
        report = mutation_experiment(
            start,
            representation,
            k=int(settings["k"]),
            trials=int(settings["trials"]),
            seed=int(seed),
            spec=spec,
            workers=workers or config.workers,
        )
    except MutationError as e:
        raise click.UsageError(str(e), ctx) from e

    examples = {
        f"example {i}": f"{example.text} ({'valid' if example.valid else 'invalid'})"
        for i, example in enumerate(report.examples, 1)
    }
    emit_report(report, "Mutation report", fmt, extra_rows=examples)
