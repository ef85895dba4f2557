"""Sample command: decode random symbol strings, count valid and distinct graphs."""

from typing import Optional

import click

from ..config import config
from ..harness.sampling import sample_random, sample_until_saturation
from ..utils.config_utils import get_profile_loader, grammar_for, show_profiles
from ..utils.display_utils import emit_report, print_header


@click.command()
@click.option("--count", type=click.IntRange(min=0), help="Strings to draw (upper bound with --patience)")
@click.option("--min-len", type=click.IntRange(min=0), help="Shortest string length")
@click.option("--max-len", type=click.IntRange(min=0), help="Longest string length")
@click.option("--patience", type=click.IntRange(min=0),
              help="Stop after this many valid draws without a new graph (0 = draw exactly --count)")
@click.option("--seed", type=click.IntRange(min=0), help="Random seed (default: VALENCE_SEED)")
@click.option("--profile", help="Experiment profile from config/experiment_profiles.yaml")
@click.option("--list-profiles", is_flag=True, expose_value=False, is_eager=True, callback=show_profiles,
              help="List experiment profiles and exit")
@click.option("--workers", type=click.IntRange(min=1), help="Worker threads (default: VALENCE_WORKERS)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", help="Report format")
@click.pass_context
def sample(
    ctx: click.Context,
    count: Optional[int],
    min_len: Optional[int],
    max_len: Optional[int],
    patience: Optional[int],
    seed: Optional[int],
    profile: Optional[str],
    workers: Optional[int],
    fmt: str,
):
    """Decode uniformly random symbol strings and report validity and diversity."""
    spec = grammar_for(ctx)
    settings = get_profile_loader().resolve_settings(
        "sample",
        profile,
        {"count": count, "min_len": min_len, "max_len": max_len, "patience": patience, "seed": seed},
    )
    length_range = (int(settings["min_len"]), int(settings["max_len"]))
    if length_range[1] < length_range[0]:
        raise click.UsageError(f"--max-len {length_range[1]} is below --min-len {length_range[0]}", ctx)
    seed = int(settings.get("seed", config.seed))
    patience = int(settings.get("patience", 0))

    if patience:
        print_header(f"Sampling '{spec.name}' until {patience} draws add nothing new", "🎲")
        report = sample_until_saturation(spec, length_range, patience, int(settings["count"]), seed)
        emit_report(report, "Saturation report", fmt)
        return

    print_header(f"Sampling {settings['count']} strings from '{spec.name}'", "🎲")
    report = sample_random(spec, length_range, int(settings["count"]), seed, workers or config.workers)
    emit_report(report, "Sampling report", fmt)
