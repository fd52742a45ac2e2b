"""Command line interface."""
from __future__ import annotations

import json
import sys

import click

from . import pipeline
from .symmetric_rep import format_decomposition, signed_multiplicities

LARGE_N = 6


def _reduced(reduced_excess, excess_):
    if (reduced_excess is None) == (excess_ is None):
        raise click.UsageError("give exactly one of --reduced-excess or --excess")
    return reduced_excess if reduced_excess is not None else excess_ - 25


def _complex(g, n, force_large):
    if n >= LARGE_N and not force_large:
        raise click.UsageError(f"n={n} needs --force-large for the full labeled complex")
    return pipeline.build_complex(g, n, force=True)


@click.group()
def main():
    """Weight-13 graph complex toolkit."""


@main.command()
@click.option("--reduced-excess", type=int)
@click.option("--excess", "excess_", type=int, help="3g + 2n; reduced excess is this minus 25")
@click.option("--json", "as_json", is_flag=True)
def census(reduced_excess, excess_, as_json):
    """Virtual blown-up representations by family and edge group."""
    rep = pipeline.census_report(_reduced(reduced_excess, excess_))
    if as_json:
        click.echo(json.dumps(rep, sort_keys=True, default=str))
    else:
        click.echo(pipeline.format_census(rep))


@main.command("complex")
@click.option("--g", "g", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--force-large", is_flag=True)
def complex_(g, n, force_large):
    """Chain group dimensions of the relation-resolved complex."""
    cx = _complex(g, n, force_large)
    for k in cx.degrees:
        log = cx.log[k]
        click.echo(f"C^{k}: dim {len(cx.basis[k])} ({log['generators']} generators, rank {log['rank']})")
    click.echo(f"d^2 = 0: {pipeline.check_d_squared(cx)}")


@main.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--full-specht/--dims-only", default=True)
@click.option("--force-large", is_flag=True)
def cohomology(g, n, full_specht, force_large):
    """Per-degree cohomology and its Specht decomposition."""
    cx = _complex(g, n, force_large)
    for k, entry in pipeline.cohomology(cx, specht=full_specht).items():
        if entry["dim"]:
            text = f"  {entry['specht']}" if entry["specht"] else ""
            click.echo(f"H^{k}: dim {entry['dim']}{text}")


@main.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
def euler(g, n):
    """Signed Specht multiplicities of the equivariant Euler characteristic."""
    cx = pipeline.build_complex(g, n, force=True)
    click.echo(format_decomposition(signed_multiplicities(pipeline.equivariant_euler(cx))))


@main.command("leading-terms")
@click.option("--reduced-excess", type=int, required=True)
@click.option("--g", "g", type=int)
@click.option("--n", "n", type=int)
def leading_terms(reduced_excess, g, n):
    """Target representations hit by each source, then the elimination survivors."""
    pairs = pipeline.excess_pairs(reduced_excess)
    g, n = (g, n) if g is not None else pairs[-1]
    complexes = pipeline.excess_complexes(reduced_excess, None)
    for src, tgts in pipeline.leading_term_report(reduced_excess, g, n, complexes).items():
        click.echo(f"{src} -> {' '.join(tgts) or '-'}")
    res = pipeline.eliminate_representations(reduced_excess, complexes)
    click.echo(f"survivors: {len(res.survivors)}")
    for r in res.survivors:
        click.echo(f"  {r.id} {r.family} {r.edge_group}-n n in "
                   f"{[nn for _, nn in r.existence_range()]}")


@main.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
def verify(g, n):
    """Invariant battery; exit status 1 on any failure."""
    report = pipeline.verify(g, n)
    for name, ok in report.items():
        click.echo(f"{'PASS' if ok else 'FAIL'} {name}")
    sys.exit(0 if all(report.values()) else 1)


@main.command()
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "dot"]), required=True)
@click.option("--out", "out", type=click.Path(file_okay=False), required=True)
@click.option("--reduced-excess", type=int, default=3, show_default=True)
def export(fmt, out, reduced_excess):
    """Write the census to files."""
    for path in pipeline.export_census(reduced_excess, fmt, out):
        click.echo(str(path))


if __name__ == "__main__":
    main()
