"""
Command-line interface for the Transitivity Verifier

This script lists, runs and reports the verifier scenarios and regenerates the
golden files.

    python -m utils.run_verifier list
    python -m utils.run_verifier run half_transitive_table --q 19
    python -m utils.run_verifier run table1 --q 19
    python -m utils.run_verifier run-all --skip-slow --jobs 4
    python -m utils.run_verifier report --format tsv --out outputs/reports/run.tsv
    python -m utils.run_verifier golden --write
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from project_structure import report_file
from core.errors import NotFoundError, VerifierError
from core.models.results import ScenarioResult
from core.tools.scenarios import REGISTRY, default_runs, get_scenario, run_scenario
from utils.config import GOLDEN_DIR, JOBS, LOG_LEVEL
from utils.golden_store import REPORT_FORMATS, load_goldens, render_report, update_goldens, write_report

console = Console()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNKNOWN = 2

# CLI flags that become scenario parameters
PARAM_FLAGS = ("q", "group", "name", "z0", "c", "p")

def print_header():
    """Print a stylized header."""
    console.print(Panel(
        "[bold]Transitivity Verifier[/bold]\nhalf-transitive linear groups and 3/2-transitive permutation groups",
        style="bold blue",
    ))

def setup_logging(verbose: bool = False):
    """Configure the root logger with a rich handler."""
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="run_verifier", description="Transitivity Verifier")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="List all scenarios and the claim each checks")

    run = sub.add_parser("run", help="Run one scenario")
    run.add_argument("scenario", help="Scenario id (see list)")
    run.add_argument("--q", type=int, help="Field size")
    run.add_argument("--group", type=str, help="Catalogued permutation group")
    run.add_argument("--name", type=str, help="Bound name")
    run.add_argument("--z0", type=int, help="Order of the scalar subgroup")
    run.add_argument("--c", type=int, help="Degree of the deleted permutation module")
    run.add_argument("--p", type=int, help="Characteristic of the deleted permutation module")

    run_all = sub.add_parser("run-all", help="Run every scenario with its default parameters")
    run_all.add_argument("--skip-slow", action="store_true", help="Skip slow-tagged runs")

    report = sub.add_parser("report", help="Run every scenario and write a report")
    report.add_argument("--format", choices=REPORT_FORMATS, default="json", help="Report format (default: json)")
    report.add_argument("--out", type=Path, help="Output file (default: outputs/reports/report.<format>)")
    report.add_argument("--skip-slow", action="store_true", help="Skip slow-tagged runs")
    report.add_argument("--no-timing", action="store_true", help="Write runtime_ms as 0")

    golden = sub.add_parser("golden", help="Regenerate golden files from fresh runs")
    golden.add_argument("--write", action="store_true", help="Actually overwrite the golden files")
    golden.add_argument("--scenario", action="append", help="Limit to these scenario ids")
    golden.add_argument("--skip-slow", action="store_true", help="Skip slow-tagged runs")

    for p in (run, run_all, report, golden):
        p.add_argument("--jobs", "-j", type=int, default=JOBS, help=f"Worker processes (default: {JOBS})")
        p.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
        p.add_argument("--golden-dir", type=Path, default=GOLDEN_DIR, help="Golden file directory")
    return parser

def resolve_runs(scenario: str, args: argparse.Namespace) -> List[Tuple[str, Dict[str, Any]]]:
    """
    Parameter sets for `run`: defaults matching the given flags, else a default with the flags applied.

    Runs are keyed by the canonical scenario id even when an alias was given.
    """
    spec = get_scenario(scenario)
    given = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k, None) is not None}
    if not given:
        return [(spec.id, dict(p)) for p in spec.param_sets]
    matching = [p for p in spec.param_sets if all(p.get(k) == v for k, v in given.items())]
    if matching:
        return [(spec.id, dict(p)) for p in matching]
    base = dict(spec.param_sets[0]) if spec.param_sets else {}
    base.update(given)
    return [(spec.id, base)]

def execute(runs: Sequence[Tuple[str, Dict[str, Any]]], jobs: int, golden_dir: Path) -> List[ScenarioResult]:
    """Run scenarios, in parallel when jobs > 1; result order follows runs."""
    goldens = load_goldens(sorted({sid for sid, _ in runs}), golden_dir)
    if jobs > 1 and len(runs) > 1:
        return Parallel(n_jobs=jobs)(delayed(run_scenario)(sid, params, goldens[sid]) for sid, params in runs)
    results = []
    for sid, params in runs:
        console.log(f"Running [bold]{sid}[/bold] {params}")
        results.append(run_scenario(sid, params, goldens[sid]))
    return results

def print_results(results: List[ScenarioResult]):
    """Print a summary table of results."""
    colors = {"pass": "green", "fail": "red", "skip": "yellow"}
    table = Table(title="Scenario results")
    table.add_column("Scenario", style="bold")
    table.add_column("Params")
    table.add_column("Status")
    table.add_column("ms", justify="right")
    for r in results:
        table.add_row(r.scenario, str(r.params), f"[{colors[r.status]}]{r.status}[/{colors[r.status]}]", str(r.runtime_ms))
    console.print(table)
    for r in results:
        for mismatch in r.mismatches:
            console.print(f"[red]{r.scenario} {r.params}: {mismatch}[/red]")
        for obs in r.observations:
            if obs.label == "error":
                console.print(f"[red]{r.scenario} {r.params}: {obs.value}[/red]")

def exit_status(results: List[ScenarioResult]) -> int:
    return EXIT_FAILED if any(r.status == "fail" for r in results) else EXIT_OK

def cmd_list() -> int:
    table = Table(title=f"{len(REGISTRY)} scenarios")
    table.add_column("Scenario", style="bold")
    table.add_column("Aliases")
    table.add_column("Runs", justify="right")
    table.add_column("Claim")
    for sid, spec in REGISTRY.items():
        table.add_row(sid, ", ".join(spec.aliases), str(len(spec.param_sets)), spec.claim)
    console.print(table)
    return EXIT_OK

def cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the verifier CLI.

    Returns:
        0 when every executed scenario passed or was skipped, 1 on a failure,
        2 for an unknown scenario
    """
    args = build_parser().parse_args(argv)
    setup_logging(getattr(args, "verbose", False))

    if args.command == "list":
        return cmd_list()

    try:
        if args.command == "run":
            runs = resolve_runs(args.scenario, args)
        elif args.command == "golden" and args.scenario:
            runs = [r for sid in args.scenario for r in resolve_runs(sid, argparse.Namespace())]
        else:
            runs = default_runs(skip_slow=args.skip_slow)
    except NotFoundError as e:
        console.print(f"[bold red]{e}[/bold red]")
        return EXIT_UNKNOWN

    print_header()
    results = execute(runs, args.jobs, args.golden_dir)

    if args.command == "report":
        out = args.out or report_file(args.format)
        write_report(results, out, args.format, timing=not args.no_timing)
        console.print(f"Report written to [bold]{out}[/bold]")
    elif args.command == "golden":
        if not args.write:
            console.print("[yellow]Dry run: pass --write to overwrite the golden files.[/yellow]")
            console.print(render_report(results, "text", timing=False))
            return EXIT_OK
        paths = update_goldens(results, args.golden_dir)
        console.print(f"[bold green]Wrote {len(paths)} golden files.[/bold green]")
        return EXIT_OK

    print_results(results)
    return exit_status(results)

def main():
    sys.exit(cli(sys.argv[1:]))

if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        console.print("\n[bold red]Operation cancelled by user.[/bold red]")
        sys.exit(130)
    except VerifierError as e:
        console.print(f"\n[bold red]Error: {e}[/bold red]")
        sys.exit(EXIT_FAILED)
    except Exception as e:
        console.print(f"\n[bold red]Unexpected error: {e}[/bold red]")
        sys.exit(EXIT_FAILED)
