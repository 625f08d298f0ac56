"""Command-line interface for ctower.

Standard output carries JSON only; diagnostics and logs go to standard error.
Exit codes: 0 success, 1 a query or check answered false under --assert,
2 invalid input.
"""

import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, List, NoReturn, Optional

import click
import yaml
from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .builder import (
    ConstructionState,
    StatusReport,
    build,
    build_pid,
    parse_enumeration,
    self_check,
)
from .config import Config, default_config_dict, load_config
from .exceptions import CTowerError
from .expr import Gen, eval_expr, parse_expr
from .numring import (
    load_presentation_file,
    norm,
    nr_divides,
    nr_is_prime,
    nr_is_unit,
    quotient_reps,
)
from .numring.presentation import list_bundled
from .predicate_loader import PredicateLoader
from .predicates.spec import PredicateSpec
from .reporter_factory import ReporterFactory
from .ring.elements import PrimeId
from .ring.serialization import dumps_tower, element_to_json, loads_tower
from .ring.tower import Tower
from .sampling import surrogate_checks

console = Console(stderr=True)
logger = logging.getLogger(__name__)

EXIT_FALSE = 1
EXIT_INVALID = 2


def _setup_logging(level: str) -> None:
    root = logging.getLogger("ctower")
    root.handlers = [RichHandler(console=console, show_path=False, rich_tracebacks=True)]
    root.setLevel(level)
    root.propagate = False


def _emit(data: Any) -> None:
    click.echo(json.dumps(data, indent=2))


def _fail(message: str, code: int = EXIT_INVALID) -> NoReturn:
    console.print(f"[red]{message}[/red]")
    sys.exit(code)


@contextmanager
def _handle_errors() -> Iterator[None]:
    try:
        yield
    except CTowerError as e:
        logger.debug("command failed", exc_info=True)
        _fail(f"{type(e).__name__}: {e}")
    except OSError as e:
        _fail(f"I/O error: {e}")


def _load_tower(path: Path, config: Config) -> Tower:
    return loads_tower(path.read_text(encoding="utf-8"), config.build.base_prime_window)


def _write_tower(tower: Tower, out: Optional[Path]) -> None:
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(dumps_tower(tower) + "\n", encoding="utf-8")
        logger.info("tower written to %s", out)


def _emit_report(report: StatusReport, output_format: str) -> None:
    click.echo(ReporterFactory().get_reporter(output_format).format_report(report))


_format_option = click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(ReporterFactory().get_available_formats()),
    default="json",
    show_default=True,
    help="Report format",
)


def _prime_ref(text: str) -> PrimeId:
    """"p:3", "x:0:1", or the expression forms "p(3)", "x(0,1)"."""
    if "(" in text:
        expr = parse_expr(text)
        if isinstance(expr, Gen):
            return expr.pid
        raise click.BadParameter(f"{text!r} does not name a tracked prime", param_hint="--by")
    return PrimeId.parse(text)


def _parse_alg(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise click.BadParameter(f"{text!r} is not an integer or JSON array", param_hint=what) from e


@click.group()
@click.version_option(version=__version__, prog_name="ctower")
@click.option(
    "--config",
    "-c",
    type=click.Path(exists=True, path_type=Path),
    help="Configuration file path",
)
@click.option("--verbose", "-v", is_flag=True, help="Log every extension and stage decision")
@click.option("--quiet", "-q", is_flag=True, help="Only log errors")
@click.pass_context
def cli(ctx: click.Context, config: Optional[Path], verbose: bool, quiet: bool) -> None:
    """ctower: towers of computable UFDs and number-ring primality."""
    ctx.ensure_object(dict)
    try:
        ctx.obj["config"] = load_config(config)
    except ValueError as e:
        _fail(f"Error loading configuration: {e}")

    if quiet:
        level = "ERROR"
    elif verbose:
        level = "DEBUG"
    else:
        level = ctx.obj["config"].log_level
    _setup_logging(level)


@cli.group()
def tower() -> None:
    """Build, query and check predicate-driven towers."""


@tower.command("build")
@click.option("--predicate", "-p", required=True, help="Predicate file, inline JSON, builtin name or threshold:a,b,c")
@click.option("--stages", "-n", type=click.IntRange(min=0), required=True, help="Number of stages to run")
@click.option("--out", "-o", type=click.Path(path_type=Path), help="Write the tower here")
@click.option("--fail-fast", is_flag=True, help="Stop at the first self-check violation")
@_format_option
@click.pass_context
def tower_build(
    ctx: click.Context,
    predicate: str,
    stages: int,
    out: Optional[Path],
    fail_fast: bool,
    output_format: str,
) -> None:
    """Run the stage construction for a predicate and print its report."""
    config: Config = ctx.obj["config"]
    if fail_fast:
        config.build.fail_fast = True
    with _handle_errors():
        loader = PredicateLoader(config)
        pred = loader.build(PredicateSpec.parse(predicate))
        result = build(pred, stages, config)
        _write_tower(result.tower, out)
        _emit_report(result.report, output_format)


@tower.command("query")
@click.option("--tower", "tower_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--expr", "-e", "text", required=True, help='Element expression, e.g. "y(0,0)^2 + y(0,0)^5"')
@click.option(
    "--op",
    type=click.Choice(["element", "is_unit", "deg_x", "deg_y", "divides", "exact_div"]),
    default="element",
    show_default=True,
)
@click.option("--by", help="Tracked prime for divides/exact_div: p:i, x:i:k or y:i:k")
@click.option("--assert", "assert_", is_flag=True, help="Exit 1 when a yes/no answer is no")
@click.pass_context
def tower_query(
    ctx: click.Context, tower_path: Path, text: str, op: str, by: Optional[str], assert_: bool
) -> None:
    """Evaluate an expression at the top level and answer a query on it."""
    config: Config = ctx.obj["config"]
    if op in ("divides", "exact_div") and not by:
        raise click.UsageError(f"--op {op} needs --by")
    with _handle_errors():
        t = _load_tower(tower_path, config)
        element = eval_expr(t, text)
        data = {"expr": text, "level": element.level, "element": element_to_json(element), "op": op}
        result: Any = None
        if op == "is_unit":
            result = t.is_unit(element)
        elif op == "deg_x":
            result = t.deg_x(element)
        elif op == "deg_y":
            result = t.deg_y(element)
        elif op == "divides":
            result = t.divides(_prime_ref(by or ""), element)
        elif op == "exact_div":
            result = element_to_json(t.exact_div(_prime_ref(by or ""), element))
        if op != "element":
            data["result"] = result
        _emit(data)
    if assert_ and result is False:
        sys.exit(EXIT_FALSE)


@tower.command("check")
@click.option("--tower", "tower_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option(
    "--samples",
    type=click.IntRange(min=0),
    default=None,
    help="Sampled oracle checks to run (default: sampling.samples, 0 to skip)",
)
@click.option("--assert", "assert_", is_flag=True, help="Exit 1 on any violation")
@click.pass_context
def tower_check(
    ctx: click.Context, tower_path: Path, samples: Optional[int], assert_: bool
) -> None:
    """Self-check the invariants of a saved tower."""
    config: Config = ctx.obj["config"]
    with _handle_errors():
        t = _load_tower(tower_path, config)
        violations = self_check(ConstructionState.from_tower(t))
        violations += surrogate_checks(t, samples, config.seed, config)
        _emit({"levels": len(t), "violations": [v.to_dict() for v in violations]})
    if assert_ and violations:
        sys.exit(EXIT_FALSE)


@cli.group()
def pid() -> None:
    """Towers whose units are the enumerated base primes."""


@pid.command("build")
@click.option("--enum", "enumeration", default="", help='Enumeration as "i@stage,i@stage"')
@click.option("--stages", "-n", type=click.IntRange(min=0), required=True)
@click.option("--out", "-o", type=click.Path(path_type=Path), help="Write the tower here")
@_format_option
@click.pass_context
def pid_build(
    ctx: click.Context, enumeration: str, stages: int, out: Optional[Path], output_format: str
) -> None:
    """Localize at p_i at the stage where i is enumerated."""
    config: Config = ctx.obj["config"]
    with _handle_errors():
        result = build_pid(parse_enumeration(enumeration), stages, config)
        _write_tower(result.tower, out)
        _emit_report(result.report, output_format)


@cli.command()
@click.option("--table", "-t", required=True, help="Presentation JSON file or bundled name")
@click.option(
    "--op",
    type=click.Choice(["norm", "is_unit", "is_prime", "divides", "reps"]),
    required=True,
)
@click.option("--elem", "-e", required=True, help='Integer or coordinate array, e.g. 3 or "[1,-1]"')
@click.option("--rhs", help="Dividend for --op divides")
@click.option("--assert", "assert_", is_flag=True, help="Exit 1 when a yes/no answer is no")
@click.pass_context
def numring(
    ctx: click.Context, table: str, op: str, elem: str, rhs: Optional[str], assert_: bool
) -> None:
    """Decisions in a ring of integers given by an integral basis."""
    config: Config = ctx.obj["config"]
    if op == "divides" and rhs is None:
        raise click.UsageError("--op divides needs --rhs")
    radius = config.numring.max_search_radius
    with _handle_errors():
        p = load_presentation_file(table)
        alpha = p.parse_element(_parse_alg(elem, "--elem"))
        answer: Any
        if op == "norm":
            answer = norm(p, alpha)
        elif op == "is_unit":
            answer = nr_is_unit(p, alpha)
        elif op == "is_prime":
            answer = nr_is_prime(p, alpha, radius)
        elif op == "reps":
            answer = [list(r) for r in quotient_reps(p, alpha, radius)]
        else:
            beta = p.parse_element(_parse_alg(rhs or "", "--rhs"))
            answer, quotient = nr_divides(p, alpha, beta)
            _emit({"divides": answer, "quotient": list(quotient) if quotient else None})
        if op != "divides":
            _emit({op: answer})
    if assert_ and answer is False:
        sys.exit(EXIT_FALSE)


@cli.command()
@click.option("--predicates", is_flag=True, help="List builtin and plugin predicates")
@click.option("--presentations", is_flag=True, help="List bundled number-ring presentations")
@click.pass_context
def info(ctx: click.Context, predicates: bool, presentations: bool) -> None:
    """Show available predicates, presentations and the active configuration."""
    config: Config = ctx.obj["config"]
    show_all = not predicates and not presentations
    data: dict = {"version": __version__}
    if predicates or show_all:
        data["predicates"] = PredicateLoader(config).describe()
    if presentations or show_all:
        data["presentations"] = list_bundled()
    if show_all:
        data["formats"] = ReporterFactory().get_available_formats()
        data["config"] = config.model_dump(mode="json")
    _emit(data)


@cli.command()
@click.argument("config_path", type=click.Path(path_type=Path))
@click.option("--force", is_flag=True, help="Overwrite existing configuration file")
def init_config(config_path: Path, force: bool) -> None:
    """Create a YAML configuration file with the default settings.

    CONFIG_PATH: Path where the configuration file will be created
    """
    if config_path.exists() and not force:
        console.print("Use --force to overwrite")
        _fail(f"Configuration file already exists: {config_path}")

    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text(yaml.safe_dump(default_config_dict(), sort_keys=False), encoding="utf-8")
    console.print(f"[green]Configuration file created: {config_path}[/green]")
    _emit({"config": str(config_path)})


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point for the CLI."""
    cli(args=argv)


if __name__ == "__main__":
    main()
