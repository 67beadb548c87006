"""
Command line interface

    tame-langlands orbits p=3 f0=1 m=2
    tame-langlands signs "module p=3 C=4 mu=1 varpi=1 varpi_alpha=1 summands=a:1"
    tame-langlands glauberman "action G=5x5 A=4 aut=1,0;0,2"
    tame-langlands mu tame-p3-n2
    tame-langlands selftest --quick
    tame-langlands table GL2(F3)

Exit codes: 0 when every check passes, 1 when a counterexample is printed, 2 on bad input.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import click

from tame_langlands.config.config_manager import get_config_manager, reset_config_manager
from tame_langlands.exceptions import InputError, ValidationError
from tame_langlands.plugins.characters import regular_orbits
from tame_langlands.plugins.correspondence import (
    MU_COLUMNS,
    RamificationDatum,
    assemble_mu,
    datum_by_name,
    standard_data,
)
from tame_langlands.plugins.finite_groups import cached_character_table, resolve_group
from tame_langlands.plugins.glauberman import OperatorAction, composite_is_bijection, composite_map, glauberman_map
from tame_langlands.plugins.symplectic import (
    known_exception,
    signs_lemma_check,
    signs_lemma_sweep,
    t_invariants,
)
from tame_langlands.plugins.tame_fields import relative_galois_group, unramified_lift
from tame_langlands.selftest import SelftestBounds, render_report, run_selftest
from tame_langlands.utils.literals import (
    int_field,
    parse_action,
    parse_datum,
    parse_field,
    parse_module,
    read_literals,
    split_tokens,
)
from tame_langlands.utils.logger import configure_logging, log_error
from tame_langlands.utils.validators import OUTPUT_FORMATS, validate_job_options

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2


@dataclass
class JobSpec:
    command: str
    literals: list[str] = field(default_factory=list)
    output: str | None = None
    output_format: str = "tsv"
    jobs: int = 1
    cache_dir: str | None = None


@dataclass
class Table:
    columns: list[str]
    rows: list[list[str]] = field(default_factory=list)
    text: list[str] = field(default_factory=list)
    failed: bool = False

    def render(self, output_format: str) -> str:
        if output_format == "text":
            return "".join(line + "\n" for line in self.text)
        lines = ["# " + "\t".join(self.columns)]
        lines.extend("\t".join(row) for row in self.rows)
        return "\n".join(lines) + "\n"


def job_options(command):
    """The options every subcommand shares"""
    options = [
        click.option("--input", "input_path", type=click.Path(dir_okay=False), help="File with one literal per line"),
        click.option("--output", "output", type=click.Path(dir_okay=False), help="Write the report here"),
        click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None),
        click.option("--jobs", type=int, default=None, help="Worker processes for sweeps"),
        click.option("--cache-dir", type=click.Path(file_okay=False), default=None),
        click.option("--bound-group-order", type=int, default=None),
        click.option("--bound-dim", type=int, default=None),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def build_job(command: str, literals: tuple[str, ...], input_path, output, output_format, jobs, cache_dir,
              bound_group_order, bound_dim) -> JobSpec:
    ok, errors = validate_job_options(output_format, jobs, bound_group_order, bound_dim)
    if not ok:
        raise InputError("; ".join(errors))
    config = get_config_manager()
    config.set_overrides(
        output_format=output_format,
        jobs=jobs,
        cache_dir=cache_dir,
        bound_group_order=bound_group_order,
        bound_dim=bound_dim,
    )
    lines = list(literals)
    if input_path:
        lines.extend(line for _, line in read_literals(input_path))
    return JobSpec(
        command=command,
        literals=lines,
        output=output,
        output_format=config.get_config_value("output_format", "tsv"),
        jobs=int(config.get_config_value("jobs", 1)),
        cache_dir=str(config.get_cache_dir()),
    )


def emit(job: JobSpec, table: Table) -> None:
    report = table.render(job.output_format)
    if job.output:
        with open(job.output, "w") as f:
            f.write(report)
    else:
        click.echo(report, nl=False)


def run_job(ctx: click.Context, command: str, literals, options: dict, body) -> None:
    """Build the job, run body(job) -> Table, write it and exit with the right code"""
    try:
        job = build_job(command, tuple(literals), **options)
        table = body(job)
    except ValidationError as e:
        log_error(str(e), f"tame-langlands {command}")
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    emit(job, table)
    ctx.exit(EXIT_COUNTEREXAMPLE if table.failed else EXIT_OK)


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="Project config file")
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr")
def cli(config_path, verbose):
    """Exact finite models of the tame local Langlands construction"""
    configure_logging(verbose)
    reset_config_manager(config_path)


# orbits


def _orbit_table(job: JobSpec) -> Table:
    table = Table(["field", "m", "orbit", "size", "representative", "members"])
    for line in job.literals:
        fields = split_tokens("orbits " + line, "orbits")
        m = int_field(fields, "m", 1)
        bound = int_field(fields, "bound", 1)
        E = parse_field("ext " + " ".join(f"{k}={v}" for k, v in fields.items() if k not in ("m", "bound")))
        E_m = unramified_lift(E, m)
        for i, found in enumerate(regular_orbits(E_m, relative_galois_group(E_m, E), bound)):
            members = ";".join(f"{chi.a}/{chi.prime_turn}" for chi in found.members)
            table.rows.append([E.literal(), str(m), str(i), str(len(found)), found.representative.literal(), members])
            table.text.append(f"{E.literal()} m={m} orbit {i}: {found.representative.literal()} (size {len(found)})")
    return table


@cli.command()
@click.argument("tokens", nargs=-1)
@job_options
@click.pass_context
def orbits(ctx, tokens, **options):
    """Delta-regular character orbits, e.g. `orbits p=3 f0=1 m=2`"""
    literals = [" ".join(tokens)] if tokens else []
    run_job(ctx, "orbits", literals, options, _orbit_table)


# signs


def _signs_table(job: JobSpec) -> Table:
    table = Table(["module", "t0", "t1", "t", "lemma"])
    for line in job.literals:
        M = parse_module(line)
        c = M.mu if M.mu is not None else (M.group.generators() or [M.group.identity()])[0]
        triple = t_invariants(M, c)
        if None in (M.mu, M.varpi, M.varpi_alpha):
            verdict = "n/a"
        elif signs_lemma_check(M):
            verdict = "pass"
        else:
            verdict = "fail:known" if known_exception(M) else "fail"
            table.failed = True
        t1 = "trivial" if triple.t1_is_trivial() else "order2"
        table.rows.append([M.literal(), f"{triple.t0:+d}", t1, f"{triple.t:+d}", verdict])
        table.text.append(f"{M.literal()}: {triple.render()} lemma={verdict}")
    return table


def _sweep_table(job: JobSpec) -> Table:
    report = signs_lemma_sweep(jobs=job.jobs)
    table = Table(["module", "lhs", "rhs", "explained"])
    for failure in report.failures:
        table.rows.append([failure.module, f"{failure.lhs:+d}", f"{failure.rhs:+d}", "yes" if failure.explained else "no"])
        table.text.append(f"{failure.module}: {failure.lhs:+d} != {failure.rhs:+d}")
    table.text.append(
        f"{report.instances} instances, {report.failure_count} counterexamples"
        f" ({report.unlisted} composite and explained, not listed)"
    )
    table.failed = bool(report.unexplained)
    return table


@cli.command()
@click.argument("literal", required=False)
@click.option("--sweep", is_flag=True, help="Run the configured signs lemma sweep")
@job_options
@click.pass_context
def signs(ctx, literal, sweep, **options):
    """t-invariants of a module and the signs lemma verdict"""
    run_job(ctx, "signs", [literal] if literal else [], options, _sweep_table if sweep else _signs_table)


# glauberman


def _composite_rows(table: Table, line: str, action: OperatorAction) -> None:
    """Non-cyclic A: the composite of the cyclic steps, without signs"""
    mapping = composite_map(action)
    for rho, row in sorted(mapping.items()):
        table.rows.append([line, str(rho), str(row), "n/a", "n/a"])
        table.text.append(f"rho{rho} -> rho{row}^A")
    if not composite_is_bijection(action, mapping):
        table.failed = True
        table.text.append(f"{line}: not a bijection")


def _glauberman_table(job: JobSpec) -> Table:
    table = Table(["action", "rho", "rho_fixed", "epsilon", "extensions"])
    for line in job.literals:
        action = parse_action(line)
        if action.A.rank > 1:
            _composite_rows(table, line, action)
            continue
        gmap = glauberman_map(action)
        for r in gmap.records:
            table.rows.append([line, str(r.rho), str(r.rho_fixed), f"{r.epsilon:+d}", str(r.extension_count)])
            table.text.append(f"rho{r.rho} -> rho{r.rho_fixed}^A  epsilon={r.epsilon:+d}")
        if not gmap.is_bijection:
            table.failed = True
            table.text.append(f"{line}: not a bijection")
    return table


@cli.command()
@click.argument("literal", required=False)
@job_options
@click.pass_context
def glauberman(ctx, literal, **options):
    """The Glauberman correspondence with its signs"""
    run_job(ctx, "glauberman", [literal] if literal else [], options, _glauberman_table)


# mu


def describe_character(chi) -> str:
    if chi.is_trivial():
        return "1"
    if chi.is_unramified() and chi.prime_turn == Fraction(1, 2):
        return "chi2"
    return chi.literal()


def resolve_datum(text: str) -> RamificationDatum:
    if text.startswith("datum "):
        return parse_datum(text)
    try:
        return datum_by_name(text)
    except KeyError:
        raise InputError(f"{text!r} is neither a datum literal nor a shipped datum name")


def _mu_task(datum: RamificationDatum) -> tuple[list[str], str, bool]:
    record = assemble_mu(datum)
    text = (
        f"{datum.label}: mu∘N = {describe_character(record.character)} units={record.psi.value} "
        f"mu(varpi_F)={record.base_prime:+d} mu(varpi)={record.ramified_prime:+d} "
        f"lattice={len(record.candidates)} checks={'pass' if record.passed else ','.join(record.failed_checks())}"
    )
    return record.row(), text, record.passed


def _mu_table(job: JobSpec, data: list[RamificationDatum]) -> Table:
    table = Table(list(MU_COLUMNS))
    if job.jobs > 1 and len(data) > 1:
        with ProcessPoolExecutor(max_workers=job.jobs) as pool:
            results = list(pool.map(_mu_task, data))
    else:
        results = [_mu_task(d) for d in data]
    for row, text, passed in results:
        table.rows.append(row)
        table.text.append(text)
        table.failed = table.failed or not passed
    return table


@cli.command()
@click.argument("literal", required=False)
@click.option("--corpus", is_flag=True, help="Run every shipped datum")
@job_options
@click.pass_context
def mu(ctx, literal, corpus, **options):
    """The discrepancy character of a datum literal or shipped datum name"""

    def body(job: JobSpec) -> Table:
        data = [resolve_datum(line) for line in job.literals]
        if corpus:
            data.extend(standard_data())
        if not data:
            raise InputError("no datum given")
        return _mu_table(job, data)

    run_job(ctx, "mu", [literal] if literal else [], options, body)


# selftest


@cli.command()
@click.option("--quick", is_flag=True, help="Reduced bounds")
@job_options
@click.pass_context
def selftest(ctx, quick, **options):
    """Run the acceptance checks"""
    try:
        job = build_job("selftest", (), **options)
    except ValidationError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    bounds = SelftestBounds(
        quick=quick,
        jobs=job.jobs,
        cache_dir=job.cache_dir,
        bound_group_order=int(get_config_manager().get_config_value("bound_group_order", 2000)),
    )
    results = run_selftest(bounds)
    report = render_report(results, quick)
    if job.output:
        with open(job.output, "w") as f:
            f.write(report)
    else:
        click.echo(report, nl=False)
    ctx.exit(EXIT_OK if all(r.passed for r in results) else EXIT_COUNTEREXAMPLE)


# table


def _character_table(job: JobSpec) -> Table:
    G = resolve_group(job.literals[-1])
    table_data = cached_character_table(G, job.cache_dir)
    columns = ["chi"] + [f"class{i}[{size}]" for i, size in enumerate(table_data.class_sizes)]
    table = Table(columns)
    for i, row in enumerate(table_data.rows):
        values = [repr(v) for v in row]
        table.rows.append([str(i)] + values)
        table.text.append(f"chi{i}: " + " | ".join(values))
    return table


@cli.command()
@click.argument("name")
@job_options
@click.pass_context
def table(ctx, name, **options):
    """Character table of a named small group, through the cache"""
    run_job(ctx, "table", [name], options, _character_table)


commands = [cli]


def main() -> None:
    cli(prog_name="tame-langlands")


if __name__ == "__main__":
    main()
