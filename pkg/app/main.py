"""
Command-line entry point

    python -m app.main <command> [options]

Reports go to stdout as `key = value` lines, logs to stderr. Exit codes: 0 computed,
1 internal consistency or construction failure, 2 parse/validation error, 3 OutOfScope
result under --strict.
"""
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional, Tuple

import click
import typer

from app.configs.environment_settings import get_settings
from app.pipelines.table_pipeline import (
    TableItem,
    default_table,
    evaluate_item,
    load_batch,
    parse_surface_spec,
    run_batch,
)
from app.utils.report import Report, format_value, moduli_report
from config_manager import ConfigManager
from libs.lab_config import LabConfig
from libs.local_model_service import (
    SemisimpleType,
    SimpleFactor,
    component_smooth,
    find_singular_witness,
    is_cyclic_type,
    local_quiver,
    semisimple_point_smooth,
    witness_via_local_model,
)
from libs.moduli_service import (
    admits_simples,
    bundle_identity_holds,
    extended_dynkin_lower_bound,
    hilb_decomposition,
    report_preprojective,
    report_surface,
    violating_decomposition,
)
from libs.quiver_service import (
    ConsistencyError,
    DimVector,
    Quiver,
    classify,
    format_dim_vector,
    format_quiver,
    load_quiver,
    p_form,
    parse_dim_vector,
)
from libs.rep_lab_service import (
    ConstructionError,
    RepLabInterface,
    build_surface_simple,
    build_two_sided_point,
    expected_euler_characteristic,
    expected_tangent_dim,
    format_rep,
    load_rep,
)
from libs.rep_lab_service.linalg import format_scalar
from libs.roots_service import classify_root, positive_roots_below

logger = logging.getLogger(__name__)

app = typer.Typer(help="Dimensions, smoothness and local structure of Nori-Hilbert schemes", add_completion=False)
quiver_app = typer.Typer(help="Quiver files", add_completion=False)
rep_app = typer.Typer(help="Explicit matrix representations", add_completion=False)
surface_app = typer.Typer(help="Surface-group representation builders", add_completion=False)
app.add_typer(quiver_app, name="quiver")
app.add_typer(rep_app, name="rep")
app.add_typer(surface_app, name="surface")

QUIVER_OPTION = typer.Option(None, "-q", "--quiver", help="Quiver file")
DIM_OPTION = typer.Option(None, "--dim", help="Dimension vector: '2,1,1' or 'a=2 b=1'")
SURFACE_OPTION = typer.Option(None, "--surface", help="Surface signature 'g=<g> n=<n>'")
SEED_OPTION = typer.Option(None, "--seed", help="Seed of random draws (falls back to CY2_SEED, then config.yml)")
TRIALS_OPTION = typer.Option(None, "--trials", help="Random trials")
STRICT_OPTION = typer.Option(False, "--strict", help="Exit 3 when the result is OutOfScope")


@app.callback()
def configure(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(None, "--config", help="Configuration file (CY2_CONFIG)"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Logging level (CY2_LOG_LEVEL)"),
):
    settings = get_settings()
    manager = ConfigManager(str(config) if config is not None else settings.config)
    level = (log_level or settings.log_level or manager.get("logging.level", "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format=manager.get("logging.format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
        stream=sys.stderr,
        force=True,
    )
    ctx.obj = {"manager": manager, "settings": settings}


def _lab_config(ctx: typer.Context, seed: Optional[int] = None, trials: Optional[int] = None) -> LabConfig:
    settings = ctx.obj["settings"]
    return ctx.obj["manager"].lab_config(
        seed=seed if seed is not None else settings.seed,
        trials=trials if trials is not None else settings.trials,
        rational_bound=settings.rational_bound,
    )


@contextmanager
def _exit_codes():
    try:
        yield
    except (ConsistencyError, ConstructionError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        typer.echo(f"error = {e}", err=True)
        raise typer.Exit(1)
    except (ValueError, OSError, KeyError) as e:
        typer.echo(f"error = {e}", err=True)
        raise typer.Exit(2)


def _emit(report: Report, strict: bool = False) -> None:
    typer.echo(report.render(), nl=False)
    if strict and report.out_of_scope:
        raise typer.Exit(3)


def _load(quiver_file: Optional[Path], dim: Optional[str]) -> Tuple[Quiver, DimVector]:
    if quiver_file is None:
        raise ValueError("A quiver file is required (-q)")
    quiver, file_dim = load_quiver(quiver_file)
    if dim is not None:
        return quiver, parse_dim_vector(quiver, dim)
    if file_dim is None:
        raise ValueError("No dimension vector: pass --dim or add a dim line to the quiver file")
    return quiver, file_dim


def _parse_factor(quiver: Quiver, spec: str) -> SimpleFactor:
    """'<vector>x<mult>' with an optional ':distinct' suffix, e.g. '1,0x2' or '1x2:distinct'"""
    text, _, flag = spec.partition(":")
    if flag not in ("", "distinct"):
        raise ValueError(f"Unknown factor flag '{flag}'")
    vector, _, multiplicity = text.rpartition("x")
    if not vector:
        vector, multiplicity = text, "1"
    return SimpleFactor(
        dim=tuple(parse_dim_vector(quiver, vector)), multiplicity=int(multiplicity), distinct=flag == "distinct"
    )


def _factor_lines(quiver: Quiver, sstype: SemisimpleType) -> List[str]:
    return [
        f"factor {','.join(str(x) for x in f.dim)} x{f.multiplicity}" + (" distinct" if f.distinct else "")
        for f in sstype.factors
    ]


@quiver_app.command("check")
def quiver_check(quiver_file: Path = QUIVER_OPTION):
    """Parse a quiver file and classify its components"""
    with _exit_codes():
        if quiver_file is None:
            raise ValueError("A quiver file is required (-q)")
        quiver, alpha = load_quiver(quiver_file)
        report = Report().add("vertices", quiver.vertex_count).add("arrows", quiver.arrow_count)
        for quiver_class in classify(quiver):
            description = f"{','.join(quiver_class.vertices)} {quiver_class.tag.value}"
            if quiver_class.type_name:
                description += f" {quiver_class.type_name}"
            if quiver_class.delta is not None:
                description += f" delta={format_value(quiver_class.delta)}"
            report.add("component", description)
        if alpha is not None:
            report.add("dim", format_dim_vector(quiver, alpha)).add("p", p_form(quiver, alpha))
        report.add("status", "ok")
    _emit(report)


@app.command("roots")
def roots(quiver_file: Path = QUIVER_OPTION, below: Optional[str] = typer.Option(None, "--below")):
    """Positive roots below a bound, one per line"""
    with _exit_codes():
        quiver, bound = _load(quiver_file, below)
        found = positive_roots_below(quiver, bound)
        lines = [f"root = {format_dim_vector(quiver, beta)}" for beta in found]
        report = Report().raw(lines).add("count", len(found))
    _emit(report)


@app.command("simples")
def simples(quiver_file: Path = QUIVER_OPTION, dim: Optional[str] = DIM_OPTION):
    """Whether Rep^α Π(Q) contains simple representations"""
    with _exit_codes():
        quiver, alpha = _load(quiver_file, dim)
        root = classify_root(quiver, alpha)
        report = Report().add("dim_vector", tuple(alpha)).add("root", root.tag).add("p", p_form(quiver, alpha))
        certificate = violating_decomposition(quiver, alpha)
        if certificate is not None:
            report.add("decomposition", " + ".join(format_value(part) for part in certificate.parts))
            report.add("p_sum", certificate.p_total)
        report.add("admits_simples", admits_simples(quiver, alpha))
    _emit(report)


def _dims_or_smooth(
    ctx: typer.Context,
    quiver_file: Optional[Path],
    dim: Optional[str],
    surface: Optional[str],
    total: Optional[int],
    batch: Optional[Path],
    strict: bool,
    with_dims: bool,
) -> None:
    with _exit_codes():
        reports: List[Report] = []
        if batch is not None:
            config = _lab_config(ctx)
            reports = run_batch(load_batch(batch), n_jobs=config.n_jobs, with_dims=with_dims)
        elif surface is not None:
            genus, n = parse_surface_spec(surface)
            reports = [moduli_report(report_surface(genus, n), with_dims=with_dims)]
        elif total is not None:
            quiver, _ = load_quiver(quiver_file) if quiver_file is not None else (None, None)
            if quiver is None:
                raise ValueError("--total needs a quiver file (-q)")
            for entry in hilb_decomposition(quiver, total):
                item = TableItem(label=f"dim {format_dim_vector(quiver, DimVector(entry.dim_vector))}",
                                 quiver=quiver, alpha=entry.dim_vector)
                reports.append(evaluate_item(item, with_dims=with_dims))
        else:
            quiver, alpha = _load(quiver_file, dim)
            moduli = report_preprojective(quiver, alpha)
            report = moduli_report(moduli, with_dims=with_dims)
            if with_dims:
                report.add("bundle_identity", bundle_identity_holds(moduli))
            else:
                report.add("rep_component", component_smooth(quiver, alpha).verdict)
            reports = [report]
    for index, report in enumerate(reports):
        if index:
            typer.echo("")
        typer.echo(report.render(), nl=False)
    if strict and reports and all(r.out_of_scope for r in reports):
        raise typer.Exit(3)


@app.command("dims")
def dims(
    ctx: typer.Context,
    quiver_file: Path = QUIVER_OPTION,
    dim: Optional[str] = DIM_OPTION,
    surface: Optional[str] = SURFACE_OPTION,
    total: Optional[int] = typer.Option(None, "--total", help="Report every α with |α| = n"),
    batch: Optional[Path] = typer.Option(None, "--batch", help="File of 'surface g= n=' or '<quiverfile> <vector>' lines"),
    strict: bool = STRICT_OPTION,
):
    """Dimensions of Rep, the quotient and Hilb, with the smoothness verdict"""
    _dims_or_smooth(ctx, quiver_file, dim, surface, total, batch, strict, with_dims=True)


@app.command("smooth")
def smooth(
    ctx: typer.Context,
    quiver_file: Path = QUIVER_OPTION,
    dim: Optional[str] = DIM_OPTION,
    surface: Optional[str] = SURFACE_OPTION,
    batch: Optional[Path] = typer.Option(None, "--batch"),
    strict: bool = STRICT_OPTION,
):
    """Smoothness verdict for Hilb"""
    _dims_or_smooth(ctx, quiver_file, dim, surface, None, batch, strict, with_dims=False)


@app.command("local-quiver")
def local_quiver_command(
    quiver_file: Path = QUIVER_OPTION,
    factor: List[str] = typer.Option([], "--factor", help="'<vector>x<mult>[:distinct]', repeatable"),
):
    """Local quiver and multiplicities at a semisimple point"""
    with _exit_codes():
        quiver, _ = load_quiver(quiver_file) if quiver_file is not None else (None, None)
        if quiver is None or not factor:
            raise ValueError("local-quiver needs -q and at least one --factor")
        sstype = SemisimpleType(factors=tuple(_parse_factor(quiver, spec) for spec in factor))
        model = local_quiver(quiver, sstype)
        report = Report().raw(format_quiver(model.local_quiver).splitlines())
        report.add("eps", model.eps)
        report.add("cyclic", is_cyclic_type(sstype))
        report.add("point_smooth", semisimple_point_smooth(quiver, sstype))
    _emit(report)


@app.command("witness")
def witness(
    ctx: typer.Context,
    quiver_file: Path = QUIVER_OPTION,
    dim: Optional[str] = DIM_OPTION,
    factor: List[str] = typer.Option([], "--factor", help="Search near this semisimple type instead"),
):
    """Cyclic non-simple semisimple type, or none"""
    with _exit_codes():
        config = _lab_config(ctx)
        if factor:
            quiver, _ = load_quiver(quiver_file) if quiver_file is not None else (None, None)
            if quiver is None:
                raise ValueError("witness needs a quiver file (-q)")
            sstype = SemisimpleType(factors=tuple(_parse_factor(quiver, spec) for spec in factor))
            found = witness_via_local_model(quiver, sstype, config=config)
        else:
            quiver, alpha = _load(quiver_file, dim)
            found = find_singular_witness(quiver, alpha, config=config)
            bound = extended_dynkin_lower_bound(quiver, alpha, config=config)
        report = Report()
        if found is None:
            report.raw(["none"])
        else:
            report.raw(_factor_lines(quiver, found)).add("cyclic", is_cyclic_type(found))
        if not factor and bound is not None:
            report.add("extended_dynkin", f"{bound.type_name} delta={format_value(bound.delta_in(quiver))}")
    _emit(report)


def _rep_report(path: Path) -> Tuple[Report, object]:
    rep = load_rep(path)
    report = Report().add("kind", rep.kind).add("n", rep.size)
    return report, rep


@rep_app.command("verify")
def rep_verify(path: Path = typer.Argument(..., help="Representation file")):
    """Check the defining relation"""
    with _exit_codes():
        report, rep = _rep_report(path)
        report.add("relation", rep.relation_holds())
    _emit(report)


@rep_app.command("end")
def rep_end(ctx: typer.Context, path: Path = typer.Argument(...)):
    """dim End"""
    with _exit_codes():
        report, rep = _rep_report(path)
        report.add("end_dim", RepLabInterface(_lab_config(ctx)).end_dim(rep))
    _emit(report)


@rep_app.command("tangent")
def rep_tangent(ctx: typer.Context, path: Path = typer.Argument(...)):
    """Tangent dimension of the representation variety, checked against End"""
    with _exit_codes():
        report, rep = _rep_report(path)
        lab = RepLabInterface(_lab_config(ctx))
        tangent, end = lab.tangent_dim(rep), lab.end_dim(rep)
        expected = expected_tangent_dim(rep, end)
        report.add("tangent_dim", tangent).add("end_dim", end).add("identity_holds", tangent == expected)
        if tangent != expected:
            raise ConsistencyError(f"Tangent dimension {tangent} differs from the End identity value {expected}")
    _emit(report)


@rep_app.command("profile")
def rep_profile(ctx: typer.Context, path: Path = typer.Argument(...)):
    """(h0, h1, h2, tangent) with the Euler characteristic check"""
    with _exit_codes():
        report, rep = _rep_report(path)
        profile = RepLabInterface(_lab_config(ctx)).profile(rep)
        expected = expected_euler_characteristic(rep)
        report.add("h0", profile.h0).add("h1", profile.h1).add("h2", profile.h2)
        report.add("tangent_dim", profile.tangent_dim)
        report.add("euler_characteristic", profile.euler_characteristic)
        report.add("euler_check", profile.euler_characteristic == expected)
    _emit(report)


@rep_app.command("cyclic")
def rep_cyclic(
    ctx: typer.Context,
    path: Path = typer.Argument(...),
    seed: Optional[int] = SEED_OPTION,
    trials: Optional[int] = TRIALS_OPTION,
):
    """Search a cyclic vector"""
    with _exit_codes():
        config = _lab_config(ctx, seed=seed, trials=trials)
        report = Report().add("seed", config.seed)
        rep = load_rep(path)
        result = RepLabInterface(config).cyclic(rep)
        report.add("cyclic", result.status)
        if result.vector is not None:
            report.add("vector", result.vector).add("rounds", result.rounds)
        if result.reason:
            report.add("reason", result.reason)
    _emit(report)


@rep_app.command("simple")
def rep_simple(ctx: typer.Context, path: Path = typer.Argument(...)):
    """Simplicity by span density"""
    with _exit_codes():
        report, rep = _rep_report(path)
        certificate = RepLabInterface(_lab_config(ctx)).simplicity(rep)
        report.add("span_dim", certificate.span_dim).add("target_dim", certificate.target_dim)
        report.add("rounds", certificate.rounds).add("simple", certificate.simple)
    _emit(report)


def _write_rep(report: Report, text: str, out: Optional[Path]) -> None:
    if out is None:
        report.block("representation", text.splitlines())
    else:
        out.write_text(text)
        report.add("written", str(out))


@surface_app.command("make-simple")
def surface_make_simple(
    ctx: typer.Context,
    surface: str = typer.Option(..., "--surface"),
    seed: Optional[int] = SEED_OPTION,
    out: Optional[Path] = typer.Option(None, "--out", help="Write the representation here"),
):
    """Certified simple representation of the surface group"""
    with _exit_codes():
        config = _lab_config(ctx, seed=seed)
        genus, n = parse_surface_spec(surface)
        report = Report().add("seed", config.seed).add("genus", genus).add("n", n)
        rep = build_surface_simple(genus, n, config=config)
        lab = RepLabInterface(config)
        end, tangent = lab.end_dim(rep), lab.tangent_dim(rep)
        report.add("attempts", rep.provenance.attempts).add("simple", True)
        report.add("end_dim", end).add("tangent_dim", tangent)
        _write_rep(report, format_rep(rep), out)
    _emit(report)


@surface_app.command("make-twosided")
def surface_make_twosided(
    ctx: typer.Context,
    surface: str = typer.Option(..., "--surface"),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Cyclic representation whose annihilator of the cyclic vector is a two-sided ideal"""
    with _exit_codes():
        genus, n = parse_surface_spec(surface)
        rep, vector = build_two_sided_point(genus, n)
        lab = RepLabInterface(_lab_config(ctx))
        end, tangent = lab.end_dim(rep), lab.tangent_dim(rep)
        report = Report().add("genus", genus).add("n", n)
        report.add("cyclic_vector", tuple(format_scalar(x) for x in vector))
        report.add("end_dim", end).add("tangent_dim", tangent).add("two_sided", end == n)
        _write_rep(report, format_rep(rep), out)
    _emit(report)


@app.command("paper-table")
def paper_table(ctx: typer.Context, jobs: Optional[int] = typer.Option(None, "--jobs", help="Parallel workers")):
    """Dimension and smoothness table of the headline cases"""
    with _exit_codes():
        config = _lab_config(ctx)
        reports = run_batch(default_table(), n_jobs=jobs if jobs is not None else config.n_jobs)
    for index, report in enumerate(reports):
        if index:
            typer.echo("")
        typer.echo(report.render(), nl=False)


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code"""
    try:
        result = app(args=argv, standalone_mode=False)
    except click.exceptions.UsageError as e:
        typer.echo(f"error = {e.format_message()}", err=True)
        return 2
    except click.exceptions.Abort:
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
