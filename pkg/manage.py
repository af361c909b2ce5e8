import logging
import sys
from fractions import Fraction
from typing import List
import click
from modules.asymptotics.data.asymptotics_data import AsymptoticsData
from modules.asymptotics.managers.expectation_manager import ExpectationManager
from modules.asymptotics.managers.singularity_manager import SingularityManager
from modules.oracle.managers.cross_check_manager import CrossCheckManager
from modules.oracle.managers.oracle_manager import OracleManager
from modules.order.data.order_data import OrderData
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.sampler.managers.sampler_manager import SamplerManager
from modules.series.data.series_data import SeriesData
from modules.series.managers.solver_manager import SolverManager
from modules.structure.managers.order_manager import OrderManager
from modules.structure.managers.structure_manager import StructureManager
from modules.structure.objects.structure import Structure
from modules.util.data.table_data import FORMATS, TableData
from modules.util.exceptions.domain_exception import DomainException
from modules.util.objects.settings import Settings
from service_locator import get_service_manager

SELFTEST_HIGH = 12
TAIL_DEVIATIONS = (1, 2, 3, 4, 5)


class SaturnaGroup(click.Group):
    """ Command group reporting domain errors as one line on stderr with exit status 1
    """
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except DomainException as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(1)


class FractionType(click.ParamType):
    """ Nonnegative rational given as an integer, a decimal or p/q
    """
    name = "rational"

    def convert(self, value, param, ctx) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            fraction = Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"'{value}' is not a rational number", param, ctx)
        if fraction < 0:
            self.fail(f"{value} is negative", param, ctx)
        return fraction


def format_option(command):
    return click.option(
        "--format", "output_format", type=click.Choice(FORMATS), default="text", show_default=True,
        help="Output format."
    )(command)


def trunc_option(command):
    return click.option("--trunc", type=click.IntRange(min=1), help="Series truncation order N.")(command)


def level_option(command):
    return click.option("--p", "level", type=click.IntRange(min=0), help="Order level p.")(command)


def structure_arguments(command):
    command = click.argument("structures", nargs=-1)(command)
    return click.option(
        "--file", "path", type=click.Path(exists=True, dir_okay=False),
        help="File with one dot-bracket structure per line."
    )(command)


def service(kind: type) -> any:
    return click.get_current_context().obj.get(kind.__name__)


def emit(text: str):
    click.echo(text, nl=False)


def truncation(trunc: int or None) -> int:
    return trunc or service(Settings).get_default_truncation()


def read_structures(structures: tuple, path: str or None) -> List[str]:
    texts = list(structures)
    if path:
        with open(path) as handle:
            texts.extend(line.strip() for line in handle if line.strip())
    if not texts:
        raise click.UsageError("Give at least one structure or --file")
    return texts


@click.group(cls=SaturnaGroup)
@click.pass_context
def cli(ctx: click.Context):
    """ Saturated RNA secondary structures: counting, order statistics, sampling
    """
    service_locator = get_service_manager()
    settings: Settings = service_locator.get(Settings.__name__)
    logging.basicConfig(
        stream=sys.stderr,
        level=settings.get_log_level(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    ctx.obj = service_locator


@cli.command("check")
@structure_arguments
@format_option
def check(structures: tuple, path: str, output_format: str):
    """ Validate structures and report saturation and addable pairs
    """
    structure_manager: StructureManager = service(StructureManager)
    rows = []
    errors = []
    for text in read_structures(structures, path):
        try:
            structure = structure_manager.parse(text)
        except DomainException as e:
            errors.append(f"{text}: {e}")
            rows.append({"valid": False, "saturated": None, "addable": None, "structure": text})
            continue
        rows.append({
            "valid": True,
            "saturated": structure_manager.is_saturated(structure),
            "addable": structure_manager.addable_pairs(structure),
            "structure": text
        })
    emit(service(TableData).render_rows(rows, output_format))
    if errors:
        raise DomainException("; ".join(errors))


@cli.command("order")
@structure_arguments
@click.option("--fast", is_flag=True, help="Use the one-pass order computation.")
@format_option
def order(structures: tuple, path: str, fast: bool, output_format: str):
    """ Print the order of each structure
    """
    structure_manager: StructureManager = service(StructureManager)
    order_manager: OrderManager = service(OrderManager)
    compute = order_manager.order_fast if fast else order_manager.order
    rows = []
    for text in read_structures(structures, path):
        structure: Structure = structure_manager.parse(text)
        rows.append({"structure": text, "order": compute(structure)})
    columns = ["order"] if output_format == "text" else ["structure", "order"]
    emit(service(TableData).render_rows(rows, output_format, columns))


@cli.command("count")
@click.option("--max-n", type=click.IntRange(min=1), required=True, help="Largest size.")
@click.option("--kind", type=click.Choice(["saturated", "secondary"]), default="saturated", show_default=True)
@format_option
def count(max_n: int, kind: str, output_format: str):
    """ Print [z^n]S (or [z^n]T) for n = 1..max-n
    """
    solver_manager: SolverManager = service(SolverManager)
    series = solver_manager.solve_saturated(max_n) if kind == "saturated" else solver_manager.solve_secondary(max_n)
    emit(service(SeriesData).render(series, output_format, 1, max_n))


@cli.command("enumerate")
@click.option("--n", "size", type=int, required=True, help="Size.")
@click.option("--kind", type=click.Choice(["saturated", "secondary"]), default="saturated", show_default=True)
@format_option
def enumerate_structures(size: int, kind: str, output_format: str):
    """ List every structure of one size, sorted with '(' < '.' < ')'
    """
    oracle_manager: OracleManager = service(OracleManager)
    structures = (
        oracle_manager.enumerate_saturated(size) if kind == "saturated"
        else oracle_manager.enumerate_secondary(size)
    )
    rows = [{"structure": structure.get_text()} for structure in structures]
    emit(service(TableData).render_rows(rows, output_format, ["structure"]))


@cli.command("census")
@click.option("--n", "size", type=int, required=True, help="Size.")
@format_option
def census(size: int, output_format: str):
    """ Count saturated structures of one size by order
    """
    oracle_manager: OracleManager = service(OracleManager)
    emit(service(TableData).render_record(oracle_manager.census(size).get_dict(), output_format))


@cli.command("spectrum")
@trunc_option
@click.option("--max-n", type=click.IntRange(min=1), help="Largest size listed, N when omitted.")
@level_option
@format_option
def spectrum(trunc: int, max_n: int, level: int, output_format: str):
    """ Print S_p(n) for every order level, or for one with --p
    """
    spectrum_manager: SpectrumManager = service(SpectrumManager)
    built = spectrum_manager.build(truncation(trunc))
    rows = OrderData.spectrum_rows(built, max_n, level)
    emit(service(TableData).render_rows(rows, output_format, ["n", "p", "count"]))


@cli.command("dist")
@click.option("--n", "size", type=int, required=True, help="Size.")
@trunc_option
@level_option
@format_option
def dist(size: int, trunc: int, level: int, output_format: str):
    """ Print the exact order distribution at one size, or one c_p with --p
    """
    spectrum_manager: SpectrumManager = service(SpectrumManager)
    distribution_manager: DistributionManager = service(DistributionManager)
    built = spectrum_manager.build(truncation(trunc))
    distribution = distribution_manager.distribution(built, size)
    rows = distribution.get_rows() if level is None else [distribution.get_row(level)]
    emit(service(TableData).render_rows(rows, output_format, ["n", "p", "count", "probability"]))


@cli.command("expect")
@click.option("--n", "sizes", type=int, multiple=True, help="Size, repeatable; powers of two up to N when omitted.")
@trunc_option
@format_option
def expect(sizes: tuple, trunc: int, output_format: str):
    """ Compare the exact expected order with log4 n
    """
    spectrum_manager: SpectrumManager = service(SpectrumManager)
    expectation_manager: ExpectationManager = service(ExpectationManager)
    n_max = truncation(trunc)
    sizes = sizes or tuple(2 ** k for k in range(1, n_max.bit_length()) if 2 ** k <= n_max)
    rows = expectation_manager.report(spectrum_manager.build(n_max), sizes)
    emit(service(TableData).render_rows(AsymptoticsData.expectation_rows(rows), output_format, AsymptoticsData.COLUMNS))


@cli.command("tail")
@click.option("--n", "size", type=int, required=True, help="Size.")
@click.option("--x", "deviations", type=FractionType(), multiple=True, help="Deviation, repeatable; 1..5 when omitted.")
@trunc_option
@format_option
def tail(size: int, deviations: tuple, trunc: int, output_format: str):
    """ Print P(|order - E order| >= x) against 2^-x
    """
    spectrum_manager: SpectrumManager = service(SpectrumManager)
    order_data: OrderData = service(OrderData)
    built = spectrum_manager.build(truncation(trunc))
    rows = order_data.tail_rows(built, size, deviations or TAIL_DEVIATIONS)
    emit(service(TableData).render_rows(rows, output_format, ["n", "x", "probability", "bound"]))


@cli.command("singularity")
@click.option("--precision", type=int, default=20, show_default=True, help="Decimal digits.")
@format_option
def singularity(precision: int, output_format: str):
    """ Locate the dominant singularity and the coefficient constant
    """
    singularity_manager: SingularityManager = service(SingularityManager)
    report = singularity_manager.locate_singularity(precision)
    emit(service(TableData).render_record(report.get_dict(), output_format))


@cli.command("sample")
@click.option("--n", "size", type=int, required=True, help="Size.")
@click.option("--seed", type=click.IntRange(min=0, max=2 ** 64 - 1), default=0, show_default=True)
@click.option("--count", "draws", type=click.IntRange(min=1), default=1, show_default=True)
@trunc_option
@format_option
def sample(size: int, seed: int, draws: int, trunc: int, output_format: str):
    """ Draw saturated structures uniformly at random
    """
    sampler_manager: SamplerManager = service(SamplerManager)
    order_manager: OrderManager = service(OrderManager)
    tables = sampler_manager.build_tables(trunc or max(size, 1))
    rows = [
        {
            "structure": structure.get_text(),
            "order": order_manager.order_fast(structure),
            "size": size,
            "seed": seed,
            "index": index
        }
        for index, structure in enumerate(sampler_manager.sample_many(tables, size, seed, draws))
    ]
    columns = ["structure"] if output_format == "text" else ["structure", "order", "size", "seed", "index"]
    emit(service(TableData).render_rows(rows, output_format, columns))


@cli.command("selftest")
@click.option("--max-n", type=click.IntRange(min=1, max=SELFTEST_HIGH), default=SELFTEST_HIGH, show_default=True)
@format_option
def selftest(max_n: int, output_format: str):
    """ Cross-check enumeration against the generating functions
    """
    cross_check_manager: CrossCheckManager = service(CrossCheckManager)
    results = cross_check_manager.run(max_n)
    rows = [result.get_dict() for result in results]
    emit(service(TableData).render_rows(rows, output_format, ["check", "n", "ok", "expected", "actual"]))
    failed = [result for result in results if not result.is_ok()]
    if failed:
        raise DomainException(f"{len(failed)} of {len(results)} cross-checks failed")


def run(argv: List[str] = None) -> int:
    """ Run the command line and return the exit status
    Args:
        argv (List[str]):       Arguments without the program name
    Returns:
        int:    0 on success, 1 on domain error, 2 on usage error
    """
    try:
        status = cli.main(args=argv, prog_name="saturna", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return status if isinstance(status, int) else 0


if __name__ == '__main__':
    sys.exit(run())
