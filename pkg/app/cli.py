"""
Interface de linha de comando do simulador.

Subcomandos: `verify`, `simulate`, `sweep` e `crossover`. A opção global
`--config` aponta o arquivo TOML; sem ela vale `Settings.CONFIG_PATH` ou
a configuração padrão.

Códigos de saída:
    0  sucesso
    3  erro de configuração (ou outro erro do simulador)
    4  divergências na verificação
    5  invariante de relatório violado
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from app.core.config import get_settings, load_config
from app.core.constants import (
    ADRA_GATE_COUNTS,
    DEFAULT_SWEEP_SIZES,
    EXIT_CONFIG_ERROR,
    EXIT_INVARIANT_FAILURE,
    EXIT_OK,
    EXIT_VERIFY_MISMATCH,
    MAX_EXHAUSTIVE_WIDTH,
)
from app.core.errors import AdraError, InvariantError
from app.models.common import CrossoverStatus, OperationKind, SensingScheme
from app.models.energy import CrossoverResult, ScenarioReport
from app.models.simulation import SimConfig, SimulationResult, VerifyReport
from app.services.commands import cmd_crossover, cmd_simulate, cmd_sweep, cmd_verify

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adra",
        description="Simulador de computação em memória com ativação assimétrica de duas linhas",
    )
    parser.add_argument("--config", type=Path, default=None, help="Arquivo TOML de configuração")
    parser.add_argument(
        "--output", type=Path, default=None, help="Diretório dos CSVs (sobrescreve output_path)"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Logging em nível DEBUG")

    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Verificação contra oráculos inteiros")
    verify.add_argument("--max-width", type=int, default=8, help="Maior largura (padrão: 8)")
    verify.add_argument(
        "--sample",
        type=int,
        default=None,
        help=f"Pares amostrados por largura acima de 8 (necessário para w > {MAX_EXHAUSTIVE_WIDTH})",
    )

    simulate = sub.add_parser("simulate", help="Executa uma operação ponta a ponta")
    simulate.add_argument("operation", choices=[op.value for op in OperationKind])
    simulate.add_argument("a", type=int)
    simulate.add_argument("b", type=int)
    simulate.add_argument("--width", type=int, default=None, help="Largura da palavra")
    simulate.add_argument(
        "--scheme", choices=[s.value for s in SensingScheme], default=None
    )

    sweep = sub.add_parser("sweep", help="Varredura de tamanho de array × esquema")
    sweep.add_argument(
        "--sizes", type=int, nargs="+", default=list(DEFAULT_SWEEP_SIZES), help="Lados N do array N×N"
    )
    sweep.add_argument(
        "--schemes",
        nargs="+",
        choices=[s.value for s in SensingScheme],
        default=[s.value for s in SensingScheme],
    )

    sub.add_parser("crossover", help="Cruzamentos f* e P* entre os esquemas 1 e 2")
    return parser


def _print_verify(report: VerifyReport) -> None:
    print(f"larguras: {report.widths[0]}..{report.widths[-1]}")
    print(f"casos: {report.total_cases}")
    print(f"divergências: {len(report.mismatches)}")
    for mismatch in report.mismatches[:20]:
        print(
            f"  w={mismatch.width} A={mismatch.a} B={mismatch.b} "
            f"{mismatch.operation.value}: esperado {mismatch.expected}, obtido {mismatch.actual}"
        )
    print(f"menor distância entre níveis: {report.min_gap_ua:.3f} µA ({report.min_gap_delta:.3f} Δ)")
    print(f"margem configurada: {report.margin_ua:.3f} µA")
    if report.sampled_widths:
        print(f"larguras amostradas: {report.sampled_widths}")


def _print_scenario(report: ScenarioReport) -> None:
    print(
        f"{report.scheme.value} {report.rows}x{report.cols} w={report.word_width} "
        f"P={report.parallelism:g}: speedup {report.speedup:.4f}, "
        f"energia -{report.energy_decrease:.2f}%, EDP -{report.edp_decrease:.2f}%"
    )


def _print_simulation(result: SimulationResult) -> None:
    print(f"{result.operation.value} {result.a} {result.b} (w={result.word_width}, {result.scheme.value})")
    print("coluna or and b a")
    for bit in result.trace:
        print(f"{bit.column:>6} {bit.or_bit:>2} {bit.and_bit:>3} {bit.b_bit} {bit.a_bit}")
    print(f"A recuperado: {result.recovered_a}  B recuperado: {result.recovered_b}")
    print(f"resultado: {result.result_bits} = {result.result_value}")
    print(f"carry={result.carry_out} zero={result.zero_flag} sinal={result.sign_bit}")
    if result.comparison is not None:
        print(f"comparação: {result.comparison.value}")
    print(f"ativações: {result.activations}  acessos de coluna: {result.column_accesses}")
    print(
        f"portas: {ADRA_GATE_COUNTS.muxes_2to1} mux 2:1, {ADRA_GATE_COUNTS.not_gates} NOT, "
        f"{ADRA_GATE_COUNTS.nor_gates} NOR, árvore AND {result.and_gates}"
    )
    _print_scenario(result.report)
    for warning in result.warnings:
        print(f"  ⚠ [{warning.level.value}] {warning.code}: {warning.message}")


def _print_crossover(name: str, result: CrossoverResult, unit: str) -> None:
    if result.status is CrossoverStatus.NO_CROSSOVER or result.value is None:
        print(f"{name}: {CrossoverStatus.NO_CROSSOVER.value}")
    else:
        print(f"{name} = {result.value:.6g} {unit}".rstrip())


def _output_dir(args: argparse.Namespace, config: SimConfig) -> Path:
    return args.output or get_settings().OUTPUT_DIR or config.output_path


def run(args: argparse.Namespace) -> int:
    """Despacha o subcomando e devolve o código de saída."""
    config = load_config(args.config or get_settings().CONFIG_PATH)
    output = _output_dir(args, config)

    if args.command == "verify":
        report = cmd_verify(config, args.max_width, args.sample, output)
        _print_verify(report)
        return EXIT_OK if report.passed else EXIT_VERIFY_MISMATCH

    if args.command == "simulate":
        result = cmd_simulate(
            config,
            OperationKind(args.operation),
            args.a,
            args.b,
            word_width=args.width,
            scheme=SensingScheme(args.scheme) if args.scheme else None,
            output_dir=output,
        )
        _print_simulation(result)
        return EXIT_OK

    if args.command == "sweep":
        reports = cmd_sweep(
            config, args.sizes, [SensingScheme(s) for s in args.schemes], output
        )
        for report in reports:
            _print_scenario(report)
        print(f"CSV: {output / 'sweep.csv'}")
        return EXIT_OK

    crossover = cmd_crossover(config, output)
    _print_crossover("f*", crossover.frequency, "Hz")
    _print_crossover("P*", crossover.parallelism, "")
    print(f"CSV: {output / 'crossover.csv'}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else get_settings().LOG_LEVEL
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s")

    try:
        return run(args)
    except InvariantError as exc:
        print(f"erro: {exc.message}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  ✗ {violation}", file=sys.stderr)
        return EXIT_INVARIANT_FAILURE
    except AdraError as exc:
        logger.debug("detalhes: %s", exc.details)
        print(f"erro [{exc.code}]: {exc.message}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except ValidationError as exc:
        print(f"erro [CONFIGURATION_ERROR]: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
