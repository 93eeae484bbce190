"""
Comandos do simulador: verify, simulate, sweep e crossover.

Compartilhados pela CLI e pela API HTTP. Cada comando devolve um modelo
de resultado e, quando recebe um diretório de saída, escreve seus CSVs.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path

from pydantic import ValidationError

from app.core.constants import (
    DEFAULT_SWEEP_SIZES,
    MAX_EXHAUSTIVE_WIDTH,
    MAX_SAMPLED_WIDTH,
)
from app.core.errors import (
    AdraError,
    InvalidParamsError,
    InvariantError,
    OperandError,
    PipelineError,
)
from app.models.array import ArrayGeometry, OperandLayout
from app.models.common import Comparison, OperationKind, SensingScheme
from app.models.energy import CrossoverReport, ScenarioReport
from app.models.sensing import VoltageSenseParams
from app.models.simulation import (
    BitTrace,
    Mismatch,
    SimConfig,
    SimulationResult,
    VerifyReport,
)
from app.services.array import ADRA_LEVEL_ORDER, MemoryArray, current_levels, level_gaps
from app.services.energy import (
    crossover_report,
    edp_report,
    resolve_energy,
    resolve_timing,
    sweep,
    trend_violations,
)
from app.services.pipeline import AdraPipeline
from app.services.sensing import build_ladder, full_swing_sense_time
from app.services.validators import MarginValidator
from app.utils.bits import BitCodec
from app.utils.csv_report import CsvReport

logger = logging.getLogger(__name__)

SAMPLED_FROM_WIDTH = 9


def _signed_compare(a: int, b: int) -> Comparison:
    if a == b:
        return Comparison.EQUAL
    return Comparison.LESS if a < b else Comparison.GREATER


def _pairs(width: int, sample: int | None) -> Iterator[tuple[int, int]]:
    if sample is not None and width >= SAMPLED_FROM_WIDTH:
        return BitCodec.sampled_pairs(width, sample)
    return BitCodec.all_pairs(width)


def _min_gap_delta(config: SimConfig) -> float:
    """Menor distância entre descargas adjacentes, em unidades de Δ."""
    levels = current_levels(config.device, config.bias)
    params = VoltageSenseParams(delta=config.sensing.delta, cbl=config.sensing.cbl)
    t_sense = full_swing_sense_time(levels, params)
    discharges = [
        min(levels[v] * t_sense / params.cbl, config.bias.v_read) / params.delta
        for v in ADRA_LEVEL_ORDER
    ]
    return min(high - low for low, high in zip(discharges, discharges[1:], strict=False))


def cmd_verify(
    config: SimConfig,
    max_width: int = 8,
    sample: int | None = None,
    output_dir: Path | None = None,
) -> VerifyReport:
    """
    Verifica add, sub e cmp contra oráculos inteiros para todo w <= max_width.

    Cada par (A, B) é escrito em um array de rascunho e sensoriado com uma
    única ativação; a mesma tripla alimenta as três operações.

    Args:
        config: Configuração de simulação.
        max_width: Maior largura verificada.
        sample: Pares amostrados por largura a partir de w = 9 (modo amostrado).
        output_dir: Diretório para `diagnostics.csv` (opcional).

    Raises:
        OperandError: Largura ou amostragem fora do intervalo suportado.
        PipelineError: Erro de configuração, com o caso (A, B, w) que falhou.
    """
    if not 1 <= max_width <= MAX_SAMPLED_WIDTH:
        raise OperandError(
            f"max_width deve estar em [1, {MAX_SAMPLED_WIDTH}]", operand="max_width"
        )
    if sample is not None and sample < 1:
        raise OperandError("sample deve ser >= 1", operand="sample")
    if max_width > MAX_EXHAUSTIVE_WIDTH and sample is None:
        raise OperandError(
            f"Verificação exaustiva limitada a w <= {MAX_EXHAUSTIVE_WIDTH}; use sample",
            operand="max_width",
        )

    mismatches: list[Mismatch] = []
    total = 0
    widths = list(range(1, max_width + 1))

    for width in widths:
        pairs = _pairs(width, sample)
        low, _ = BitCodec.signed_range(width)
        try:
            pipeline = AdraPipeline(
                MemoryArray.scratch(width),
                config.device,
                config.bias,
                config.sensing,
                OperandLayout(row_a=0, row_b=1, word_index=0),
            )
        except AdraError as exc:
            raise PipelineError(exc, width, low, low)

        for a, b in pairs:
            try:
                result = pipeline.run(a, b)
            except AdraError as exc:
                raise PipelineError(exc, width, a, b)

            checks = (
                (OperationKind.ADD, str(a + b), str(result.add.to_int())),
                (OperationKind.SUB, str(a - b), str(result.sub.to_int())),
                (OperationKind.CMP, _signed_compare(a, b).value, result.comparison.value),
            )
            for operation, expected, actual in checks:
                total += 1
                if expected != actual:
                    mismatches.append(
                        Mismatch(
                            width=width,
                            a=a,
                            b=b,
                            operation=operation,
                            expected=expected,
                            actual=actual,
                        )
                    )
        logger.info("w=%d verificado: %d divergências acumuladas", width, len(mismatches))

    levels = current_levels(config.device, config.bias)
    report = VerifyReport(
        widths=widths,
        total_cases=total,
        mismatches=mismatches,
        min_gap_ua=min(level_gaps(levels)) * 1e6,
        min_gap_delta=_min_gap_delta(config),
        margin_ua=config.sensing.current_margin * 1e6,
        sampled_widths=[w for w in widths if sample is not None and w >= SAMPLED_FROM_WIDTH],
    )

    if output_dir is not None:
        CsvReport.write_diagnostics(
            output_dir / "diagnostics.csv",
            levels,
            build_ladder(config.device, config.bias, config.sensing.current_margin),
        )
    return report


def cmd_simulate(
    config: SimConfig,
    operation: OperationKind,
    a: int,
    b: int,
    word_width: int | None = None,
    scheme: SensingScheme | None = None,
    output_dir: Path | None = None,
) -> SimulationResult:
    """
    Executa uma operação ponta a ponta no array configurado.

    Raises:
        OperandError: Operando ou largura de palavra fora do intervalo.
        AdraError: Erros de configuração ou de calibração.
    """
    geometry = config.geometry
    if word_width is not None and word_width != geometry.word_width:
        try:
            geometry = ArrayGeometry(
                rows=geometry.rows,
                cols=geometry.cols,
                word_width=word_width,
                mux_factor=geometry.mux_factor,
            )
        except ValidationError as exc:
            raise OperandError(
                f"word_width={word_width} inválido: {exc.errors()[0]['msg']}",
                operand="word_width",
            ) from exc
    width = geometry.word_width
    low, high = BitCodec.signed_range(width)
    for name, value in (("a", a), ("b", b)):
        if not BitCodec.fits(value, width):
            raise OperandError(
                f"Operando {name}={value} fora de [{low}, {high}] para w={width}",
                operand=name,
            )

    effective = scheme or config.sensing.scheme
    array = MemoryArray(geometry)
    pipeline = AdraPipeline(
        array, config.device, config.bias, config.sensing, config.operands, effective
    )
    result = pipeline.run(a, b)
    word = result.result_for(operation)

    energy = resolve_energy(config)
    report = edp_report(
        geometry,
        effective,
        energy,
        resolve_timing(config),
        config.parallelism,
        config.cim_frequency_hz,
    )
    warnings = MarginValidator().validate(config, energy, effective)

    columns = array.word_columns(config.operands.word_index)
    simulation = SimulationResult(
        operation=operation,
        a=a,
        b=b,
        word_width=width,
        scheme=effective,
        trace=[
            BitTrace(
                column=column,
                or_bit=o.or_bit,
                and_bit=o.and_bit,
                b_bit=o.b_bit,
                a_bit=o.a_bit or 0,
            )
            for column, o in zip(columns, result.outcomes, strict=True)
        ],
        recovered_a=result.recovered_a,
        recovered_b=result.recovered_b,
        result_bits=word.bit_string(),
        result_value=word.to_int(),
        carry_out=word.carry_out,
        zero_flag=word.zero_flag,
        sign_bit=word.sign_bit,
        comparison=result.comparison if operation is OperationKind.CMP else None,
        and_gates=result.cmp.and_gates,
        activations=array.activations,
        column_accesses=array.column_accesses,
        report=report,
        warnings=warnings,
    )

    if output_dir is not None:
        CsvReport.write_scenarios(output_dir / "simulate.csv", [report])
        CsvReport.write_diagnostics(
            output_dir / "diagnostics.csv",
            current_levels(config.device, config.bias),
            build_ladder(config.device, config.bias, config.sensing.current_margin),
        )
    return simulation


def cmd_sweep(
    config: SimConfig,
    sizes: Sequence[int] | None = None,
    schemes: Iterable[SensingScheme] | None = None,
    output_dir: Path | None = None,
) -> list[ScenarioReport]:
    """
    Produto cartesiano tamanhos × esquemas via `edp_report`.

    O CSV é escrito antes da checagem de invariantes.

    Raises:
        InvalidParamsError: Tamanho que não comporta a palavra configurada.
        InvariantError: Tendência de varredura ou identidade EDP violada.
    """
    energy = resolve_energy(config)
    timing = resolve_timing(config)
    chosen_sizes = list(sizes or DEFAULT_SWEEP_SIZES)
    for size in chosen_sizes:
        try:
            config.geometry.resized(size)
        except ValidationError as exc:
            raise InvalidParamsError(
                f"Tamanho {size} inválido: {exc.errors()[0]['msg']}", field="sizes"
            ) from exc
    chosen_schemes = list(schemes or SensingScheme)

    reports: list[ScenarioReport] = []
    violations: list[str] = []
    for scheme in chosen_schemes:
        scheme_reports = sweep(
            chosen_sizes,
            scheme,
            config.geometry,
            energy,
            timing,
            config.parallelism,
            config.cim_frequency_hz,
        )
        violations += trend_violations(scheme_reports)
        reports += scheme_reports

    if output_dir is not None:
        CsvReport.write_scenarios(output_dir / "sweep.csv", reports)
    if violations:
        raise InvariantError("Invariantes da varredura violados", violations)
    return reports


def cmd_crossover(config: SimConfig, output_dir: Path | None = None) -> CrossoverReport:
    """f*, P* e curvas de energia dos esquemas 1 e 2 na geometria configurada."""
    report = crossover_report(
        resolve_energy(config),
        config.geometry,
        config.parallelism,
        fallback_frequency_hz=config.cim_frequency_hz,
    )
    if output_dir is not None:
        CsvReport.write_crossover(output_dir / "crossover.csv", report)
    return report
