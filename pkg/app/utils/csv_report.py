"""
Emissão determinística de relatórios CSV.

Ordem de colunas fixa e 6 algarismos significativos, para que duas
execuções com a mesma configuração gerem arquivos idênticos.
"""

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path

from app.core.constants import CROSSOVER_CSV_COLUMNS, SCENARIO_CSV_COLUMNS
from app.models.energy import CrossoverReport, ScenarioReport
from app.models.sensing import ReferenceLadder


class CsvReport:
    """Formatação e escrita dos CSVs de varredura, cruzamento e diagnóstico."""

    @staticmethod
    def fmt(value: float) -> str:
        return f"{value:.6g}"

    @staticmethod
    def write(path: Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        return path

    @staticmethod
    def scenario_row(report: ScenarioReport) -> list[str]:
        """Linha de cenário; componentes de energia da operação CiM."""
        cim = report.breakdown_cim
        fmt = CsvReport.fmt
        return [
            report.scheme.value,
            str(report.rows),
            str(report.cols),
            str(report.word_width),
            fmt(report.parallelism),
            fmt(report.speedup),
            fmt(report.energy_decrease),
            fmt(report.edp_decrease),
            fmt(cim.rbl),
            fmt(cim.wordline),
            fmt(cim.current_flow_sensing),
            fmt(cim.peripheral),
            fmt(cim.leakage),
        ]

    @staticmethod
    def write_scenarios(path: Path, reports: Iterable[ScenarioReport]) -> Path:
        return CsvReport.write(
            path, SCENARIO_CSV_COLUMNS, (CsvReport.scenario_row(r) for r in reports)
        )

    @staticmethod
    def write_crossover(path: Path, report: CrossoverReport) -> Path:
        fmt = CsvReport.fmt
        points = [*report.frequency.points, *report.parallelism.points]
        return CsvReport.write(
            path,
            CROSSOVER_CSV_COLUMNS,
            ([p.sweep, fmt(p.x), fmt(p.scheme1), fmt(p.scheme2), p.winner] for p in points),
        )

    @staticmethod
    def write_diagnostics(
        path: Path,
        levels: dict[tuple[int, int], float],
        ladder: ReferenceLadder,
    ) -> Path:
        """Níveis de corrente e referências da escada em µA, 3 casas decimais."""
        rows = [[f"I({a},{b})", f"{current * 1e6:.3f}"] for (a, b), current in levels.items()]
        rows += [
            ["i_ref_or", f"{ladder.i_ref_or * 1e6:.3f}"],
            ["i_ref_b", f"{ladder.i_ref_b * 1e6:.3f}"],
            ["i_ref_and", f"{ladder.i_ref_and * 1e6:.3f}"],
        ]
        return CsvReport.write(path, ["quantity", "value_uA"], rows)
