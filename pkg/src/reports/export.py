"""
Service de conversion des résultats en enregistrements JSON et en tables pandas

Rationnels sérialisés "num/den", éléments de O_F en paires [a, b] dans la base {1, ω_d}.
"""
import io
import json
from pathlib import Path
from typing import List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from src.arithmetic import FieldElem, QuadPoly, RingElem, format_rational
from src.codes.search import GlobalReport, Reading, SearchReport, Survivor, TableRow
from src.codes.stbc import CodeSpec, balanced_encode, det_codeword, encode, make_code
from src.norms import NormBudget, NormStatus
from src.simulation import SimResult

from .models import (
    CodeSpecRecord,
    CodewordRecord,
    GlobalReportRecord,
    NormStatusRecord,
    ObstructionRecord,
    ReadingRecord,
    ReducibleRecord,
    SearchReportRecord,
    SimPointRecord,
    SurvivorRecord,
    TableReportRecord,
    TableRowRecord,
)

TABLE_COLUMNS = ["field", "extension", "polynomial", "algebra", "rho", "rho_float", "printed_rho", "flagged"]
SIM_COLUMNS = ["snr_db", "cer", "halfwidth", "trials"]


def _field_coords(z: FieldElem) -> List[str]:
    return [format_rational(z.x), format_rational(z.y)]


class ReportService:
    """Conversions résultats → enregistrements pydantic / DataFrame"""

    @staticmethod
    def norm_status(status: NormStatus) -> NormStatusRecord:
        witness = None
        if status.witness is not None:
            witness = [_field_coords(status.witness.a), _field_coords(status.witness.b)]
        obstruction = None
        if status.obstruction is not None:
            obstruction = ObstructionRecord(
                prime=status.obstruction.prime,
                congruence=status.obstruction.congruence,
                reduction=status.obstruction.reduction,
            )
        return NormStatusRecord(
            verdict=status.verdict.value,
            witness_coords=witness,
            obstruction=obstruction,
            note=status.note,
        )

    @staticmethod
    def code_spec(spec: CodeSpec) -> CodeSpecRecord:
        return CodeSpecRecord(
            d=spec.d,
            p=spec.poly.p.pair(),
            q=spec.poly.q.pair(),
            gamma=spec.gamma.pair(),
            polynomial=str(spec.poly),
            label=spec.label,
            c_det_sq=format_rational(spec.c_det_sq),
            rho=format_rational(spec.rho),
            rho_float=spec.rho_float,
            verified=spec.verified,
            norm_status=ReportService.norm_status(spec.norm_status),
        )

    @staticmethod
    def load_code_spec(path: Union[str, Path], effort: Optional[NormBudget] = None) -> CodeSpec:
        """
        Relit un fichier produit par la commande `code`

        Le certificat est recalculé : le fichier ne fait foi que pour (d, p, q, γ).
        """
        record = CodeSpecRecord.model_validate_json(Path(path).read_text(encoding="utf-8"))
        poly = QuadPoly.from_pairs(record.d, tuple(record.p), tuple(record.q))
        gamma = RingElem(record.d, *record.gamma)
        return make_code(record.d, poly, gamma, effort, note=record.norm_status.note, label=record.label)

    @staticmethod
    def survivor(s: Survivor) -> SurvivorRecord:
        return SurvivorRecord(
            polynomial=str(s.poly),
            p=s.poly.p.pair(),
            q=s.poly.q.pair(),
            gamma=s.gamma.pair(),
            norm_status=ReportService.norm_status(s.status),
        )

    @staticmethod
    def search_report(report: SearchReport) -> SearchReportRecord:
        return SearchReportRecord(
            d=report.d,
            target=format_rational(report.target),
            bound_sq=format_rational(report.bound_sq),
            include_boundary=report.include_boundary,
            certified=report.certified,
            candidates=[str(c.poly) for c in report.candidates],
            survivors=[ReportService.survivor(s) for s in report.survivors],
            unresolved=[ReportService.survivor(s) for s in report.unresolved],
            reducible=[
                ReducibleRecord(polynomial=str(r.poly), sqrt_disc=_field_coords(r.sqrt_disc))
                for r in report.reducible
            ],
            best=ReportService.code_spec(report.best) if report.best is not None else None,
        )

    @staticmethod
    def global_report(report: GlobalReport) -> GlobalReportRecord:
        return GlobalReportRecord(
            threshold_sq=format_rational(report.threshold_sq),
            fields=report.fields,
            cited=report.cited,
            certified=report.certified,
            optimum=ReportService.code_spec(report.optimum),
            searches=[ReportService.search_report(report.searches[d]) for d in sorted(report.searches)],
        )

    @staticmethod
    def table_rows(rows: Sequence[TableRow]) -> List[TableRowRecord]:
        return [
            TableRowRecord(
                d=row.entry.d,
                field=row.entry.field,
                extension=row.entry.extension,
                polynomial=str(row.entry.poly),
                algebra=row.entry.algebra,
                rho=format_rational(row.spec.rho),
                rho_float=row.spec.rho_float,
                printed_rho=row.entry.printed_rho,
                flagged=row.flagged,
                cited=row.entry.cited,
                code=ReportService.code_spec(row.spec),
            )
            for row in rows
        ]

    @staticmethod
    def table_frame(rows: Sequence[TableRow]) -> pd.DataFrame:
        records = [r.model_dump() for r in ReportService.table_rows(rows)]
        return pd.DataFrame(records, columns=TABLE_COLUMNS)

    @staticmethod
    def readings(readings: Sequence[Reading]) -> List[ReadingRecord]:
        return [
            ReadingRecord(
                label=r.label,
                polynomial=r.polynomial,
                gamma=r.gamma,
                rho=format_rational(r.rho) if r.rho is not None else None,
                rho_float=r.rho_float,
                matches_printed=r.matches_printed,
            )
            for r in readings
        ]

    @staticmethod
    def table_report(rows: Sequence[TableRow], readings: Sequence[Reading]) -> TableReportRecord:
        return TableReportRecord(rows=ReportService.table_rows(rows), readings=ReportService.readings(readings))

    @staticmethod
    def readings_frame(readings: Sequence[Reading]) -> pd.DataFrame:
        return pd.DataFrame([r.model_dump() for r in ReportService.readings(readings)])

    @staticmethod
    def codeword(spec: CodeSpec, symbols: Sequence[RingElem], balanced: bool = False) -> CodewordRecord:
        w = encode(spec, symbols)
        matrix = balanced_encode(spec, w.symbols) if balanced else w.matrix()
        return CodewordRecord(
            symbols=[s.pair() for s in w.symbols],
            balanced=balanced,
            det=_field_coords(det_codeword(w)),
            matrix=[[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)],
        )

    @staticmethod
    def sim_points(result: SimResult) -> List[SimPointRecord]:
        return [
            SimPointRecord(snr_db=p.snr_db, cer=p.cer, halfwidth=p.halfwidth, trials=p.trials, errors=p.errors)
            for p in result.points
        ]

    @staticmethod
    def sim_frame(result: SimResult) -> pd.DataFrame:
        records = [p.model_dump() for p in ReportService.sim_points(result)]
        return pd.DataFrame(records, columns=SIM_COLUMNS)

    @staticmethod
    def to_csv(frame: pd.DataFrame) -> str:
        return frame.to_csv(index=False, lineterminator="\n")

    @staticmethod
    def to_gnuplot(result: SimResult) -> str:
        """Fichier de données gnuplot : en-tête commenté puis colonnes séparées par des espaces"""
        frame = ReportService.sim_frame(result)[["snr_db", "cer", "halfwidth"]]
        buffer = io.StringIO()
        buffer.write("# snr_db cer halfwidth\n")
        frame.to_csv(buffer, sep=" ", header=False, index=False, lineterminator="\n")
        return buffer.getvalue()

    @staticmethod
    def to_json(records: Union[BaseModel, Sequence[BaseModel]]) -> str:
        if isinstance(records, BaseModel):
            return records.model_dump_json(indent=2)
        return json.dumps([r.model_dump(mode="json") for r in records], indent=2, ensure_ascii=False)
