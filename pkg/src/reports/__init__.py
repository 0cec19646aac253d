"""
Package des rapports : enregistrements pydantic et exports CSV / gnuplot
"""

from .export import ReportService
from .models import (
    CodeSpecRecord,
    CodewordRecord,
    GlobalReportRecord,
    NormStatusRecord,
    ReadingRecord,
    SearchReportRecord,
    SimPointRecord,
    TableReportRecord,
    TableRowRecord,
)

__all__ = [
    'ReportService',
    'NormStatusRecord',
    'CodeSpecRecord',
    'SearchReportRecord',
    'GlobalReportRecord',
    'TableRowRecord',
    'TableReportRecord',
    'ReadingRecord',
    'CodewordRecord',
    'SimPointRecord',
]
