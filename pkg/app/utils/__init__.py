"""Utility functions."""

from app.utils.bits import BitCodec
from app.utils.csv_report import CsvReport

__all__ = ["BitCodec", "CsvReport"]
