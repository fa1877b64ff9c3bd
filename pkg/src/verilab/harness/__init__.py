"""Pipeline orchestration, corpus ingestion, quality reporting, CLI."""

from .corpus import IoError, ProblemRecord, SchemaError, SourceText, load_corpus
from .executors import (
    AdapterError, MiniLangExecutor, SubprocessExecutor, make_executor,
    validate_report,
)
from .pipeline import RunConfig, run_pipeline, write_json_atomic
from .quality import EmptyInput, QualityReport, quality_report

__all__ = [
    "IoError", "ProblemRecord", "SchemaError", "SourceText", "load_corpus",
    "AdapterError", "MiniLangExecutor", "SubprocessExecutor", "make_executor",
    "validate_report",
    "RunConfig", "run_pipeline", "write_json_atomic",
    "EmptyInput", "QualityReport", "quality_report",
]
