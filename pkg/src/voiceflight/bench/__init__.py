from .corpus import (
    CORPUS_RATE,
    CorpusItem,
    clean_items,
    generate_corpus,
    items_at_snr,
)
from .metrics import (
    GROSS_ERROR_THRESHOLD,
    BenchEstimator,
    BenchReport,
    builtin_bench_estimators,
    evaluate,
    rank,
)
from .report import CSV_HEADER, REPORT_FORMATS, emit_report, parse_report

__all__ = [
    "CorpusItem",
    "CORPUS_RATE",
    "generate_corpus",
    "clean_items",
    "items_at_snr",
    "BenchEstimator",
    "BenchReport",
    "builtin_bench_estimators",
    "evaluate",
    "rank",
    "GROSS_ERROR_THRESHOLD",
    "CSV_HEADER",
    "REPORT_FORMATS",
    "emit_report",
    "parse_report",
]
