from .arff import ArffReadResult, ParseDiagnostic, load_arff, parse_arff, read_arff, write_arff
from .csv_io import load_csv, parse_csv, write_csv

__all__ = [
    "ArffReadResult",
    "ParseDiagnostic",
    "load_arff",
    "parse_arff",
    "read_arff",
    "write_arff",
    "load_csv",
    "parse_csv",
    "write_csv",
]
