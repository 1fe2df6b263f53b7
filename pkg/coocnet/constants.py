import os
from pathlib import Path

from ruamel.yaml import YAML

__all__ = [
    "CODE_DIR",
    "CONFIG_DIR",
    "DEFAULTS_FILE",
    "DEFAULTS",
    "COOC_ENUMS",
    "SNAPSHOT_MAGIC",
    "SNAPSHOT_VERSION",
    "WARMUP_ENV_VAR",
    "benchWarmup",
]

CODE_DIR = Path(__file__).parent
CONFIG_DIR = CODE_DIR / "config"
DEFAULTS_FILE = CONFIG_DIR / "defaults.yml"

SNAPSHOT_MAGIC = b"COOCIDX1"
SNAPSHOT_VERSION = 1

WARMUP_ENV_VAR = "COOCNET_BENCH_WARMUP"


def _loadDefaults(file: Path = DEFAULTS_FILE) -> dict:
    with open(file, "r", encoding="utf-8") as ifile:
        return YAML(typ="safe").load(ifile) or {}


DEFAULTS = _loadDefaults()


def benchWarmup() -> int:
    """Warm-up runs per (algorithm, seed), honoring the environment override"""
    value = os.environ.get(WARMUP_ENV_VAR)
    if value is None or not value.strip():
        return int(DEFAULTS["bench"]["warmup"])
    warmup = int(value)
    if warmup < 0:
        raise ValueError(f"{WARMUP_ENV_VAR} must be >= 0, was {warmup}")
    return warmup


class COOC_ENUMS:
    # --------------------------
    # DOCUMENT FIELDS
    # --------------------------
    FIELD_TITLE = "title"
    FIELD_ABSTRACT = "abstract"
    FIELD_KEYWORDS = "keywords"
    ALL_FIELDS = (FIELD_TITLE, FIELD_ABSTRACT, FIELD_KEYWORDS)

    META_DISCIPLINE = "discipline"
    META_CATEGORY = "category"
    META_FIELDS = (META_DISCIPLINE, META_CATEGORY)

    # --------------------------
    # CORPUS FORMATS
    # --------------------------
    CORPUS_JSONL = "jsonl"
    CORPUS_CSL_TSV = "csl-tsv"

    # --------------------------
    # GRAPH CONSTRUCTION
    # --------------------------
    ALGO_TRAVERSAL = "traversal"
    ALGO_RECURSIVE = "recursive"
    ALGO_BFS = "bfs"
    ALL_ALGOS = (ALGO_TRAVERSAL, ALGO_RECURSIVE, ALGO_BFS)

    MERGE_MAX = "max"
    MERGE_SUM = "sum"

    # --------------------------
    # I/O FORMATS
    # --------------------------
    EXPORT_EDGE_CSV = "edge-csv"
    EXPORT_GRAPH_JSON = "graph-json"

    # --------------------------
    # STATISTICS
    # --------------------------
    TEST_WILCOXON = "wilcoxon"
    TEST_MANN_WHITNEY = "mann-whitney"
    MODE_EXACT = "exact"
    MODE_NORMAL = "normal-approximation"

    # --------------------------
    # LOGGING / FEEDBACK CAPABILITIES
    # --------------------------
    LOG_TERM = "term"
    LOG_NONE = "none"
