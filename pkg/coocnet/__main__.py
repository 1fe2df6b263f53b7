from __future__ import annotations

import argparse
import logging
import sys
import typing as t
from dataclasses import dataclass, field, fields
from pathlib import Path

import pandas as pd

from . import __version__
from .bench import (
    depthSensitivity,
    installAllocationHook,
    pickSeeds,
    removeAllocationHook,
    report,
    runBenchmark,
)
from .compio import (
    exportGraph,
    importGraph,
    loadCorpus,
    loadDictionary,
    loadStopwords,
    writeCorpus,
)
from .constants import COOC_ENUMS, DEFAULTS
from .corpus import dictionaryFromKeywords, generateSyntheticCorpus
from .index import InvertedIndex, buildIndex, loadSnapshot, saveSnapshot
from .logger import getAppLogger
from .processing import buildBfs, buildRecursive, buildTraversal
from .structures import (
    CoocError,
    ExpandParams,
    FilterConditions,
    TokenizerConfig,
)

_logger = getAppLogger(__name__)

PROG = "coocnet"


@dataclass
class RunConfig:
    """Everything one CLI invocation needs, with defaults from the packaged YAML"""

    subcommand: str
    corpus: Path = None
    corpusFormat: str = COOC_ENUMS.CORPUS_JSONL
    index: Path = None
    graph: Path = None
    stopwords: Path = None
    dictionary: Path = None
    dictFromKeywords: bool = False
    fieldsUsed: t.Tuple[str, ...] = tuple(DEFAULTS["tokenizer"]["fields"])
    lowercase: bool = DEFAULTS["tokenizer"]["lowercase"]
    algo: str = DEFAULTS["build"]["algo"]
    seeds: t.List[str] = field(default_factory=list)
    filters: t.Dict[str, str] = field(default_factory=dict)
    depth: int = DEFAULTS["build"]["depth"]
    branch: int = DEFAULTS["build"]["branch"]
    minDf: int = DEFAULTS["build"]["minDf"]
    limit: t.Optional[int] = DEFAULTS["build"]["limit"]
    format: str = DEFAULTS["build"]["format"]
    out: Path = None
    termsOut: Path = None
    reps: int = DEFAULTS["bench"]["reps"]
    topSeeds: int = DEFAULTS["bench"]["topSeeds"]
    withRecursive: bool = False
    depths: t.List[int] = field(
        default_factory=lambda: list(DEFAULTS["depthStudy"]["depths"])
    )
    nDocs: int = DEFAULTS["synth"]["nDocs"]
    vocabSize: int = DEFAULTS["synth"]["vocabSize"]
    meanLen: float = DEFAULTS["synth"]["meanLen"]
    rngSeed: int = DEFAULTS["synth"]["rngSeed"]

    def __post_init__(self):
        for name in "depth", "branch", "reps", "topSeeds", "vocabSize":
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, was {getattr(self, name)}")
        if self.nDocs < 0:
            raise ValueError(f"n-docs must be >= 0, was {self.nDocs}")
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be >= 1, was {self.limit}")
        if self.minDf < 0:
            raise ValueError(f"min-df must be >= 0, was {self.minDf}")
        if self.meanLen <= 0:
            raise ValueError(f"mean-len must be > 0, was {self.meanLen}")

    @classmethod
    def fromArgs(cls, args: argparse.Namespace):
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in vars(args).items() if k in known})

    def expandParams(self) -> ExpandParams:
        return ExpandParams(self.depth, self.branch, self.minDf)


# -----
# Argument types
# -----
def _positiveInt(value: str) -> int:
    parsed = int(value)
    if parsed < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, was {value}")
    return parsed


def _nonNegativeInt(value: str) -> int:
    parsed = int(value)
    if parsed < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, was {value}")
    return parsed


def _positiveFloat(value: str) -> float:
    parsed = float(value)
    if not parsed > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, was {value}")
    return parsed


def _fieldList(value: str) -> t.Tuple[str, ...]:
    parsed = tuple(part.strip() for part in value.split(",") if part.strip())
    unknown = [f for f in parsed if f not in COOC_ENUMS.ALL_FIELDS]
    if unknown or not parsed:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated subset of {','.join(COOC_ENUMS.ALL_FIELDS)}"
        )
    return parsed


def _filterPair(value: str) -> t.Tuple[str, str]:
    name, sep, label = value.partition("=")
    if not sep or name not in COOC_ENUMS.META_FIELDS:
        raise argparse.ArgumentTypeError(
            f"expected <field>=<value> with field in {','.join(COOC_ENUMS.META_FIELDS)}"
        )
    return name, label


class _FilterAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        filters = dict(getattr(namespace, self.dest) or {})
        name, label = values
        filters[name] = label
        setattr(namespace, self.dest, filters)


# -----
# Parser
# -----
def _addTokenizerArgs(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("tokenizer")
    group.add_argument("--stopwords", type=Path, help="Stopword file, one per line")
    group.add_argument(
        "--dict", dest="dictionary", type=Path, help="Phrase dictionary, one per line"
    )
    group.add_argument(
        "--dict-from-keywords",
        dest="dictFromKeywords",
        action="store_true",
        help="Also treat multi-token keywords of the corpus as dictionary phrases",
    )
    group.add_argument(
        "--fields",
        dest="fieldsUsed",
        type=_fieldList,
        default=RunConfig.fieldsUsed,
        help="Comma-separated document fields to tokenize, in order",
    )
    group.add_argument(
        "--no-lowercase",
        dest="lowercase",
        action="store_false",
        default=RunConfig.lowercase,
        help="Keep the original letter case",
    )


def _addCorpusArgs(parser: argparse.ArgumentParser, required=False):
    parser.add_argument("--corpus", type=Path, required=required)
    parser.add_argument(
        "--corpus-format",
        dest="corpusFormat",
        choices=[COOC_ENUMS.CORPUS_JSONL, COOC_ENUMS.CORPUS_CSL_TSV],
        default=COOC_ENUMS.CORPUS_JSONL,
    )


def _addSeedArgs(parser: argparse.ArgumentParser, withTop=False):
    parser.add_argument(
        "--seed",
        dest="seeds",
        action="append",
        default=[],
        help="Seed term; repeat the flag for several",
    )
    if withTop:
        parser.add_argument(
            "--top-seeds",
            dest="topSeeds",
            type=_positiveInt,
            default=DEFAULTS["bench"]["topSeeds"],
            help="Without --seed, use this many of the highest-df terms as seeds",
        )


def _addExpandArgs(parser: argparse.ArgumentParser, section="build"):
    defaults = DEFAULTS[section]
    parser.add_argument("--depth", type=_positiveInt, default=defaults["depth"])
    parser.add_argument("--branch", type=_positiveInt, default=defaults["branch"])
    parser.add_argument(
        "--min-df", dest="minDf", type=_nonNegativeInt, default=defaults["minDf"]
    )


def _addGraphOutputArgs(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--limit",
        type=_positiveInt,
        default=DEFAULTS["build"]["limit"],
        help="Maximum number of edges to export (default: all)",
    )
    parser.add_argument(
        "--format",
        choices=[COOC_ENUMS.EXPORT_EDGE_CSV, COOC_ENUMS.EXPORT_GRAPH_JSON],
        default=DEFAULTS["build"]["format"],
    )


def makeParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Keyword co-occurrence networks from a document corpus",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log",
        choices=[COOC_ENUMS.LOG_TERM, COOC_ENUMS.LOG_NONE],
        default=COOC_ENUMS.LOG_TERM,
        help="Where progress messages go",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="command")

    cmd = sub.add_parser("index", help="Tokenize a corpus into an index snapshot")
    _addCorpusArgs(cmd, required=True)
    _addTokenizerArgs(cmd)
    cmd.add_argument("--out", type=Path, required=True)

    cmd = sub.add_parser("build", help="Build a co-occurrence graph and export it")
    cmd.add_argument("--index", type=Path)
    _addCorpusArgs(cmd)
    _addTokenizerArgs(cmd)
    cmd.add_argument(
        "--algo", choices=COOC_ENUMS.ALL_ALGOS, default=DEFAULTS["build"]["algo"]
    )
    _addSeedArgs(cmd)
    cmd.add_argument(
        "--filter",
        dest="filters",
        type=_filterPair,
        action=_FilterAction,
        default={},
        help="Metadata condition <field>=<value>; repeat the flag for several",
    )
    _addExpandArgs(cmd)
    _addGraphOutputArgs(cmd)
    cmd.add_argument("--out", type=Path, required=True)

    cmd = sub.add_parser("export", help="Re-export a stored graph")
    cmd.add_argument("--graph", type=Path, required=True)
    _addGraphOutputArgs(cmd)
    cmd.add_argument("--out", type=Path, required=True)

    cmd = sub.add_parser("stats", help="Document-frequency histogram of an index")
    cmd.add_argument("--index", type=Path, required=True)
    cmd.add_argument("--out", type=Path, required=True)
    cmd.add_argument(
        "--terms-out", dest="termsOut", type=Path, help="Also write per-term dfs"
    )

    synth = DEFAULTS["synth"]
    cmd = sub.add_parser("synth", help="Generate a synthetic corpus")
    cmd.add_argument(
        "--n-docs", dest="nDocs", type=_nonNegativeInt, default=synth["nDocs"]
    )
    cmd.add_argument(
        "--vocab-size", dest="vocabSize", type=_positiveInt, default=synth["vocabSize"]
    )
    cmd.add_argument(
        "--mean-len", dest="meanLen", type=_positiveFloat, default=synth["meanLen"]
    )
    cmd.add_argument("--rng-seed", dest="rngSeed", type=int, default=synth["rngSeed"])
    cmd.add_argument("--out", type=Path, required=True)

    cmd = sub.add_parser("bench", help="Benchmark traversal against expansion")
    cmd.add_argument("--index", type=Path)
    _addCorpusArgs(cmd, required=True)
    _addTokenizerArgs(cmd)
    _addSeedArgs(cmd, withTop=True)
    _addExpandArgs(cmd, "bench")
    cmd.add_argument("--reps", type=_positiveInt, default=DEFAULTS["bench"]["reps"])
    cmd.add_argument("--with-recursive", dest="withRecursive", action="store_true")
    cmd.add_argument("--out", type=Path, required=True)

    study = DEFAULTS["depthStudy"]
    cmd = sub.add_parser("depth", help="Top-edge stability across search depths")
    cmd.add_argument("--index", type=Path)
    _addCorpusArgs(cmd)
    _addTokenizerArgs(cmd)
    _addSeedArgs(cmd, withTop=True)
    cmd.set_defaults(topSeeds=study["topSeeds"])
    cmd.add_argument(
        "--depths", type=_positiveInt, nargs="+", default=list(study["depths"])
    )
    cmd.add_argument("--branch", type=_positiveInt, default=study["branch"])
    cmd.add_argument("--limit", type=_positiveInt, default=study["limit"])
    cmd.add_argument(
        "--min-df",
        dest="minDf",
        type=_nonNegativeInt,
        default=DEFAULTS["build"]["minDf"],
    )
    cmd.add_argument("--out", type=Path, required=True)
    return parser


# -----
# Subcommands
# -----
def _tokenizerConfig(cfg: RunConfig, corpus=None) -> TokenizerConfig:
    stopwords = loadStopwords(cfg.stopwords) if cfg.stopwords else set()
    dictionary = loadDictionary(cfg.dictionary) if cfg.dictionary else set()
    if cfg.dictFromKeywords and corpus is not None:
        dictionary |= dictionaryFromKeywords(corpus)
    return TokenizerConfig(
        stopwords=stopwords,
        userDictionary=dictionary,
        lowercase=cfg.lowercase,
        fieldsUsed=cfg.fieldsUsed,
    )


def _loadCorpusAndIndex(cfg: RunConfig, needCorpus: bool):
    """
    Resolves (corpus, tokenizer config, index). A snapshot is preferred for the
    index; without one the index is built from the corpus.
    """
    corpus = None
    if cfg.corpus is not None:
        corpus = loadCorpus(cfg.corpus, cfg.corpusFormat)
    elif needCorpus or cfg.index is None:
        raise CoocError(f"`{cfg.subcommand}` needs --corpus here")
    tokenizerCfg = _tokenizerConfig(cfg, corpus)
    if cfg.index is not None:
        index = loadSnapshot(cfg.index)
    else:
        index = buildIndex(corpus, tokenizerCfg)
    return corpus, tokenizerCfg, index


def _resolveSeeds(cfg: RunConfig, index: InvertedIndex):
    if cfg.seeds:
        return cfg.seeds
    return pickSeeds(index, cfg.topSeeds, cfg.minDf)


def runIndex(cfg: RunConfig):
    corpus = loadCorpus(cfg.corpus, cfg.corpusFormat)
    index = buildIndex(corpus, _tokenizerConfig(cfg, corpus))
    saveSnapshot(index, cfg.out)


def runBuild(cfg: RunConfig):
    isTraversal = cfg.algo == COOC_ENUMS.ALGO_TRAVERSAL
    corpus, tokenizerCfg, index = _loadCorpusAndIndex(cfg, needCorpus=isTraversal)
    cond = FilterConditions(cfg.seeds, cfg.filters)
    if isTraversal:
        graph = buildTraversal(index, corpus, tokenizerCfg, cond)
    elif cfg.algo == COOC_ENUMS.ALGO_RECURSIVE:
        graph = buildRecursive(index, cond, cfg.expandParams())
    else:
        graph = buildBfs(index, cond, cfg.expandParams())
    _logger.info(f"Built {graph!r} with {cfg.algo}")
    exportGraph(graph, cfg.limit, cfg.format, cfg.out)


def runExport(cfg: RunConfig):
    graph = importGraph(cfg.graph)
    exportGraph(graph, cfg.limit, cfg.format, cfg.out)


def runStats(cfg: RunConfig):
    index = loadSnapshot(cfg.index)
    hist = pd.DataFrame(index.dfHistogram(), columns=["df", "num_terms"])
    hist.to_csv(cfg.out, index=False, encoding="utf-8", lineterminator="\n")
    if cfg.termsOut is not None:
        terms = pd.DataFrame(index.termDfTable(), columns=["term", "df"])
        terms.to_csv(cfg.termsOut, index=False, encoding="utf-8", lineterminator="\n")
    _logger.info(f"Wrote df histogram with {len(hist)} buckets to {cfg.out}")


def runSynth(cfg: RunConfig):
    corpus = generateSyntheticCorpus(cfg.nDocs, cfg.vocabSize, cfg.meanLen, cfg.rngSeed)
    writeCorpus(corpus, cfg.out)


def runBench(cfg: RunConfig):
    corpus, tokenizerCfg, index = _loadCorpusAndIndex(cfg, needCorpus=True)
    seeds = _resolveSeeds(cfg, index)
    installAllocationHook()
    try:
        samples = runBenchmark(
            index,
            corpus,
            tokenizerCfg,
            seeds,
            cfg.expandParams(),
            cfg.reps,
            withRecursive=cfg.withRecursive,
        )
    finally:
        removeAllocationHook()
    report(samples, cfg.out)


def runDepth(cfg: RunConfig):
    _, _, index = _loadCorpusAndIndex(cfg, needCorpus=False)
    seeds = _resolveSeeds(cfg, index)
    table = depthSensitivity(index, seeds, cfg.depths, cfg.branch, cfg.limit, cfg.minDf)
    table.to_csv(cfg.out, index=False, encoding="utf-8", lineterminator="\n")
    _logger.attention(f"Wrote {len(table)} depth comparisons to {cfg.out}")


COMMANDS: t.Dict[str, t.Callable[[RunConfig], None]] = {
    "index": runIndex,
    "build": runBuild,
    "export": runExport,
    "stats": runStats,
    "synth": runSynth,
    "bench": runBench,
    "depth": runDepth,
}


def _attachLogHandler(args: argparse.Namespace):
    logger = getAppLogger()
    logger.setLevel(logging.DEBUG if args.verbose else DEFAULTS["log"]["level"])
    if args.log == COOC_ENUMS.LOG_NONE:
        return None
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logger.addHandler(handler)
    return handler


def dispatch(argv: t.Sequence[str] = None) -> int:
    """
    Runs one command line. Returns the exit code: 0 on success, 1 when the run fails
    with a domain or I/O error (reported as one line on stderr), 2 for usage errors.
    """
    parser = makeParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else 0 if ex.code is None else 2

    handler = _attachLogHandler(args)
    try:
        cfg = RunConfig.fromArgs(args)
        COMMANDS[cfg.subcommand](cfg)
    except (ValueError, OSError) as ex:
        message = " ".join(str(ex).split())
        print(f"{PROG}: error: {message}", file=sys.stderr)
        return 1
    finally:
        if handler is not None:
            getAppLogger().removeHandler(handler)
    return 0


def mainCli():
    sys.exit(dispatch())


if __name__ == "__main__":
    mainCli()
