import json
import logging

import pytest

from coocnet.__main__ import RunConfig, dispatch, makeParser
from coocnet.constants import DEFAULTS, WARMUP_ENV_VAR
from coocnet.index import loadSnapshot
from coocnet.logger import getAppLogger

EDGE_HEADER = "source,target,weight"


def _run(*argv):
    return dispatch(["--log", "none", *map(str, argv)])


@pytest.fixture
def c3Snapshot(c3File, tmp_path):
    out = tmp_path / "c3.idx"
    assert _run("index", "--corpus", c3File, "--out", out) == 0
    return out


@pytest.fixture
def synthCorpus(tmp_path):
    out = tmp_path / "synth.jsonl"
    args = ["--n-docs", 60, "--vocab-size", 40, "--mean-len", 8, "--rng-seed", 3]
    assert _run("synth", *args, "--out", out) == 0
    return out


def _buildArgs(snapshot, out, algo="bfs", *extra):
    return [
        "build", "--index", snapshot, "--algo", algo, "--seed", "a",
        "--depth", 2, "--branch", 2, "--out", out, *extra,
    ]  # fmt: skip


def test_build_bfs(c3Snapshot, tmp_path):
    out = tmp_path / "g.csv"
    assert _run(*_buildArgs(c3Snapshot, out)) == 0
    assert out.read_text(encoding="utf-8").splitlines() == [
        EDGE_HEADER,
        "a,b,2",
        "a,c,1",
        "b,c,1",
    ]


def test_bfs_and_recursive_exports_match(c3Snapshot, tmp_path):
    for fmt in "edge-csv", "graph-json":
        bfsOut, recOut = tmp_path / f"bfs.{fmt}", tmp_path / f"rec.{fmt}"
        assert _run(*_buildArgs(c3Snapshot, bfsOut, "bfs", "--format", fmt)) == 0
        assert _run(*_buildArgs(c3Snapshot, recOut, "recursive", "--format", fmt)) == 0
        assert bfsOut.read_bytes() == recOut.read_bytes()


def test_build_is_deterministic(c3Snapshot, c3File, tmp_path):
    outputs = []
    for ii in range(2):
        out = tmp_path / f"trav{ii}.csv"
        args = ["build", "--index", c3Snapshot, "--corpus", c3File]
        assert _run(*args, "--algo", "traversal", "--out", out) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[0].decode("utf-8").splitlines() == [
        EDGE_HEADER,
        "a,b,2",
        "b,c,2",
        "a,c,1",
    ]


def test_build_without_snapshot(c3File, tmp_path):
    out = tmp_path / "g.csv"
    args = ["build", "--corpus", c3File, "--seed", "a", "--depth", 1, "--branch", 2]
    assert _run(*args, "--out", out) == 0
    assert len(out.read_text(encoding="utf-8").splitlines()) == 3


def test_unknown_seed_gives_empty_export(c3Snapshot, tmp_path):
    out = tmp_path / "g.csv"
    args = ["build", "--index", c3Snapshot, "--algo", "bfs", "--seed", "zzz"]
    assert _run(*args, "--out", out) == 0
    assert out.read_text(encoding="utf-8") == EDGE_HEADER + "\n"

    jsonOut = tmp_path / "g.json"
    assert _run(*args, "--format", "graph-json", "--out", jsonOut) == 0
    assert json.loads(jsonOut.read_text(encoding="utf-8")) == {
        "nodes": ["zzz"],
        "edges": [],
    }


def test_limit_and_filter(c3Snapshot, c3File, tmp_path):
    out = tmp_path / "g.csv"
    args = ["build", "--index", c3Snapshot, "--corpus", c3File, "--algo", "traversal"]
    assert _run(*args, "--limit", 1, "--out", out) == 0
    assert out.read_text(encoding="utf-8").splitlines() == [EDGE_HEADER, "a,b,2"]

    assert _run(*args, "--filter", "discipline=physics", "--out", out) == 0
    assert out.read_text(encoding="utf-8") == EDGE_HEADER + "\n"


def test_export_round_trip(c3Snapshot, tmp_path):
    stored = tmp_path / "g.json"
    assert _run(*_buildArgs(c3Snapshot, stored, "bfs", "--format", "graph-json")) == 0
    out = tmp_path / "top.csv"
    assert _run("export", "--graph", stored, "--limit", 1, "--out", out) == 0
    assert out.read_text(encoding="utf-8").splitlines() == [EDGE_HEADER, "a,b,2"]


def test_empty_corpus_index(tmp_path):
    corpus = tmp_path / "empty.jsonl"
    corpus.write_bytes(b"")
    out = tmp_path / "idx.bin"
    assert _run("index", "--corpus", corpus, "--out", out) == 0
    index = loadSnapshot(out)
    assert index.docCount == 0 and not index.lexicon

    stats = tmp_path / "hist.csv"
    assert _run("stats", "--index", out, "--out", stats) == 0
    assert stats.read_text(encoding="utf-8") == "df,num_terms\n"


def test_stats(c3Snapshot, tmp_path):
    hist, terms = tmp_path / "hist.csv", tmp_path / "terms.csv"
    args = ["stats", "--index", c3Snapshot, "--out", hist, "--terms-out", terms]
    assert _run(*args) == 0
    assert hist.read_text(encoding="utf-8") == "df,num_terms\n2,2\n3,1\n"
    assert terms.read_text(encoding="utf-8") == "term,df\na,2\nc,2\nb,3\n"


def test_synth_is_reproducible(synthCorpus, tmp_path):
    again = tmp_path / "again.jsonl"
    args = ["--n-docs", 60, "--vocab-size", 40, "--mean-len", 8, "--rng-seed", 3]
    assert _run("synth", *args, "--out", again) == 0
    assert again.read_bytes() == synthCorpus.read_bytes()
    assert len(again.read_text(encoding="utf-8").splitlines()) == 60


def test_depth(synthCorpus, tmp_path):
    out = tmp_path / "depth.csv"
    args = ["depth", "--corpus", synthCorpus, "--top-seeds", 3, "--depths", 1, 2, 3]
    assert _run(*args, "--branch", 3, "--limit", 10, "--out", out) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "seed,depth_a,depth_b,jaccard"
    assert len(lines) == 1 + 3 * 2


def test_bench(synthCorpus, tmp_path, monkeypatch):
    monkeypatch.setenv(WARMUP_ENV_VAR, "0")
    out = tmp_path / "bench.csv"
    args = ["bench", "--corpus", synthCorpus, "--top-seeds", 2, "--reps", 2]
    assert _run(*args, "--with-recursive", "--out", out) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "algo,seed,rep,wall_time_s,peak_mem_bytes"
    assert len(lines) == 1 + 3 * 2 * 2
    summary = json.loads((tmp_path / "bench.summary.json").read_text(encoding="utf-8"))
    assert set(summary["algorithms"]) == {"traversal", "recursive", "bfs"}


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["build", "--bogus"],
        ["build", "--out", "g.csv", "--depth", "0"],
        ["build", "--out", "g.csv", "--filter", "colour=red"],
        ["build", "--out", "g.csv", "--algo", "dfs"],
        ["synth", "--out", "s.jsonl", "--mean-len", "-1"],
        ["index", "--corpus", "c.jsonl", "--out", "x.idx", "--format", "jsonl"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert _run(*argv) == 2
    assert capsys.readouterr().err


def test_domain_errors(c3Snapshot, tmp_path, capsys):
    missing = tmp_path / "missing.jsonl"
    assert _run("index", "--corpus", missing, "--out", tmp_path / "x.idx") == 1
    err = capsys.readouterr().err.splitlines()
    assert len(err) == 1 and err[0].startswith("coocnet: error:")
    assert "missing.jsonl" in err[0]

    # Traversal re-tokenizes documents, so a snapshot alone is not enough
    args = ["build", "--index", c3Snapshot, "--algo", "traversal"]
    assert _run(*args, "--out", tmp_path / "g.csv") == 1

    # Expansion without a seed term
    args = ["build", "--index", c3Snapshot, "--algo", "bfs"]
    assert _run(*args, "--out", tmp_path / "g.csv") == 1

    args = ["bench", "--index", c3Snapshot, "--corpus", tmp_path / "none.jsonl"]
    assert _run(*args, "--out", tmp_path / "b.csv") == 1

    corrupt = tmp_path / "corrupt.idx"
    corrupt.write_bytes(c3Snapshot.read_bytes()[:-3] + b"xyz")
    args = ["stats", "--index", corrupt, "--out", tmp_path / "h.csv"]
    assert _run(*args) == 1
    assert "corrupt.idx" in capsys.readouterr().err


def test_version(capsys):
    from coocnet import __version__

    assert dispatch(["--version"]) == 0
    assert capsys.readouterr().out.strip() == __version__


def test_run_config_defaults():
    args = makeParser().parse_args(["build", "--seed", "a", "--out", "g.csv"])
    cfg = RunConfig.fromArgs(args)
    assert cfg.algo == "bfs" and cfg.seeds == ["a"]
    assert cfg.expandParams().depth == 2 and cfg.limit is None
    with pytest.raises(ValueError):
        RunConfig("build", reps=0)


def test_index_csl_tsv(tmp_path):
    corpus = tmp_path / "csl.tsv"
    corpus.write_text(
        "Title one\tAbstract\tkw a_kw b\tEng\tInd\nTitle two\t\t\tMed\tCli\n",
        encoding="utf-8",
    )
    out = tmp_path / "csl.idx"
    args = ["index", "--corpus", corpus, "--corpus-format", "csl-tsv"]
    assert _run(*args, "--out", out) == 0
    assert loadSnapshot(out).docCount == 2


@pytest.mark.parametrize(
    "flags, expected", [([], logging.WARNING), (["-v"], logging.DEBUG)]
)
def test_log_level(c3File, tmp_path, monkeypatch, flags, expected):
    monkeypatch.setitem(DEFAULTS["log"], "level", "WARNING")
    logger = getAppLogger()
    oldLevel = logger.level
    try:
        argv = ["index", "--corpus", str(c3File), "--out", str(tmp_path / "c3.idx")]
        assert dispatch(["--log", "none", *flags, *argv]) == 0
        assert logger.level == expected
    finally:
        logger.setLevel(oldLevel)
