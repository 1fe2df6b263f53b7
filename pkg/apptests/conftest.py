import pytest

from apptests.testingconsts import C3_DOCS, C3_JSONL
from coocnet.bench import installAllocationHook, removeAllocationHook
from coocnet.corpus import generateSyntheticCorpus
from coocnet.index import buildIndex
from coocnet.structures import TokenizerConfig


@pytest.fixture(scope="session")
def defaultCfg():
    return TokenizerConfig()


@pytest.fixture(scope="session")
def c3Index(defaultCfg):
    return buildIndex(C3_DOCS, defaultCfg)


@pytest.fixture
def c3File(tmp_path):
    file = tmp_path / "c3.jsonl"
    file.write_text(C3_JSONL + "\n", encoding="utf-8")
    return file


@pytest.fixture(scope="module")
def smallSynthetic(defaultCfg):
    corpus = generateSyntheticCorpus(200, 150, 20.0, rngSeed=7)
    return corpus, buildIndex(corpus, defaultCfg)


@pytest.fixture
def allocationHook():
    installAllocationHook()
    yield
    removeAllocationHook()
