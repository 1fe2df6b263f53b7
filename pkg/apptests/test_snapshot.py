import struct
import zlib

import pytest

from apptests.helperclasses import CorpusTester
from apptests.testingconsts import C3_DOCS
from coocnet.constants import SNAPSHOT_MAGIC, SNAPSHOT_VERSION
from coocnet.index import (
    buildIndex,
    indexFromSnapshotBytes,
    loadSnapshot,
    saveSnapshot,
    snapshotBytes,
)
from coocnet.structures import (
    Document,
    FilterConditions,
    SnapshotChecksumError,
    SnapshotFormatError,
    SnapshotVersionError,
    TokenizerConfig,
)


def test_round_trip_c3(tmp_path, c3Index):
    file = tmp_path / "idx.bin"
    saveSnapshot(c3Index, file)
    loaded = loadSnapshot(file)
    assert loaded == c3Index
    assert loaded.lexicon == c3Index.lexicon
    assert loaded.matchDocs(FilterConditions({"a", "c"})) == {"D1"}
    assert file.read_bytes().startswith(SNAPSHOT_MAGIC)


def test_round_trip_empty(tmp_path, defaultCfg):
    empty = buildIndex([], defaultCfg)
    file = tmp_path / "empty.bin"
    saveSnapshot(empty, file)
    loaded = loadSnapshot(file)
    assert loaded == empty and loaded.docCount == 0


def test_round_trip_metadata_and_positions(defaultCfg):
    corpus = [
        Document("b-doc", title="x y x", discipline="Ökonomie", category="c1"),
        Document("a-doc", title="y", keywords=("multi word",)),
        Document("empty"),
    ]
    index = buildIndex(corpus, defaultCfg)
    loaded = indexFromSnapshotBytes(snapshotBytes(index))
    assert loaded == index
    assert loaded.docMeta["b-doc"].discipline == "Ökonomie"
    assert loaded.postings("x")[0].positions == (0, 2)


def test_random_round_trips(defaultCfg):
    tester = CorpusTester(maxDocs=40)
    for _ in range(20):
        index = buildIndex(tester.randomCorpus(), defaultCfg)
        data = snapshotBytes(index)
        assert indexFromSnapshotBytes(data) == index
        assert snapshotBytes(indexFromSnapshotBytes(data)) == data


def test_deterministic_bytes():
    cfg = TokenizerConfig()
    first = snapshotBytes(buildIndex(C3_DOCS, cfg))
    assert snapshotBytes(buildIndex(list(reversed(C3_DOCS)), cfg)) == first


def test_truncated_file(tmp_path, c3Index):
    file = tmp_path / "idx.bin"
    saveSnapshot(c3Index, file)
    data = file.read_bytes()
    file.write_bytes(data[: len(data) // 2])
    with pytest.raises(SnapshotChecksumError, match="idx.bin"):
        loadSnapshot(file)


@pytest.mark.parametrize("keep", [3, 8, 10, 13])
def test_truncated_inside_header(c3Index, keep):
    data = snapshotBytes(c3Index)
    with pytest.raises(SnapshotChecksumError, match="truncated"):
        indexFromSnapshotBytes(data[:keep])


def test_flipped_byte(c3Index):
    data = bytearray(snapshotBytes(c3Index))
    data[20] ^= 0xFF
    with pytest.raises(SnapshotChecksumError):
        indexFromSnapshotBytes(bytes(data))


def test_bad_magic(c3Index):
    data = snapshotBytes(c3Index)
    with pytest.raises(SnapshotFormatError):
        indexFromSnapshotBytes(b"NOTANIDX" + data[8:])
    with pytest.raises(SnapshotFormatError):
        indexFromSnapshotBytes(b"")
    with pytest.raises(SnapshotFormatError):
        indexFromSnapshotBytes(b"XYZ")


def test_version_mismatch(c3Index):
    payload = snapshotBytes(c3Index)[:-4]
    header = len(SNAPSHOT_MAGIC)
    version = struct.pack("<H", SNAPSHOT_VERSION + 1)
    payload = payload[:header] + version + payload[header + 2 :]
    data = payload + struct.pack("<I", zlib.crc32(payload))
    with pytest.raises(SnapshotVersionError):
        indexFromSnapshotBytes(data)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        loadSnapshot(tmp_path / "none.bin")
