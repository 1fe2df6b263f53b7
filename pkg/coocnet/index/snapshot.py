from __future__ import annotations

import struct
import zlib
from io import BytesIO

from .invertedindex import DocMeta, InvertedIndex, Posting
from ..constants import SNAPSHOT_MAGIC, SNAPSHOT_VERSION
from ..generalutils import augmentException
from ..logger import getAppLogger
from ..structures import (
    FilePath,
    SnapshotChecksumError,
    SnapshotError,
    SnapshotFormatError,
    SnapshotVersionError,
)

__all__ = ["saveSnapshot", "loadSnapshot", "snapshotBytes", "indexFromSnapshotBytes"]

_logger = getAppLogger(__name__)

_u16 = struct.Struct("<H")
_u32 = struct.Struct("<I")
_crcSize = _u32.size
_headerSize = len(SNAPSHOT_MAGIC) + _u16.size


class _SnapshotWriter:
    def __init__(self):
        self.buffer = BytesIO()

    def uint(self, value: int):
        self.buffer.write(_u32.pack(value))

    def string(self, value: str):
        encoded = value.encode("utf-8")
        self.uint(len(encoded))
        self.buffer.write(encoded)


class _SnapshotReader:
    def __init__(self, payload: bytes, offset=0):
        self.payload = payload
        self.offset = offset

    def take(self, size: int) -> bytes:
        end = self.offset + size
        if end > len(self.payload):
            raise SnapshotFormatError("Snapshot ends in the middle of a record")
        chunk = self.payload[self.offset : end]
        self.offset = end
        return chunk

    def uint(self) -> int:
        return _u32.unpack(self.take(_u32.size))[0]

    def string(self) -> str:
        try:
            return self.take(self.uint()).decode("utf-8")
        except UnicodeDecodeError as ex:
            raise SnapshotFormatError(f"Snapshot string is not UTF-8 ({ex.reason})")


def snapshotBytes(index: InvertedIndex) -> bytes:
    """
    Serializes ``index``. Documents and terms are written in sorted order, postings as
    (row delta, tf, position deltas), and a CRC-32 of everything before it closes the
    file, so equal indexes always give equal bytes.
    """
    writer = _SnapshotWriter()
    writer.buffer.write(SNAPSHOT_MAGIC)
    writer.buffer.write(_u16.pack(SNAPSHOT_VERSION))

    writer.uint(index.docCount)
    for docId in index.docIds:
        meta = index.docMeta[docId]
        writer.string(docId)
        writer.string(meta.discipline)
        writer.string(meta.category)
        writer.uint(meta.numTerms)

    writer.uint(len(index.lexicon))
    for termId, term in enumerate(index.terms):
        writer.string(term)
        rows = index.termRows(termId)
        writer.uint(len(rows))
        prevRow = 0
        for row, posting in zip(rows.tolist(), index.postingLists[term]):
            writer.uint(row - prevRow)
            prevRow = row
            writer.uint(posting.tf)
            prevPos = 0
            for pos in posting.positions:
                writer.uint(pos - prevPos)
                prevPos = pos

    payload = writer.buffer.getvalue()
    return payload + _u32.pack(zlib.crc32(payload))


def indexFromSnapshotBytes(data: bytes) -> InvertedIndex:
    head = data[: len(SNAPSHOT_MAGIC)]
    if not head or not SNAPSHOT_MAGIC.startswith(head):
        raise SnapshotFormatError("Not a coocnet index snapshot (bad magic bytes)")
    if len(data) < _headerSize + _crcSize:
        raise SnapshotChecksumError(
            f"Snapshot is truncated to {len(data)} bytes, shorter than its header"
        )
    payload, stored = data[:-_crcSize], _u32.unpack(data[-_crcSize:])[0]
    if zlib.crc32(payload) != stored:
        raise SnapshotChecksumError(
            "Snapshot checksum mismatch, the file is truncated or corrupted"
        )
    version = _u16.unpack(payload[len(SNAPSHOT_MAGIC) : _headerSize])[0]
    if version != SNAPSHOT_VERSION:
        raise SnapshotVersionError(
            f"Snapshot format version {version} is not supported "
            f"(expected {SNAPSHOT_VERSION})"
        )

    reader = _SnapshotReader(payload, _headerSize)
    docIds = []
    docMeta = {}
    for _ in range(reader.uint()):
        docId = reader.string()
        docMeta[docId] = DocMeta(reader.string(), reader.string(), reader.uint())
        docIds.append(docId)
    if docIds != sorted(set(docIds)):
        raise SnapshotFormatError("Snapshot documents are not unique and sorted")

    postingLists = {}
    prevTerm = None
    for _ in range(reader.uint()):
        term = reader.string()
        if prevTerm is not None and term <= prevTerm:
            raise SnapshotFormatError("Snapshot terms are not unique and sorted")
        prevTerm = term
        postings = []
        row = 0
        for _ in range(reader.uint()):
            delta = reader.uint()
            if postings and not delta:
                raise SnapshotFormatError(f'Duplicate document in postings of "{term}"')
            row += delta
            tf = reader.uint()
            positions = []
            pos = 0
            for _ in range(tf):
                pos += reader.uint()
                positions.append(pos)
            if row >= len(docIds):
                raise SnapshotFormatError(
                    f'Posting of "{term}" points past the doc table'
                )
            try:
                postings.append(Posting(docIds[row], tf, tuple(positions)))
            except ValueError as ex:
                raise SnapshotFormatError(str(ex)) from None
        if not postings:
            raise SnapshotFormatError(f'Term "{term}" has no postings')
        postingLists[term] = postings
    if reader.offset != len(payload):
        raise SnapshotFormatError("Unexpected trailing bytes in snapshot")
    return InvertedIndex(docMeta, postingLists)


def saveSnapshot(index: InvertedIndex, file: FilePath):
    data = snapshotBytes(index)
    with open(file, "wb") as ofile:
        ofile.write(data)
    _logger.info(f"Saved index snapshot ({len(data)} bytes) to {file}")


def loadSnapshot(file: FilePath) -> InvertedIndex:
    with open(file, "rb") as ifile:
        data = ifile.read()
    try:
        index = indexFromSnapshotBytes(data)
    except SnapshotError as ex:
        augmentException(ex, f"{file}: ")
        raise
    _logger.info(f"Loaded index snapshot from {file}: {index!r}")
    return index
