from __future__ import annotations

import errno
import os
import typing as t
from pathlib import Path

from ..generalutils import augmentException
from ..structures import CoocError, FilePath


class _updateExportObjectProtocol(t.Protocol):
    def __call__(self, inst: t.Any, exportObject, **kwargs) -> t.Any:
        return exportObject


def asFilePath(fileOrObject) -> t.Optional[Path]:
    if isinstance(fileOrObject, (str, Path, os.PathLike)):
        return Path(fileOrObject)
    return None


def checkExists(file: Path):
    if not file.exists():
        raise FileNotFoundError(errno.ENOENT, os.strerror(errno.ENOENT), str(file))


class CoocIOBase:
    __name__: t.Optional[str] = None

    def __init__(self, options=None):
        """
        Provides access to a modularized version of the common import/export structure:
          * read or create the raw object
          * parse bulk content, where applicable
          * parse individual instances (records, edges), where applicable
          * apply formatting

        This is all viewable under the ``__call__`` function.

        Parameters
        ----------
        options
            Dict-like defaults for this importer/exporter. If *None*, defaults to an
            empty option set. Keywords passed during a call take precedence.
        """
        clsName = type(self).__name__
        prefix = "import" if "Importer" in clsName else "export"
        fmtName = clsName.replace("Importer", "").replace("Exporter", "")
        self.__name__ = self.__name__ or f"{prefix}{fmtName}"

        if options is None:
            options = {}
        self.options = options

    def populateMetadata(self, **kwargs):
        return kwargs


class CoocExporter(CoocIOBase):
    exportObject: t.Any

    bulkExport: t.Callable[..., t.Any] | None = None
    """
    Can be defined if the whole input can be converted at once. Must accept
    (data, export object, **kwargs) and return the export object.
    """

    updateExportObject: _updateExportObjectProtocol | None = None
    """
    Can be defined for instance-by-instance exports. It is fed each item of
    ``getInstances`` and must return the updated export object, which is eventually
    passed to ``writeFile``.
    """

    def writeFile(self, file: FilePath, exportObject, **kwargs):
        raise NotImplementedError

    def createExportObject(self, **kwargs):
        raise NotImplementedError

    def getInstances(self, data, **kwargs) -> t.Iterable:
        return data

    def individualExport(self, data, exportObject, **kwargs):
        if self.updateExportObject is None:
            return exportObject
        for inst in self.getInstances(data, **kwargs):
            exportObject = self.updateExportObject(inst, exportObject, **kwargs)
        return exportObject

    def formatReturnObject(self, exportObject, **kwargs):
        return exportObject

    def __call__(self, data, file: FilePath = None, **kwargs):
        file = asFilePath(file)
        kwargs = self.populateMetadata(**{**self.options, **kwargs})

        exportObject = self.createExportObject(**kwargs)
        if self.bulkExport is not None:
            exportObject = self.bulkExport(data, exportObject, **kwargs)
        exportObject = self.individualExport(data, exportObject, **kwargs)
        self.exportObject = exportObject
        if file is not None:
            self.writeFile(file, exportObject, **kwargs)
        return self.formatReturnObject(exportObject, **kwargs)


class CoocImporter(CoocIOBase):
    importObject: t.Any

    formatSingleInstance: t.Callable[..., t.Any] | None = None
    """
    Can be defined to cause instance-by-instance parsing. If defined, must accept
    (instance, **kwargs) and return the parsed value.
    """

    bulkImport: t.Callable[..., t.Any] | None = None
    """
    Can be defined to parse the whole import object at once. Must accept
    (import object, **kwargs) and return the parsed value. Takes precedence over
    ``formatSingleInstance``.
    """

    def readFile(self, file: FilePath, **kwargs):
        raise NotImplementedError

    def getInstances(self, importObject, **kwargs) -> t.Iterable:
        return importObject

    def finalizeImport(self, parsed, **kwargs):
        return parsed

    def individualImport(self, importObject, **kwargs):
        if self.formatSingleInstance is None:
            return []
        return [
            self.formatSingleInstance(inst, **kwargs)
            for inst in self.getInstances(importObject, **kwargs)
        ]

    def __call__(self, inputFileOrObject: t.Union[FilePath, t.Any], **kwargs):
        """
        Imports a file, or an already-read object of the kind ``readFile`` returns.

        Parameters
        ----------
        inputFileOrObject
            File path or object to import
        **kwargs
            Options forwarded to every parsing stage
        """
        file = asFilePath(inputFileOrObject)
        kwargs = self.populateMetadata(**{**self.options, **kwargs}, file=file)
        try:
            if file is not None:
                checkExists(file)
                inputFileOrObject = self.readFile(**kwargs)
            self.importObject = inputFileOrObject

            if self.bulkImport is not None:
                parsed = self.bulkImport(inputFileOrObject, **kwargs)
            else:
                parsed = self.individualImport(inputFileOrObject, **kwargs)
            return self.finalizeImport(parsed, **kwargs)
        except CoocError as ex:
            # Errors that already name their file are left alone
            if file is not None and str(file) not in str(ex):
                augmentException(ex, f"{file}: ")
            raise
