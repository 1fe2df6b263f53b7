from .coocio import (
    CoocIO,
    defaultIo,
    exportGraph,
    importGraph,
    loadCorpus,
    writeCorpus,
)
from .exporters import *
from .importers import *
