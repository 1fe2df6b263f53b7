from __future__ import annotations

import time
from collections import Counter
from itertools import combinations

from ..constants import COOC_ENUMS
from ..corpus import tokenize
from ..index import InvertedIndex
from ..logger import getAppLogger
from ..structures import (
    CoocGraph,
    Corpus,
    CorpusIndexMismatchError,
    FilterConditions,
    TokenizerConfig,
)

__all__ = ["buildTraversal"]

_logger = getAppLogger(__name__)


def buildTraversal(
    index: InvertedIndex,
    corpus: Corpus,
    cfg: TokenizerConfig,
    cond: FilterConditions,
) -> CoocGraph:
    """
    Baseline construction: every document matching ``cond`` is tokenized again and
    each distinct pair of its terms adds 1 to that pair's weight.

    Parameters
    ----------
    index
        Index built from ``corpus``. Only used to find the matching documents
    corpus
        Documents the index was built from, looked up by doc id
    cfg
        Tokenizer settings, which must equal the ones used to build ``index``
    cond
        Filtering conditions selecting the documents to traverse
    """
    start = time.perf_counter()
    byId = {doc.docId: doc for doc in corpus}
    missing = [docId for docId in index.docIds if docId not in byId]
    if missing:
        shown = ", ".join(missing[:5]) + (", ..." if len(missing) > 5 else "")
        raise CorpusIndexMismatchError(
            f"{len(missing)} indexed document(s) are missing from the corpus: {shown}"
        )

    graph = CoocGraph(seeds=cond.terms)
    pairCounts = Counter()
    for docId in index.docIdsAt(index.matchRows(cond)):
        # Weights count documents, so repeated tokens collapse first. Sorted terms
        # make every generated pair canonical
        terms = sorted(set(tokenize(byId[docId], cfg).terms))
        graph.nodes.update(terms)
        pairCounts.update(combinations(terms, 2))
    for (u, v), count in pairCounts.items():
        graph.mergeEdge(u, v, count, COOC_ENUMS.MERGE_SUM)
    elapsed = time.perf_counter() - start
    _logger.debug("Traversal built %r in %.4fs", graph, elapsed)
    return graph
