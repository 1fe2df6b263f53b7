from __future__ import annotations

import numpy as np

from ..structures import Corpus, Document

__all__ = [
    "generateSyntheticCorpus",
    "zipfProbabilities",
    "NUM_DISCIPLINES",
    "NUM_CATEGORIES",
]

# Label counts of the scientific literature metadata the experiments were modeled on
NUM_DISCIPLINES = 67
NUM_CATEGORIES = 13


def zipfProbabilities(vocabSize: int, exponent=1.0) -> np.ndarray:
    ranks = np.arange(1, vocabSize + 1, dtype=float)
    weights = ranks**-exponent
    return weights / weights.sum()


def generateSyntheticCorpus(
    nDocs: int, vocabSize: int, meanLen: float, rngSeed: int
) -> Corpus:
    """
    Random corpus with Poisson(``meanLen``) document lengths and terms drawn from a
    Zipf-like (exponent 1) rank distribution over ``vocabSize`` terms.

    Parameters
    ----------
    nDocs
        Number of documents. Ids are ``S0`` .. ``S{nDocs-1}``
    vocabSize
        Number of distinct terms available. Terms are named ``w<rank>`` with the rank
        zero-padded, rank 0 being the most frequent one
    meanLen
        Mean token count per document
    rngSeed
        Seed for ``numpy.random.default_rng``. Equal arguments give identical corpora
    """
    if nDocs < 0:
        raise ValueError(f"nDocs must be >= 0, was {nDocs}")
    if vocabSize < 1:
        raise ValueError(f"vocabSize must be >= 1, was {vocabSize}")
    if meanLen <= 0:
        raise ValueError(f"meanLen must be > 0, was {meanLen}")
    if nDocs == 0:
        return []
    rng = np.random.default_rng(rngSeed)
    width = len(str(vocabSize - 1))
    vocab = np.array([f"w{rank:0{width}d}" for rank in range(vocabSize)], dtype=object)

    lengths = rng.poisson(meanLen, size=nDocs)
    probabilities = zipfProbabilities(vocabSize)
    drawn = rng.choice(vocabSize, size=int(lengths.sum()), p=probabilities)
    # Labels come after the tokens so token streams only depend on the token knobs
    disciplines = rng.integers(0, NUM_DISCIPLINES, size=nDocs)
    categories = rng.integers(0, NUM_CATEGORIES, size=nDocs)

    corpus = []
    offsets = np.concatenate([[0], np.cumsum(lengths)])
    for ii in range(nDocs):
        words = vocab[drawn[offsets[ii] : offsets[ii + 1]]]
        corpus.append(
            Document(
                docId=f"S{ii}",
                abstractText=" ".join(words),
                discipline=f"discipline-{disciplines[ii]:02d}",
                category=f"category-{categories[ii]:02d}",
            )
        )
    return corpus
