from __future__ import annotations

import typing as t

from ..constants import COOC_ENUMS
from ..structures import Corpus, Document, TokenizerConfig, TokenStream

__all__ = ["tokenize", "joinPhrases", "dictionaryFromKeywords"]


def joinPhrases(
    words: t.Sequence[str], phraseTable: t.Dict[str, t.List[t.Tuple[str, ...]]]
) -> t.List[str]:
    """
    Greedy left-to-right longest match of dictionary phrases over ``words``. A matched
    phrase becomes one token whose text is the phrase joined by single spaces.
    """
    if not phraseTable:
        return list(words)
    out = []
    ii = 0
    numWords = len(words)
    while ii < numWords:
        for parts in phraseTable.get(words[ii], ()):
            end = ii + len(parts)
            if end <= numWords and tuple(words[ii:end]) == parts:
                out.append(" ".join(parts))
                ii = end
                break
        else:
            out.append(words[ii])
            ii += 1
    return out


def _fieldTokens(doc: Document, fieldName: str, cfg: TokenizerConfig):
    if fieldName == COOC_ENUMS.FIELD_KEYWORDS:
        # Keyword entries are whole terms already, so they skip splitting
        for keyword in doc.keywords:
            keyword = cfg.normalize(keyword.strip())
            if keyword:
                yield keyword
        return
    text = doc.title if fieldName == COOC_ENUMS.FIELD_TITLE else doc.abstractText
    yield from joinPhrases(cfg.normalize(text).split(), cfg.phraseTable)


def tokenize(doc: Document, cfg: TokenizerConfig) -> TokenStream:
    """
    Turns the configured fields of ``doc`` into a position-annotated term stream.

    Fields are read in ``cfg.fieldsUsed`` order. Title and abstract text is split on
    whitespace and dictionary phrases are joined (longest match first), keyword entries
    are kept whole. Stopwords are dropped last, and positions number the surviving
    tokens from 0.
    """
    stopwords = cfg.activeStopwords
    tokens = []
    for fieldName in cfg.fieldsUsed:
        for term in _fieldTokens(doc, fieldName, cfg):
            if term not in stopwords:
                tokens.append((term, len(tokens)))
    return TokenStream(tuple(tokens))


def dictionaryFromKeywords(corpus: Corpus) -> t.Set[str]:
    """
    Multi-token keywords of every document. Feeding these back as the user dictionary
    keeps keyword phrases intact when they appear in titles and abstracts.
    """
    phrases = set()
    for doc in corpus:
        for keyword in doc.keywords:
            parts = keyword.split()
            if len(parts) > 1:
                phrases.add(" ".join(parts))
    return phrases
