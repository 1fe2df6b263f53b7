from __future__ import annotations

import typing as t


def augmentException(ex: Exception, message: str, stringifyException=True):
    if stringifyException:
        message += str(ex)
        ex.args = (message,)
        return ex
    args = ex.args or ()
    ex.args = (message,) + args
    return ex


def canonicalPair(u: str, v: str) -> t.Tuple[str, str]:
    """Unordered term pair as (smaller, larger)"""
    return (u, v) if u < v else (v, u)


def splitKeywords(value: str, separator="_") -> t.List[str]:
    """Keyword columns in delimited files pack every entry into one cell"""
    return [kw.strip() for kw in value.split(separator) if kw.strip()]


def collapseWhitespace(phrase: str) -> str:
    return " ".join(phrase.split())
