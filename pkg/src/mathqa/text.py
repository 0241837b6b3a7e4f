"""Plain-text utilities: the frozen stopword list, window tokenization,
markup stripping, and formula string normalization."""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)
# A math region inside a window, possibly clipped at the right edge.
_MATH_REGION_RE = re.compile(r"<math\b.*?(?:</math>|$)", re.DOTALL)
_MATH_CLOSE = "</math>"
_TAG_RE = re.compile(r"<[^<>]*>")
_CLIPPED_TAG_EDGES_RE = re.compile(r"^[^<>]*>|<[^<>]*$")


@lru_cache(maxsize=1)
def stopwords():
    """The fixed 179-word English stopword list, frozen as package data."""
    data = resources.files("mathqa.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(data.split())


@lru_cache(maxsize=1)
def geometry_properties():
    """Lowercase geometry property names, one per line in package data."""
    data = resources.files("mathqa.data").joinpath("geometry_properties.txt")
    return tuple(
        line.strip() for line in data.read_text("utf-8").splitlines() if line.strip()
    )


def strip_markup(fragment):
    """Remove math regions and markup tags from a window fragment.

    The fragment is a raw character slice, so a math region or tag may be
    clipped at either end; clipped remnants are removed too.
    """
    s = fragment
    close = s.find(_MATH_CLOSE)
    if close != -1:
        opening = s.find("<math")
        if opening == -1 or close < opening:
            # the window starts inside a math region
            s = " " + s[close + len(_MATH_CLOSE):]
    s = _MATH_REGION_RE.sub(" ", s)
    s = _TAG_RE.sub(" ", s)
    s = _CLIPPED_TAG_EDGES_RE.sub(" ", s)
    return s


def word_tokens(text):
    """Lowercased letter-run tokens, stopwords removed, order kept."""
    stops = stopwords()
    return [t for t in (m.group(0).lower() for m in _WORD_RE.finditer(text))
            if t not in stops]


def normalize_formula(formula):
    """Equality key for formula strings: all whitespace removed."""
    return "".join(formula.split())


def is_stopword(word):
    return word.lower() in stopwords()
