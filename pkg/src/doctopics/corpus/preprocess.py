"""Token normalization: tokenize, drop stopwords, stem.

The stemmer is the classic rule-based suffix stripper (Porter 1980). An
optional token->lemma table takes precedence over the stemmer, so callers
with curated lemma lists can pin surface forms exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .stopwords import ENGLISH_STOPWORDS

_TOKEN_RE = re.compile(r"[^\W\d_]+", re.UNICODE)

_VOWELS = "aeiou"


def _cons(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _cons(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of vowel-to-consonant transitions ([C](VC)^m[V])."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        cons = _cons(stem, i)
        if prev_vowel and cons:
            m += 1
        prev_vowel = not cons
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _cons(stem, i) for i in range(len(stem)))


def _double_cons(word: str) -> bool:
    return len(word) >= 2 and word[-1] == word[-2] and _cons(word, len(word) - 1)


def _cvc(word: str) -> bool:
    n = len(word)
    if n < 3:
        return False
    if not (_cons(word, n - 3) and not _cons(word, n - 2) and _cons(word, n - 1)):
        return False
    return word[-1] not in "wxy"


_STEP2 = [
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
]

_STEP3 = [
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
]

_STEP4 = [
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
]


def stem(word: str) -> str:
    """Porter-stem a lowercase word."""
    w = word
    if len(w) <= 2:
        return w

    # step 1a
    if w.endswith("sses"):
        w = w[:-2]
    elif w.endswith("ies"):
        w = w[:-2]
    elif not w.endswith("ss") and w.endswith("s"):
        w = w[:-1]

    # step 1b
    if w.endswith("eed"):
        if _measure(w[:-3]) > 0:
            w = w[:-1]
    else:
        flag = False
        if w.endswith("ed") and _has_vowel(w[:-2]):
            w, flag = w[:-2], True
        elif w.endswith("ing") and _has_vowel(w[:-3]):
            w, flag = w[:-3], True
        if flag:
            if w.endswith(("at", "bl", "iz")):
                w += "e"
            elif _double_cons(w) and w[-1] not in "lsz":
                w = w[:-1]
            elif _measure(w) == 1 and _cvc(w):
                w += "e"

    # step 1c
    if w.endswith("y") and _has_vowel(w[:-1]):
        w = w[:-1] + "i"

    # step 2
    for suffix, repl in _STEP2:
        if w.endswith(suffix):
            base = w[: -len(suffix)]
            if _measure(base) > 0:
                w = base + repl
            break

    # step 3
    for suffix, repl in _STEP3:
        if w.endswith(suffix):
            base = w[: -len(suffix)]
            if _measure(base) > 0:
                w = base + repl
            break

    # step 4
    for suffix in _STEP4:
        if w.endswith(suffix):
            base = w[: -len(suffix)]
            if _measure(base) > 1:
                if suffix == "ion" and not base.endswith(("s", "t")):
                    break
                w = base
            break

    # step 5a
    if w.endswith("e"):
        base = w[:-1]
        m = _measure(base)
        if m > 1 or (m == 1 and not _cvc(base)):
            w = base

    # step 5b
    if _measure(w) > 1 and _double_cons(w) and w.endswith("l"):
        w = w[:-1]

    return w


@dataclass(frozen=True)
class PreprocessOptions:
    stopwords: frozenset[str] = ENGLISH_STOPWORDS
    min_token_len: int = 3
    stemming: bool = True
    lemma_table: dict[str, str] | None = None

    def with_extra_stopwords(self, extra) -> "PreprocessOptions":
        return PreprocessOptions(
            stopwords=self.stopwords | frozenset(s.lower() for s in extra),
            min_token_len=self.min_token_len,
            stemming=self.stemming,
            lemma_table=self.lemma_table,
        )


def preprocess(raw_text: str, options: PreprocessOptions | None = None) -> list[str]:
    """Normalize raw text into a token list.

    Tokens are lowercased letter runs (digits and punctuation act as
    separators), filtered by stopword list and minimum surface length,
    then stemmed (or mapped through the lemma table) when enabled.
    """
    opts = options or PreprocessOptions()
    out: list[str] = []
    for match in _TOKEN_RE.finditer(raw_text.lower()):
        token = match.group(0)
        if len(token) < opts.min_token_len or token in opts.stopwords:
            continue
        if opts.lemma_table is not None and token in opts.lemma_table:
            out.append(opts.lemma_table[token])
        elif opts.stemming:
            out.append(stem(token))
        else:
            out.append(token)
    return out
