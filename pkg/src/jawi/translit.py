"""Latin-to-Jawi encoding and Jawi-to-Latin candidate decoding.

Encoding is deterministic: one Latin word maps to exactly one spelling per
spelling mode.  Decoding is inherently ambiguous because the script leaves
most vowels unwritten, so it enumerates every reading the rules allow,
scores them structurally (primary readings and zero insertions rank
first), and returns an ordered candidate list.

``enumerate_all_readings`` is a deliberately separate, brute-force
recursion over the same rules; tests hold the ranked decoder to set
equality with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyInput, InputTooLong, UnencodableInput
from .letters import Category, ShapedText, shape
from .rules import LATIN_VOWELS, RuleTable, SpellingMode

ENUMERATION_MAX_LETTERS = 8


@dataclass(frozen=True)
class ReadingCandidate:
    """One decoding hypothesis: the Latin string, its score, and how it arose."""

    latin: str
    score: float
    trace: tuple[str, ...]


def _is_consonantal(value: str) -> bool:
    """A reading that contains no vowel; epenthesis may touch only these."""
    return not any(ch in LATIN_VOWELS for ch in value)


def _coerce_mode(mode, table: RuleTable) -> SpellingMode:
    if mode is None:
        return table.spelling_mode
    if isinstance(mode, SpellingMode):
        return mode
    return SpellingMode.parse(mode)


# ---------------------------------------------------------------------------
# Latin -> Jawi
# ---------------------------------------------------------------------------

def _initial_vowel_letters(vowel: str, table: RuleTable) -> list[str]:
    for rule in table.word_initial_digraphs():
        if vowel in rule.values:
            return list(rule.pair)
    return ["alif"]


def _consonant_index(table: RuleTable) -> dict[str, str]:
    """reading -> letter id, ties broken by reading rank then table order."""
    best: dict[str, tuple[int, int, str]] = {}
    for order, letter in enumerate(table.letters):
        for rank, reading in enumerate(letter.readings):
            key = (rank, order, letter.id)
            if reading not in best or key < best[reading]:
                best[reading] = key
    return {reading: entry[2] for reading, entry in best.items()}


def encode_segments(word: str, table: RuleTable, mode=None) -> list[tuple[str, tuple[str, ...]]]:
    """Split a Latin word into (grapheme, letters) pairs the encoder uses.

    A medial ``a`` dropped by traditional mode yields an empty letter
    tuple, so the segmentation always covers the whole word.
    """
    if not word:
        raise EmptyInput("word")
    mode = _coerce_mode(mode, table)
    for i, ch in enumerate(word):
        if not ("a" <= ch <= "z"):
            raise UnencodableInput(word, i)

    index = _consonant_index(table)
    max_len = max(len(r) for r in index)
    segments: list[tuple[str, tuple[str, ...]]] = []

    pos = 0
    if word[0] in LATIN_VOWELS:
        segments.append((word[0], tuple(_initial_vowel_letters(word[0], table))))
        pos = 1
    while pos < len(word):
        ch = word[pos]
        if ch in LATIN_VOWELS:
            if ch == "a" and mode is SpellingMode.TRADITIONAL:
                segments.append((ch, ()))
            else:
                target = table.medial_vowel_map.get(ch)
                if target is None:
                    raise UnencodableInput(word, pos)
                segments.append((ch, (target,)))
            pos += 1
            continue
        for take in range(min(max_len, len(word) - pos), 0, -1):
            piece = word[pos:pos + take]
            if piece in index:
                segments.append((piece, (index[piece],)))
                pos += take
                break
        else:
            raise UnencodableInput(word, pos)
    return segments


def latin_to_jawi(word: str, table: RuleTable, mode=None) -> ShapedText:
    """Encode one lowercase Latin word as a shaped Jawi letter sequence.

    Word-initial vowels go through the word-initial digraph rules, medial
    vowels through the medial vowel map (traditional mode drops medial a),
    and consonants through a greedy longest-match over every letter's
    readings.
    """
    letter_ids = [
        letter_id
        for _grapheme, letter_ids in encode_segments(word, table, mode)
        for letter_id in letter_ids
    ]
    return shape(letter_ids, table)


# ---------------------------------------------------------------------------
# Jawi -> Latin
# ---------------------------------------------------------------------------

def _medial_values(letter, table: RuleTable) -> list[str]:
    """Values a vowel carrier can take when it is not word-initial.

    The vowels that the medial map writes with this letter come first (in
    map order), then the carrier's consonantal readings as fallbacks.
    """
    values = [v for v, lid in table.medial_vowel_map.items() if lid == letter.id]
    values.extend(r for r in letter.readings if _is_consonantal(r) and r not in values)
    return values


def _segment_options(letters, i, table: RuleTable):
    """All (consumed, value, rank, trace_item) choices at letter index i."""
    letter = letters[i]
    options = []
    if i == 0 and letter.id == "alif":
        if len(letters) > 1:
            for rule in table.word_initial_digraphs():
                if rule.pair[0] == letter.id and letters[1].id == rule.pair[1]:
                    for rank, value in enumerate(rule.values):
                        options.append((2, value, rank, f"digraph:{rule.id}:{rank}"))
        for rank, value in enumerate(letter.readings):
            options.append((1, value, rank, f"initial:{letter.id}:{rank}"))
    elif i > 0 and letter.category is Category.VOWEL_CARRIER:
        for rank, value in enumerate(_medial_values(letter, table)):
            options.append((1, value, rank, f"medial:{letter.id}:{rank}"))
    else:
        for rank, value in enumerate(letter.readings):
            options.append((1, value, rank, f"letter:{letter.id}:{rank}"))
    return options


def _text_to_letters(jawi: str, table: RuleTable):
    if not jawi:
        raise EmptyInput("jawi text")
    return [table.require_codepoint(ch, i) for i, ch in enumerate(jawi)]


def _enumerate_scored(jawi: str, table: RuleTable):
    """Depth-first enumeration carrying score components and the trace."""
    letters = _text_to_letters(jawi, table)
    epenthesis = table.epenthesis_vowels
    found = []

    def walk(i, acc, prev_consonantal, fallbacks, rank_sum, insertions, trace):
        if i == len(letters):
            found.append((acc, fallbacks, rank_sum, insertions, trace))
            if prev_consonantal:
                for vowel in epenthesis:
                    found.append(
                        (acc + vowel, fallbacks, rank_sum, insertions + 1,
                         trace + (f"epenthesis:{vowel}",))
                    )
            return
        for consumed, value, rank, item in _segment_options(letters, i, table):
            consonantal = _is_consonantal(value)
            walk(i + consumed, acc + value, consonantal,
                 fallbacks + (1 if rank else 0), rank_sum + rank, insertions,
                 trace + (item,))
            if prev_consonantal and consonantal:
                for vowel in epenthesis:
                    walk(i + consumed, acc + vowel + value, consonantal,
                         fallbacks + (1 if rank else 0), rank_sum + rank, insertions + 1,
                         trace + (f"epenthesis:{vowel}", item))

    walk(0, "", False, 0, 0, 0, ())
    return found


def jawi_to_latin(jawi: str, table: RuleTable, limit: int | None = None) -> list[ReadingCandidate]:
    """Decode a logical-order Jawi string into ranked Latin candidates.

    Candidates are deduplicated and sorted: fewest fallback readings plus
    insertions first, then lower reading ranks, then alphabetically.  The
    result is never empty for valid input.  ``limit=None`` returns the
    full list.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    best: dict[str, tuple] = {}
    for latin, fallbacks, rank_sum, insertions, trace in _enumerate_scored(jawi, table):
        key = (fallbacks + insertions, rank_sum, insertions, latin)
        if latin not in best or key < best[latin][0]:
            best[latin] = (key, trace)
    ordered = sorted(best.items(), key=lambda kv: kv[1][0])
    candidates = [
        ReadingCandidate(
            latin=latin,
            score=float(Fraction(1, 1 + key[0])),
            trace=trace,
        )
        for latin, (key, trace) in ordered
    ]
    if limit is not None:
        candidates = candidates[:limit]
    return candidates


def enumerate_all_readings(jawi: str, table: RuleTable) -> set[str]:
    """Brute-force oracle: the complete unranked reading set.

    Independent recursion over the same rule set, guarded to short inputs
    because the candidate space grows exponentially.  The ranked decoder's
    untruncated output must equal this set exactly.
    """
    letters = _text_to_letters(jawi, table)
    if len(letters) > ENUMERATION_MAX_LETTERS:
        raise InputTooLong(len(letters), ENUMERATION_MAX_LETTERS)
    epenthesis = table.epenthesis_vowels
    out: set[str] = set()

    def expand(i, prefix, prev_consonantal):
        if i == len(letters):
            out.add(prefix)
            if prev_consonantal:
                out.update(prefix + vowel for vowel in epenthesis)
            return
        for consumed, value, _rank, _item in _segment_options(letters, i, table):
            heads = [value]
            if prev_consonantal and _is_consonantal(value):
                heads.extend(vowel + value for vowel in epenthesis)
            for head in heads:
                expand(i + consumed, prefix + head, _is_consonantal(value))

    expand(0, "", False)
    return out


def replay_trace(jawi: str, trace, table: RuleTable) -> str:
    """Re-apply a candidate's trace to its source string; returns the Latin.

    Raises ``ValueError`` when the trace does not cover the input exactly,
    so tests can assert that every emitted trace is faithful.
    """
    letters = _text_to_letters(jawi, table)
    digraphs = {rule.id: rule for rule in table.digraphs}
    i = 0
    parts = []
    for item in trace:
        kind, _, rest = item.partition(":")
        if kind == "epenthesis":
            parts.append(rest)
            continue
        name, _, rank_text = rest.partition(":")
        rank = int(rank_text)
        if kind == "digraph":
            rule = digraphs[name]
            if i != 0 or [lt.id for lt in letters[:2]] != list(rule.pair):
                raise ValueError(f"trace item {item!r} does not match input at {i}")
            parts.append(rule.values[rank])
            i += 2
        elif kind in ("initial", "letter", "medial"):
            if i >= len(letters) or letters[i].id != name:
                raise ValueError(f"trace item {item!r} does not match input at {i}")
            values = (
                _medial_values(letters[i], table) if kind == "medial" else letters[i].readings
            )
            parts.append(values[rank])
            i += 1
        else:
            raise ValueError(f"unknown trace item {item!r}")
    if i != len(letters):
        raise ValueError("trace does not consume the whole input")
    return "".join(parts)


__all__ = [
    "ReadingCandidate",
    "encode_segments",
    "latin_to_jawi",
    "jawi_to_latin",
    "enumerate_all_readings",
    "replay_trace",
    "ENUMERATION_MAX_LETTERS",
]
