"""Versioned transliteration rule data: letters, digraphs, vowel maps.

The rule set lives in a JSON file rather than code so curated corrections
to the source material stay reviewable data changes; every deviation
carries a note on the letter it concerns.  After loading, a
:class:`RuleTable` is immutable and safe to share across threads.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from importlib import resources

from .errors import ParseError, UnknownCodepoint, UnknownLetter, ValidationError
from .letters import Category, JoiningClass, Letter

LATIN_VOWELS = "aeiou"

_JOINING = {cls.value: cls for cls in JoiningClass}
_CATEGORY = {cat.value: cat for cat in Category}
_VOWEL_CARRIER_IDS = {"alif", "waw", "ya"}

_TABLE_KEYS = {"version", "letters", "digraphs", "medial_vowels", "epenthesis", "mode"}
_LETTER_KEYS = {"id", "codepoint", "joining", "category", "readings", "note"}
_DIGRAPH_KEYS = {"pair", "position", "values"}


class SpellingMode(enum.Enum):
    """Plene writes every medial vowel letter; traditional omits medial a."""

    PLENE = "plene"
    TRADITIONAL = "traditional"

    @classmethod
    def parse(cls, value: str) -> "SpellingMode":
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"unknown spelling mode {value!r}") from None


class DigraphPosition(enum.Enum):
    WORD_INITIAL = "word-initial"
    ANYWHERE = "anywhere"


@dataclass(frozen=True)
class DigraphRule:
    """A two-letter combination read as a single vowel sound."""

    pair: tuple[str, str]
    position: DigraphPosition
    values: tuple[str, ...]

    @property
    def id(self) -> str:
        return "+".join(self.pair)


@dataclass(frozen=True)
class RuleTable:
    version: str
    letters: tuple[Letter, ...]
    digraphs: tuple[DigraphRule, ...]
    medial_vowel_map: dict[str, str]
    epenthesis_vowels: tuple[str, ...]
    spelling_mode: SpellingMode

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {lt.id: lt for lt in self.letters})
        object.__setattr__(self, "_by_codepoint", {lt.codepoint: lt for lt in self.letters})

    # -- lookups ---------------------------------------------------------

    def get(self, letter_id: str) -> Letter | None:
        return self._by_id.get(letter_id)

    def require(self, letter_id: str) -> Letter:
        letter = self._by_id.get(letter_id)
        if letter is None:
            raise UnknownLetter(letter_id)
        return letter

    def by_codepoint(self, codepoint: int) -> Letter | None:
        return self._by_codepoint.get(codepoint)

    def require_codepoint(self, char: str, position: int = 0) -> Letter:
        letter = self._by_codepoint.get(ord(char))
        if letter is None:
            raise UnknownCodepoint(char, position)
        return letter

    def lookup_letter(self, key) -> Letter:
        """Find a letter by id string or by integer code point."""
        if isinstance(key, int):
            letter = self._by_codepoint.get(key)
            if letter is None:
                raise UnknownLetter(f"U+{key:04X}")
            return letter
        return self.require(key)

    def word_initial_digraphs(self) -> tuple[DigraphRule, ...]:
        return tuple(d for d in self.digraphs if d.position is DigraphPosition.WORD_INITIAL)

    def digraphs_with(self, letter_id: str) -> tuple[DigraphRule, ...]:
        return tuple(d for d in self.digraphs if letter_id in d.pair)

    def provenance_notes(self) -> dict[str, str]:
        return {lt.id: lt.note for lt in self.letters if lt.note}


def _parse_codepoint(raw, letter_id):
    if not isinstance(raw, str) or not raw.startswith("U+"):
        raise ValidationError(letter_id, f"codepoint must be a U+XXXX string, got {raw!r}")
    try:
        return int(raw[2:], 16)
    except ValueError:
        raise ValidationError(letter_id, f"bad codepoint {raw!r}") from None


def _display_name(letter_id: str) -> str:
    return letter_id.replace("_", " ").title()


def _check_reading(reading, letter_id):
    if not isinstance(reading, str) or not (1 <= len(reading) <= 4) or not reading.isascii() \
            or not reading.islower() or not reading.isalpha():
        raise ValidationError(letter_id, f"reading {reading!r} must match [a-z]{{1,4}}")


def _parse_letter(obj, index):
    if not isinstance(obj, dict):
        raise ParseError("letter entry must be an object", f"letters[{index}]")
    unknown = set(obj) - _LETTER_KEYS
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", f"letters[{index}]")
    letter_id = obj.get("id")
    if not isinstance(letter_id, str) or not letter_id:
        raise ParseError("missing letter id", f"letters[{index}]")
    readings = obj.get("readings")
    if not isinstance(readings, list) or not readings:
        raise ValidationError(letter_id, "readings must be a nonempty list")
    for reading in readings:
        _check_reading(reading, letter_id)
    joining = obj.get("joining")
    if joining not in _JOINING:
        raise ValidationError(letter_id, f"joining must be one of {sorted(_JOINING)}")
    category = obj.get("category")
    if category not in _CATEGORY:
        raise ValidationError(letter_id, f"category must be one of {sorted(_CATEGORY)}")
    note = obj.get("note")
    if note is not None and not isinstance(note, str):
        raise ValidationError(letter_id, "note must be a string")
    return Letter(
        id=letter_id,
        codepoint=_parse_codepoint(obj.get("codepoint"), letter_id),
        display_name=_display_name(letter_id),
        joining=_JOINING[joining],
        category=_CATEGORY[category],
        readings=tuple(readings),
        note=note,
    )


def _parse_digraph(obj, index, by_id):
    if not isinstance(obj, dict):
        raise ParseError("digraph entry must be an object", f"digraphs[{index}]")
    unknown = set(obj) - _DIGRAPH_KEYS
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", f"digraphs[{index}]")
    pair = obj.get("pair")
    if not isinstance(pair, list) or len(pair) != 2:
        raise ParseError("pair must list exactly two letter ids", f"digraphs[{index}]")
    for letter_id in pair:
        if letter_id not in by_id:
            raise ValidationError(f"digraph {pair}", f"unknown letter {letter_id!r}")
    try:
        position = DigraphPosition(obj.get("position"))
    except ValueError:
        raise ValidationError(f"digraph {pair}", f"bad position {obj.get('position')!r}") from None
    values = obj.get("values")
    if not isinstance(values, list) or not values:
        raise ValidationError(f"digraph {pair}", "values must be a nonempty list")
    for value in values:
        _check_reading(value, f"digraph {pair}")
    return DigraphRule(pair=(pair[0], pair[1]), position=position, values=tuple(values))


def parse_rule_table(doc) -> RuleTable:
    """Validate a decoded JSON document into a :class:`RuleTable`."""
    if not isinstance(doc, dict):
        raise ParseError("rule table must be a JSON object")
    unknown = set(doc) - _TABLE_KEYS
    if unknown:
        raise ParseError(f"unknown top-level keys {sorted(unknown)}")
    version = doc.get("version")
    if not isinstance(version, str) or not version:
        raise ParseError("missing version string")

    raw_letters = doc.get("letters")
    if not isinstance(raw_letters, list) or not raw_letters:
        raise ParseError("letters must be a nonempty list")
    letters = []
    seen_ids: set[str] = set()
    seen_codepoints: set[int] = set()
    for i, raw in enumerate(raw_letters):
        letter = _parse_letter(raw, i)
        if letter.id in seen_ids:
            raise ValidationError(letter.id, "duplicate letter id")
        if letter.codepoint in seen_codepoints:
            raise ValidationError(letter.id, f"duplicate code point U+{letter.codepoint:04X}")
        seen_ids.add(letter.id)
        seen_codepoints.add(letter.codepoint)
        letters.append(letter)

    carriers = {lt.id for lt in letters if lt.category is Category.VOWEL_CARRIER}
    if carriers != _VOWEL_CARRIER_IDS:
        raise ValidationError(
            "letters", f"vowel carriers must be exactly {sorted(_VOWEL_CARRIER_IDS)}, got {sorted(carriers)}"
        )

    by_id = {lt.id: lt for lt in letters}
    raw_digraphs = doc.get("digraphs")
    if not isinstance(raw_digraphs, list):
        raise ParseError("digraphs must be a list")
    digraphs = [_parse_digraph(raw, i, by_id) for i, raw in enumerate(raw_digraphs)]

    raw_medial = doc.get("medial_vowels")
    if not isinstance(raw_medial, dict):
        raise ParseError("medial_vowels must be an object")
    for vowel, letter_id in raw_medial.items():
        if vowel not in LATIN_VOWELS:
            raise ValidationError("medial_vowels", f"{vowel!r} is not a Latin vowel")
        if letter_id not in by_id:
            raise ValidationError("medial_vowels", f"unknown letter {letter_id!r}")

    raw_epenthesis = doc.get("epenthesis")
    if not isinstance(raw_epenthesis, list):
        raise ParseError("epenthesis must be a list")
    for vowel in raw_epenthesis:
        if vowel not in LATIN_VOWELS:
            raise ValidationError("epenthesis", f"{vowel!r} is not a Latin vowel")

    mode = doc.get("mode")
    try:
        spelling_mode = SpellingMode.parse(mode)
    except ValueError as exc:
        raise ValidationError("mode", str(exc)) from None

    return RuleTable(
        version=version,
        letters=tuple(letters),
        digraphs=tuple(digraphs),
        medial_vowel_map=dict(raw_medial),
        epenthesis_vowels=tuple(raw_epenthesis),
        spelling_mode=spelling_mode,
    )


def load_rule_table(source) -> RuleTable:
    """Load and validate a rule table from bytes, text, or a file object."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"rule table is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return parse_rule_table(doc)


def dump_rule_table(table: RuleTable) -> dict:
    """Serialize a table back to the schema accepted by ``load_rule_table``."""
    letters = []
    for lt in table.letters:
        entry = {
            "id": lt.id,
            "codepoint": f"U+{lt.codepoint:04X}",
            "joining": lt.joining.value,
            "category": lt.category.value,
            "readings": list(lt.readings),
        }
        if lt.note:
            entry["note"] = lt.note
        letters.append(entry)
    return {
        "version": table.version,
        "mode": table.spelling_mode.value,
        "letters": letters,
        "digraphs": [
            {"pair": list(d.pair), "position": d.position.value, "values": list(d.values)}
            for d in table.digraphs
        ],
        "medial_vowels": dict(table.medial_vowel_map),
        "epenthesis": list(table.epenthesis_vowels),
    }


def default_table_path():
    return resources.files("jawi").joinpath("data/rules.json")


def default_table() -> RuleTable:
    """The shipped rule table (33 letters: the reference inventory plus hamzah)."""
    return load_rule_table(default_table_path().read_bytes())


__all__ = [
    "SpellingMode",
    "DigraphPosition",
    "DigraphRule",
    "RuleTable",
    "parse_rule_table",
    "load_rule_table",
    "dump_rule_table",
    "default_table",
    "default_table_path",
    "LATIN_VOWELS",
]
