"""Letter inventory primitives and contextual positional-form resolution.

Jawi is cursive: most letters connect to the following (leftward) letter,
but a handful only ever connect to the preceding one.  Whether a letter
appears isolated, initial, medial or final therefore depends purely on the
joining class of itself and its right-hand neighbour in logical order.

Everything here works on logical (reading) order.  Visual right-to-left
layout and glyph selection are a renderer's job; this module never emits
presentation forms or joiner control characters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import UnknownLetter


class JoiningClass(enum.Enum):
    DUAL = "dual"
    RIGHT_ONLY = "right-only"


class Category(enum.Enum):
    VOWEL_CARRIER = "vowel"
    CONSONANT = "consonant"
    EXTENDED = "extended"


class PositionalForm(enum.IntEnum):
    """The four contextual shapes, ordered for stable serialization."""

    ISOLATED = 0
    INITIAL = 1
    MEDIAL = 2
    FINAL = 3

    @property
    def label(self):
        return self.name.lower()

    @classmethod
    def from_label(cls, label: str) -> "PositionalForm":
        try:
            return cls[label.upper()]
        except KeyError:
            raise ValueError(f"unknown positional form {label!r}") from None


@dataclass(frozen=True)
class Letter:
    """One letter of the inventory, identified by a short ASCII id."""

    id: str
    codepoint: int
    display_name: str
    joining: JoiningClass
    category: Category
    readings: tuple[str, ...]
    note: str | None = None

    @property
    def char(self) -> str:
        return chr(self.codepoint)

    def joins_left(self) -> bool:
        """Whether this letter can connect to the letter after it."""
        return self.joining is JoiningClass.DUAL

    def available_forms(self) -> tuple[PositionalForm, ...]:
        if self.joining is JoiningClass.DUAL:
            return tuple(PositionalForm)
        return (PositionalForm.ISOLATED, PositionalForm.FINAL)


@dataclass(frozen=True)
class ShapedText:
    """A logical-order letter sequence with its resolved positional forms.

    ``forms`` is always re-derivable from ``letters``; it is carried along
    so consumers (CLI, API, composer feedback) need not redo the walk.
    """

    letters: tuple[str, ...]
    forms: tuple[PositionalForm, ...] = field(default=())

    def __post_init__(self):
        if len(self.letters) != len(self.forms):
            raise ValueError("letters and forms must have equal length")

    def __len__(self):
        return len(self.letters)


def resolve_positions(letter_ids, table) -> list[PositionalForm]:
    """Resolve the contextual form of each letter in a logical-order word.

    A letter joins leftward when its class allows it and it is not last;
    it joins rightward when the previous letter joins leftward.  The four
    combinations give the four forms.
    """
    letters = [table.require(letter_id) for letter_id in letter_ids]
    forms = []
    last = len(letters) - 1
    for i, letter in enumerate(letters):
        joins_left = letter.joins_left() and i != last
        joins_right = i != 0 and letters[i - 1].joins_left()
        if joins_left and joins_right:
            forms.append(PositionalForm.MEDIAL)
        elif joins_left:
            forms.append(PositionalForm.INITIAL)
        elif joins_right:
            forms.append(PositionalForm.FINAL)
        else:
            forms.append(PositionalForm.ISOLATED)
    return forms


def shape(letter_ids, table) -> ShapedText:
    """Build a :class:`ShapedText` for a logical-order letter-id sequence."""
    ids = tuple(letter_ids)
    return ShapedText(ids, tuple(resolve_positions(ids, table)))


def render_logical(shaped: ShapedText, table) -> str:
    """Emit the word as logical-order Unicode, one code point per letter.

    No presentation-form code points (U+FB50..U+FEFF) and no joiner
    controls are ever produced; shaping is left to the display layer.
    """
    return "".join(table.require(letter_id).char for letter_id in shaped.letters)


def letters_from_text(text: str, table) -> list[str]:
    """Map a logical-order Jawi string to letter ids via the table.

    Raises :class:`UnknownCodepoint` (via the table) for any character
    outside the inventory.
    """
    return [table.require_codepoint(ch, i).id for i, ch in enumerate(text)]


__all__ = [
    "JoiningClass",
    "Category",
    "PositionalForm",
    "Letter",
    "ShapedText",
    "resolve_positions",
    "shape",
    "render_logical",
    "letters_from_text",
    "UnknownLetter",
]
