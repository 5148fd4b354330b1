"""The interactive lesson: pick a position, a letter, a reading, process.

State transitions are pure functions, so a session can live entirely on
the client side: the HTTP service echoes state back and forth as JSON and
stores nothing.  Undo works because history is implicit: every committed
entry corresponds to exactly one process step, so the undo stack is the
chain of prefixes of ``committed``.

Word-initial vowel pairs get special treatment: when the last committed
letter is a lone word-initial alif and the learner picks waw or ya, the
offered readings additionally include the pair's digraph values (o/u or
e/i).  Committing such a value merges the alif and the new letter into a
single committed unit read as one vowel, which is what lets words like
orang render a Latin buffer equal to the word.  Undoing a merged unit
restores the lone alif with its primary reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import (
    NoPendingSelection,
    NoReadingChosen,
    ReadingIndexOutOfRange,
    UnknownLetter,
    ValidationError,
)
from .letters import PositionalForm, ShapedText, render_logical, resolve_positions
from .rules import DigraphPosition, RuleTable


@dataclass(frozen=True)
class ReadingOption:
    value: str
    digraph: bool = False


@dataclass(frozen=True)
class CommittedUnit:
    """One processed selection: usually one letter, two for a vowel pair."""

    letters: tuple[str, ...]
    reading: str
    form: PositionalForm


@dataclass(frozen=True)
class Pending:
    letter: str
    form: PositionalForm
    offered: tuple[ReadingOption, ...]
    chosen: int | None = None


@dataclass(frozen=True)
class ComposerState:
    committed: tuple[CommittedUnit, ...] = ()
    pending: Pending | None = None
    active_filter: PositionalForm = PositionalForm.ISOLATED

    @property
    def history_depth(self) -> int:
        return len(self.committed)

    def letter_ids(self) -> list[str]:
        return [letter for unit in self.committed for letter in unit.letters]


EMPTY_STATE = ComposerState()


# -- events ------------------------------------------------------------------


@dataclass(frozen=True)
class SetFilter:
    form: PositionalForm


@dataclass(frozen=True)
class PickLetter:
    letter: str


@dataclass(frozen=True)
class PickReading:
    index: int


@dataclass(frozen=True)
class Process:
    pass


@dataclass(frozen=True)
class NewWord:
    pass


@dataclass(frozen=True)
class Undo:
    pass


ComposerEvent = SetFilter | PickLetter | PickReading | Process | NewWord | Undo


def offered_readings(state: ComposerState, letter_id: str, table: RuleTable) -> tuple[ReadingOption, ...]:
    """The letter's own readings, plus digraph values when it extends a
    lone word-initial alif."""
    letter = table.require(letter_id)
    options = [ReadingOption(value) for value in letter.readings]
    if len(state.committed) == 1 and state.committed[0].letters == ("alif",):
        for rule in table.word_initial_digraphs():
            if rule.pair == ("alif", letter_id):
                options.extend(ReadingOption(value, digraph=True) for value in rule.values)
    return tuple(options)


def apply_event(state: ComposerState, event: ComposerEvent, table: RuleTable) -> ComposerState:
    """Pure transition; replaying an event list from empty is deterministic."""
    if isinstance(event, SetFilter):
        return replace(state, active_filter=event.form, pending=None)

    if isinstance(event, PickLetter):
        table.require(event.letter)
        pending = Pending(
            letter=event.letter,
            form=state.active_filter,
            offered=offered_readings(state, event.letter, table),
        )
        return replace(state, pending=pending)

    if isinstance(event, PickReading):
        if state.pending is None:
            raise NoPendingSelection()
        if not 0 <= event.index < len(state.pending.offered):
            raise ReadingIndexOutOfRange(event.index, len(state.pending.offered))
        return replace(state, pending=replace(state.pending, chosen=event.index))

    if isinstance(event, Process):
        if state.pending is None:
            raise NoPendingSelection()
        if state.pending.chosen is None:
            raise NoReadingChosen()
        option = state.pending.offered[state.pending.chosen]
        if option.digraph:
            unit = CommittedUnit(
                letters=("alif", state.pending.letter),
                reading=option.value,
                form=state.pending.form,
            )
            committed = state.committed[:-1] + (unit,)
        else:
            unit = CommittedUnit(
                letters=(state.pending.letter,),
                reading=option.value,
                form=state.pending.form,
            )
            committed = state.committed + (unit,)
        return replace(state, committed=committed, pending=None)

    if isinstance(event, NewWord):
        return EMPTY_STATE

    if isinstance(event, Undo):
        if not state.committed:
            return state
        last = state.committed[-1]
        if len(last.letters) == 2:
            alif = table.require(last.letters[0])
            restored = CommittedUnit(letters=(alif.id,), reading=alif.readings[0], form=last.form)
            committed = state.committed[:-1] + (restored,)
        else:
            committed = state.committed[:-1]
        return replace(state, committed=committed, pending=None)

    raise TypeError(f"unknown composer event {event!r}")


def render(state: ComposerState, table: RuleTable):
    """(jawi_text, latin_text, forms): the dual displays plus true shapes.

    Forms are recomputed from the committed letters, so the display always
    reflects real contextual shaping even when the learner's position
    picks were wrong.
    """
    ids = state.letter_ids()
    forms = resolve_positions(ids, table)
    jawi = render_logical(ShapedText(tuple(ids), tuple(forms)), table)
    latin = "".join(unit.reading for unit in state.committed)
    return jawi, latin, forms


def check_filter_consistency(state: ComposerState, table: RuleTable):
    """Letters whose picked position disagrees with the shaped position."""
    ids = state.letter_ids()
    actual = resolve_positions(ids, table)
    mismatches = []
    index = 0
    for unit in state.committed:
        for _ in unit.letters:
            if unit.form != actual[index]:
                mismatches.append((index, unit.form, actual[index]))
            index += 1
    return mismatches


# -- serialization -----------------------------------------------------------


def state_to_dict(state: ComposerState) -> dict:
    pending = None
    if state.pending is not None:
        pending = {
            "letter": state.pending.letter,
            "form": state.pending.form.label,
            "offered": [
                {"value": opt.value, "digraph": opt.digraph} for opt in state.pending.offered
            ],
            "chosen": state.pending.chosen,
        }
    return {
        "committed": [
            {"letters": list(unit.letters), "reading": unit.reading, "form": unit.form.label}
            for unit in state.committed
        ],
        "pending": pending,
        "filter": state.active_filter.label,
        "history_depth": state.history_depth,
    }


def _parse_form(label, where) -> PositionalForm:
    try:
        return PositionalForm.from_label(label)
    except (ValueError, AttributeError):
        raise ValidationError(where, f"bad positional form {label!r}") from None


def _validate_unit(raw, index, table, is_first) -> CommittedUnit:
    where = f"committed[{index}]"
    if not isinstance(raw, dict):
        raise ValidationError(where, "must be an object")
    letters = raw.get("letters")
    if not isinstance(letters, list) or not 1 <= len(letters) <= 2:
        raise ValidationError(where, "letters must list one or two letter ids")
    for letter_id in letters:
        if table.get(letter_id) is None:
            raise ValidationError(where, f"unknown letter {letter_id!r}")
    reading = raw.get("reading")
    if not isinstance(reading, str) or not reading:
        raise ValidationError(where, "reading must be a nonempty string")
    form = _parse_form(raw.get("form"), where)
    if len(letters) == 2:
        rule = next(
            (r for r in table.word_initial_digraphs() if list(r.pair) == letters), None
        )
        if rule is None:
            raise ValidationError(where, f"{letters} is not a word-initial pair")
        if not is_first:
            raise ValidationError(where, "a vowel pair may only open the word")
        if reading not in rule.values:
            raise ValidationError(where, f"reading {reading!r} is not a value of {rule.id}")
    else:
        letter = table.require(letters[0])
        allowed = set(letter.readings)
        for rule in table.digraphs_with(letter.id):
            allowed.update(rule.values)
        if reading not in allowed:
            raise ValidationError(where, f"reading {reading!r} not offered by {letter.id}")
    return CommittedUnit(letters=tuple(letters), reading=reading, form=form)


def state_from_dict(raw, table: RuleTable) -> ComposerState:
    """Rebuild and re-validate a state a client echoed back.

    An empty object is a fresh state.  Offered readings of a pending
    selection are re-derived rather than trusted.
    """
    if raw is None:
        return EMPTY_STATE
    if not isinstance(raw, dict):
        raise ValidationError("state", "must be an object")
    if not raw:
        return EMPTY_STATE
    unknown = set(raw) - {"committed", "pending", "filter", "history_depth"}
    if unknown:
        raise ValidationError("state", f"unknown keys {sorted(unknown)}")

    raw_committed = raw.get("committed", [])
    if not isinstance(raw_committed, list):
        raise ValidationError("committed", "must be a list")
    committed = tuple(
        _validate_unit(item, i, table, is_first=(i == 0))
        for i, item in enumerate(raw_committed)
    )

    active_filter = PositionalForm.ISOLATED
    if "filter" in raw:
        active_filter = _parse_form(raw.get("filter"), "filter")

    state = ComposerState(committed=committed, pending=None, active_filter=active_filter)

    raw_pending = raw.get("pending")
    if raw_pending is not None:
        if not isinstance(raw_pending, dict):
            raise ValidationError("pending", "must be an object")
        letter_id = raw_pending.get("letter")
        if not isinstance(letter_id, str) or table.get(letter_id) is None:
            raise ValidationError("pending", f"unknown letter {letter_id!r}")
        form = _parse_form(raw_pending.get("form"), "pending")
        offered = offered_readings(state, letter_id, table)
        chosen = raw_pending.get("chosen")
        if chosen is not None:
            if not isinstance(chosen, int) or not 0 <= chosen < len(offered):
                raise ValidationError("pending", f"chosen index {chosen!r} out of range")
        state = replace(state, pending=Pending(letter=letter_id, form=form,
                                               offered=offered, chosen=chosen))
    return state


_EVENT_PARSERS = {
    "set_filter": lambda raw: SetFilter(_parse_form(raw.get("form"), "event")),
    "pick_letter": lambda raw: PickLetter(str(raw.get("letter"))),
    "pick_reading": lambda raw: PickReading(raw.get("index")),
    "process": lambda raw: Process(),
    "new_word": lambda raw: NewWord(),
    "undo": lambda raw: Undo(),
}


def event_from_dict(raw) -> ComposerEvent:
    if not isinstance(raw, dict):
        raise ValidationError("event", "must be an object")
    kind = raw.get("type")
    parser = _EVENT_PARSERS.get(kind)
    if parser is None:
        raise ValidationError("event", f"unknown event type {kind!r}")
    event = parser(raw)
    if isinstance(event, PickReading) and not isinstance(event.index, int):
        raise ValidationError("event", "pick_reading needs an integer index")
    return event


__all__ = [
    "ReadingOption",
    "CommittedUnit",
    "Pending",
    "ComposerState",
    "EMPTY_STATE",
    "SetFilter",
    "PickLetter",
    "PickReading",
    "Process",
    "NewWord",
    "Undo",
    "ComposerEvent",
    "offered_readings",
    "apply_event",
    "render",
    "check_filter_consistency",
    "state_to_dict",
    "state_from_dict",
    "event_from_dict",
]
