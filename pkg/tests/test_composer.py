import pytest
from hypothesis import given, strategies as st

from jawi import composer
from jawi.composer import (
    EMPTY_STATE,
    NewWord,
    PickLetter,
    PickReading,
    Process,
    SetFilter,
    Undo,
    apply_event,
    check_filter_consistency,
    render,
    state_from_dict,
    state_to_dict,
)
from jawi.errors import (
    NoPendingSelection,
    NoReadingChosen,
    ReadingIndexOutOfRange,
    UnknownLetter,
    ValidationError,
)
from jawi.letters import PositionalForm, resolve_positions
from jawi.translit import encode_segments

I, N, M, F = (
    PositionalForm.ISOLATED,
    PositionalForm.INITIAL,
    PositionalForm.MEDIAL,
    PositionalForm.FINAL,
)

BATU_EVENTS = [
    PickLetter("ba"), PickReading(0), Process(),
    PickLetter("alif"), PickReading(0), Process(),
    PickLetter("ta"), PickReading(0), Process(),
    PickLetter("waw"), PickReading(1), Process(),
]


def run_events(events, table, state=EMPTY_STATE):
    for event in events:
        state = apply_event(state, event, table)
    return state


def test_newword_on_empty_is_identity(table):
    assert apply_event(EMPTY_STATE, NewWord(), table) == EMPTY_STATE


def test_single_commit(table):
    state = run_events(
        [SetFilter(N), PickLetter("ba"), PickReading(0), Process()], table
    )
    assert [u.letters for u in state.committed] == [("ba",)]
    assert state.committed[0].reading == "b"
    jawi, latin, forms = render(state, table)
    assert (jawi, latin, forms) == ("ب", "b", [I])


def test_batu_session(table):
    state = run_events(BATU_EVENTS, table)
    jawi, latin, forms = render(state, table)
    assert jawi == "باتو"
    assert latin == "batu"
    assert forms == [N, F, N, F]


def test_batu_event_count_is_twelve():
    assert len(BATU_EVENTS) == 12


def test_empty_render(table):
    assert render(EMPTY_STATE, table) == ("", "", [])


def test_single_alif_render(table):
    state = run_events([PickLetter("alif"), PickReading(0), Process()], table)
    assert render(state, table) == ("ا", "a", [I])


def test_process_without_pending(table):
    with pytest.raises(NoPendingSelection):
        apply_event(EMPTY_STATE, Process(), table)


def test_process_without_chosen_reading(table):
    state = apply_event(EMPTY_STATE, PickLetter("ba"), table)
    with pytest.raises(NoReadingChosen):
        apply_event(state, Process(), table)


def test_pick_unknown_letter(table):
    with pytest.raises(UnknownLetter):
        apply_event(EMPTY_STATE, PickLetter("qq"), table)


def test_reading_index_out_of_range(table):
    state = apply_event(EMPTY_STATE, PickLetter("ba"), table)
    with pytest.raises(ReadingIndexOutOfRange):
        apply_event(state, PickReading(5), table)


def test_pick_reading_without_pending(table):
    with pytest.raises(NoPendingSelection):
        apply_event(EMPTY_STATE, PickReading(0), table)


def test_set_filter_clears_pending(table):
    state = apply_event(EMPTY_STATE, PickLetter("ba"), table)
    state = apply_event(state, SetFilter(F), table)
    assert state.pending is None
    assert state.active_filter == F


def test_undo_restores_committed(table):
    state = EMPTY_STATE
    for i in range(0, len(BATU_EVENTS), 3):
        before = state
        state = run_events(BATU_EVENTS[i:i + 3], table, state)
        undone = apply_event(state, Undo(), table)
        assert undone.committed == before.committed
        assert render(undone, table) == render(before, table)


def test_undo_on_empty_is_noop(table):
    assert apply_event(EMPTY_STATE, Undo(), table) == EMPTY_STATE


def test_newword_resets_everything(table):
    state = run_events(BATU_EVENTS, table)
    state = apply_event(state, SetFilter(M), table)
    assert apply_event(state, NewWord(), table) == EMPTY_STATE


def test_digraph_offer_appears_after_initial_alif(table):
    state = run_events([PickLetter("alif"), PickReading(0), Process()], table)
    state = apply_event(state, PickLetter("waw"), table)
    offered = state.pending.offered
    assert [o.value for o in offered] == ["w", "u", "o", "o", "u"]
    assert [o.digraph for o in offered] == [False, False, False, True, True]


def test_digraph_not_offered_mid_word(table):
    state = run_events(BATU_EVENTS[:6], table)  # ba, alif committed
    state = apply_event(state, PickLetter("waw"), table)
    assert all(not o.digraph for o in state.pending.offered)


def test_digraph_commit_merges_pair(table):
    state = run_events(
        [
            PickLetter("alif"), PickReading(0), Process(),
            PickLetter("waw"), PickReading(3), Process(),  # digraph "o"
            PickLetter("ra"), PickReading(0), Process(),
            PickLetter("alif"), PickReading(0), Process(),
            PickLetter("nga"), PickReading(0), Process(),
        ],
        table,
    )
    jawi, latin, forms = render(state, table)
    assert jawi == "اوراڠ"
    assert latin == "orang"


def test_digraph_undo_restores_lone_alif(table):
    state = run_events(
        [PickLetter("alif"), PickReading(0), Process(),
         PickLetter("ya"), PickReading(3), Process()],
        table,
    )
    assert state.committed[0].letters == ("alif", "ya")
    undone = apply_event(state, Undo(), table)
    assert [u.letters for u in undone.committed] == [("alif",)]
    assert undone.committed[0].reading == "a"


def test_filter_consistency_correct_filters(table):
    events = [
        SetFilter(N), PickLetter("ba"), PickReading(0), Process(),
        SetFilter(F), PickLetter("alif"), PickReading(0), Process(),
        SetFilter(N), PickLetter("ta"), PickReading(0), Process(),
        SetFilter(F), PickLetter("waw"), PickReading(1), Process(),
    ]
    state = run_events(events, table)
    assert check_filter_consistency(state, table) == []


def test_filter_consistency_reports_mismatch(table):
    events = [
        SetFilter(N), PickLetter("ba"), PickReading(0), Process(),
        SetFilter(M), PickLetter("alif"), PickReading(0), Process(),
        SetFilter(N), PickLetter("ta"), PickReading(0), Process(),
        SetFilter(F), PickLetter("waw"), PickReading(1), Process(),
    ]
    state = run_events(events, table)
    assert check_filter_consistency(state, table) == [(1, M, F)]


def test_filter_consistency_empty(table):
    assert check_filter_consistency(EMPTY_STATE, table) == []


def test_render_forms_match_resolver(table):
    state = run_events(BATU_EVENTS, table)
    _, _, forms = render(state, table)
    assert forms == resolve_positions(state.letter_ids(), table)


def test_history_depth_counts_units(table):
    state = run_events(BATU_EVENTS, table)
    assert state.history_depth == 4


# -- serialization ------------------------------------------------------------

def test_state_round_trip(table):
    state = run_events(BATU_EVENTS + [SetFilter(M), PickLetter("nun")], table)
    data = state_to_dict(state)
    assert set(data) == {"committed", "pending", "filter", "history_depth"}
    rebuilt = state_from_dict(data, table)
    assert rebuilt == state
    assert state_to_dict(rebuilt) == data


def test_empty_object_is_fresh_state(table):
    assert state_from_dict({}, table) == EMPTY_STATE


def test_bad_reading_rejected(table):
    data = {"committed": [{"letters": ["ba"], "reading": "zz", "form": "initial"}]}
    with pytest.raises(ValidationError):
        state_from_dict(data, table)


def test_pair_must_open_word(table):
    data = {
        "committed": [
            {"letters": ["ba"], "reading": "b", "form": "initial"},
            {"letters": ["alif", "waw"], "reading": "o", "form": "final"},
        ]
    }
    with pytest.raises(ValidationError):
        state_from_dict(data, table)


def test_unknown_state_key_rejected(table):
    with pytest.raises(ValidationError):
        state_from_dict({"committed": [], "surprise": 1}, table)


def test_event_from_dict_round_trip(table):
    assert composer.event_from_dict({"type": "process"}) == Process()
    assert composer.event_from_dict({"type": "set_filter", "form": "final"}) == SetFilter(F)
    assert composer.event_from_dict({"type": "pick_letter", "letter": "ba"}) == PickLetter("ba")
    assert composer.event_from_dict({"type": "pick_reading", "index": 2}) == PickReading(2)
    with pytest.raises(ValidationError):
        composer.event_from_dict({"type": "dance"})


# -- properties ----------------------------------------------------------------

@st.composite
def event_lists(draw):
    letters = ["ba", "ta", "alif", "waw", "ya", "nun", "ra"]
    events = []
    for _ in range(draw(st.integers(0, 12))):
        kind = draw(st.integers(0, 5))
        if kind == 0:
            events.append(SetFilter(draw(st.sampled_from(list(PositionalForm)))))
        elif kind == 1:
            events.append(PickLetter(draw(st.sampled_from(letters))))
        elif kind == 2:
            events.append(PickReading(draw(st.integers(0, 2))))
        elif kind == 3:
            events.append(Process())
        elif kind == 4:
            events.append(Undo())
        else:
            events.append(NewWord())
    return events


@given(event_lists())
def test_replay_determinism(events):
    from jawi.rules import default_table

    table = default_table()

    def play():
        state = EMPTY_STATE
        for event in events:
            try:
                state = apply_event(state, event, table)
            except Exception:
                pass
        return state

    first, second = play(), play()
    assert first == second
    assert render(first, table) == render(second, table)


@given(event_lists())
def test_render_shape_consistency(events):
    from jawi.rules import default_table

    table = default_table()
    state = EMPTY_STATE
    for event in events:
        try:
            state = apply_event(state, event, table)
        except Exception:
            continue
    _, _, forms = render(state, table)
    assert forms == resolve_positions(state.letter_ids(), table)


def test_compose_each_normative_corpus_word(table, corpus):
    """Every normative word is composable from its plene segmentation, and
    the Latin buffer then reads exactly the corpus word."""
    for entry in corpus:
        if entry.status.value != "normative":
            continue
        state = EMPTY_STATE
        for grapheme, letter_ids in encode_segments(entry.latin, table, "plene"):
            if len(letter_ids) == 2:
                state = run_events(
                    [PickLetter(letter_ids[0]), PickReading(0), Process()], table, state
                )
                state = apply_event(state, PickLetter(letter_ids[1]), table)
                index = next(
                    i for i, opt in enumerate(state.pending.offered)
                    if opt.digraph and opt.value == grapheme
                )
            else:
                state = apply_event(state, PickLetter(letter_ids[0]), table)
                index = next(
                    i for i, opt in enumerate(state.pending.offered)
                    if not opt.digraph and opt.value == grapheme
                )
            state = run_events([PickReading(index), Process()], table, state)
        _, latin, _ = render(state, table)
        assert latin == entry.latin
