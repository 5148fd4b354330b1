"""Rule-driven Jawi (Arab-Melayu) transliteration toolkit.

Contextual letter shaping, Latin-to-Jawi encoding, Jawi-to-Latin candidate
decoding, an interactive letter-by-letter word composer, and a curated
reference corpus, exposed as a library, CLI, and HTTP service.
"""

from .composer import (
    ComposerState,
    NewWord,
    PickLetter,
    PickReading,
    Process,
    SetFilter,
    Undo,
    apply_event,
    check_filter_consistency,
    offered_readings,
    render,
    state_from_dict,
    state_to_dict,
)
from .corpus import (
    CorpusEntry,
    CorpusReport,
    EntryStatus,
    default_corpus,
    load_corpus,
    verify_corpus,
)
from .errors import (
    EmptyInput,
    InputTooLong,
    JawiError,
    NoPendingSelection,
    NoReadingChosen,
    ParseError,
    ReadingIndexOutOfRange,
    UnencodableInput,
    UnknownCodepoint,
    UnknownLetter,
    ValidationError,
)
from .letters import (
    Category,
    JoiningClass,
    Letter,
    PositionalForm,
    ShapedText,
    letters_from_text,
    render_logical,
    resolve_positions,
    shape,
)
from .rules import (
    DigraphRule,
    RuleTable,
    SpellingMode,
    default_table,
    dump_rule_table,
    load_rule_table,
)
from .translit import (
    ReadingCandidate,
    enumerate_all_readings,
    jawi_to_latin,
    latin_to_jawi,
    replay_trace,
)

__version__ = "0.1.0"
