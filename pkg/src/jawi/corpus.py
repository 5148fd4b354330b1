"""Curated reference corpus and the verification harness gating releases.

Each entry pairs a Latin word with its Jawi spelling, tagged with the
source row it came from, the spelling mode that reproduces it, and a
status: normative entries must round-trip through the engine, suspect
entries document defects in the source material (corrupted glyphs,
swapped rows, spellings inconsistent with their own word) and are
reported without ever failing a run.
"""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass
from importlib import resources

from .errors import ParseError, ValidationError
from .letters import render_logical
from .rules import RuleTable, SpellingMode
from .translit import jawi_to_latin, latin_to_jawi

_ENTRY_KEYS = {"latin", "jawi", "source", "status", "mode", "note"}


class EntryStatus(enum.Enum):
    NORMATIVE = "normative"
    SUSPECT = "suspect"


@dataclass(frozen=True)
class CorpusEntry:
    latin: str
    jawi: str
    source: str
    status: EntryStatus
    mode: SpellingMode
    note: str | None = None


@dataclass(frozen=True)
class EntryResult:
    entry: CorpusEntry
    encoded: str
    encode_ok: bool
    decode_ok: bool

    @property
    def passed(self) -> bool:
        return self.encode_ok and self.decode_ok


@dataclass(frozen=True)
class CorpusReport:
    results: tuple[EntryResult, ...]

    @property
    def normative(self):
        return [r for r in self.results if r.entry.status is EntryStatus.NORMATIVE]

    @property
    def suspect(self):
        return [r for r in self.results if r.entry.status is EntryStatus.SUSPECT]

    @property
    def failures(self):
        return [r for r in self.normative if not r.passed]

    @property
    def passed(self) -> bool:
        """Suspect entries never fail the run; normative ones all must pass."""
        return not self.failures


def _parse_entry(obj, index) -> CorpusEntry:
    if not isinstance(obj, dict):
        raise ParseError("corpus entry must be an object", f"entries[{index}]")
    unknown = set(obj) - _ENTRY_KEYS
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", f"entries[{index}]")
    latin = obj.get("latin")
    jawi = obj.get("jawi")
    if not isinstance(latin, str) or not latin:
        raise ValidationError(f"entries[{index}]", "latin must be a nonempty string")
    if not isinstance(jawi, str) or not jawi:
        raise ValidationError(latin, "jawi must be a nonempty string")
    source = obj.get("source")
    if not isinstance(source, str) or not source:
        raise ValidationError(latin, "source citation is required")
    try:
        status = EntryStatus(obj.get("status"))
    except ValueError:
        raise ValidationError(latin, f"bad status {obj.get('status')!r}") from None
    try:
        mode = SpellingMode.parse(obj.get("mode"))
    except ValueError as exc:
        raise ValidationError(latin, str(exc)) from None
    note = obj.get("note")
    if status is EntryStatus.SUSPECT and not note:
        raise ValidationError(latin, "suspect entries must carry a note")
    return CorpusEntry(latin=latin, jawi=jawi, source=source, status=status, mode=mode, note=note)


def load_corpus(source) -> list[CorpusEntry]:
    """Load and validate corpus entries; duplicate latin+jawi pairs rejected."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"corpus is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, list):
        raise ParseError("corpus must be a JSON list")
    entries = []
    seen = set()
    for i, raw in enumerate(doc):
        entry = _parse_entry(raw, i)
        key = (entry.latin, entry.jawi)
        if key in seen:
            raise ValidationError(entry.latin, "duplicate entry")
        seen.add(key)
        entries.append(entry)
    return entries


def verify_entry(entry: CorpusEntry, table: RuleTable) -> EntryResult:
    """Run both directions for one entry.

    (a) encoding the Latin word in the entry's mode must reproduce the
    Jawi spelling; (b) the Latin word must appear in the untruncated
    decoder candidate set for that spelling.
    """
    encoded = render_logical(latin_to_jawi(entry.latin, table, entry.mode), table)
    encode_ok = encoded == entry.jawi
    decode_ok = any(c.latin == entry.latin for c in jawi_to_latin(entry.jawi, table))
    return EntryResult(entry=entry, encoded=encoded, encode_ok=encode_ok, decode_ok=decode_ok)


def verify_corpus(entries, table: RuleTable) -> CorpusReport:
    return CorpusReport(results=tuple(verify_entry(e, table) for e in entries))


def coverage(entries, table: RuleTable) -> dict[str, list[str]]:
    """Which corpus words exercise each letter of the inventory."""
    usage = {letter.id: [] for letter in table.letters}
    for entry in entries:
        for ch in entry.jawi:
            letter = table.by_codepoint(ord(ch))
            if letter is not None and entry.latin not in usage[letter.id]:
                usage[letter.id].append(entry.latin)
    return usage


def format_report(report: CorpusReport, elapsed: float | None = None) -> str:
    lines = []
    for result in report.results:
        entry = result.entry
        if entry.status is EntryStatus.SUSPECT:
            lines.append(f"SUSPECT  {entry.latin} {entry.jawi} ({entry.note})")
            continue
        verdict = "ok" if result.passed else "FAIL"
        detail = ""
        if not result.encode_ok:
            detail += f" encode->{result.encoded}"
        if not result.decode_ok:
            detail += " latin-not-decoded"
        lines.append(f"{verdict:8} {entry.latin} {entry.jawi} [{entry.mode.value}]{detail}")
    normative = report.normative
    lines.append(
        f"{len(normative) - len(report.failures)}/{len(normative)} normative entries pass, "
        f"{len(report.suspect)} suspect reported"
        + (f" ({elapsed:.3f}s)" if elapsed is not None else "")
    )
    return "\n".join(lines)


def run_corpus_check(entries, table: RuleTable):
    started = time.perf_counter()
    report = verify_corpus(entries, table)
    return report, time.perf_counter() - started


def default_corpus_path():
    return resources.files("jawi").joinpath("data/corpus.json")


def default_corpus() -> list[CorpusEntry]:
    return load_corpus(default_corpus_path().read_bytes())


__all__ = [
    "EntryStatus",
    "CorpusEntry",
    "EntryResult",
    "CorpusReport",
    "load_corpus",
    "verify_entry",
    "verify_corpus",
    "coverage",
    "format_report",
    "run_corpus_check",
    "default_corpus",
    "default_corpus_path",
]
