import json

import pytest

from jawi.corpus import (
    EntryStatus,
    coverage,
    default_corpus,
    load_corpus,
    verify_corpus,
    verify_entry,
)
from jawi.errors import ParseError, ValidationError


def test_shipped_corpus_size(corpus):
    assert len(corpus) >= 30
    normative = [e for e in corpus if e.status is EntryStatus.NORMATIVE]
    assert len(normative) >= 25


def test_all_normative_entries_pass(table, corpus):
    report = verify_corpus(corpus, table)
    assert report.passed, [r.entry.latin for r in report.failures]


def test_suspect_entries_reported_not_failed(table, corpus):
    report = verify_corpus(corpus, table)
    suspects = report.suspect
    assert suspects
    # at least one suspect entry genuinely fails a check, proving the
    # status shield matters
    assert any(not r.passed for r in suspects)
    assert report.passed


def test_suspect_entries_have_notes(corpus):
    for entry in corpus:
        if entry.status is EntryStatus.SUSPECT:
            assert entry.note


def test_known_rows(table, corpus):
    by_latin = {e.latin: e for e in corpus}
    batu = by_latin["batu"]
    assert batu.jawi == "باتو"
    assert verify_entry(batu, table).passed
    makan = by_latin["makan"]
    assert makan.jawi == "مکن"
    assert makan.mode.value == "traditional"
    assert verify_entry(makan, table).passed
    khusus = by_latin["khusus"]
    assert khusus.status is EntryStatus.SUSPECT


def test_coverage_all_letters_except_hamzah(table, corpus):
    usage = coverage(corpus, table)
    for letter in table.letters:
        if letter.id == "hamzah":
            assert usage[letter.id] == []
        else:
            assert usage[letter.id], letter.id


def test_empty_jawi_rejected():
    doc = [{"latin": "x", "jawi": "", "source": "s", "status": "normative", "mode": "plene"}]
    with pytest.raises(ValidationError):
        load_corpus(json.dumps(doc))


def test_duplicate_entry_rejected():
    entry = {"latin": "batu", "jawi": "باتو", "source": "s",
             "status": "normative", "mode": "plene"}
    with pytest.raises(ValidationError):
        load_corpus(json.dumps([entry, dict(entry)]))


def test_suspect_without_note_rejected():
    doc = [{"latin": "x", "jawi": "ب", "source": "s", "status": "suspect", "mode": "plene"}]
    with pytest.raises(ValidationError):
        load_corpus(json.dumps(doc))


def test_unknown_key_rejected():
    doc = [{"latin": "x", "jawi": "ب", "source": "s", "status": "normative",
            "mode": "plene", "extra": 1}]
    with pytest.raises(ParseError):
        load_corpus(json.dumps(doc))


def test_invalid_json_rejected():
    with pytest.raises(ParseError):
        load_corpus(b"[{")


def test_loads_from_bytes_and_text():
    doc = json.dumps([{"latin": "batu", "jawi": "باتو", "source": "s",
                       "status": "normative", "mode": "plene"}])
    assert load_corpus(doc) == load_corpus(doc.encode("utf-8"))


def test_broken_normative_entry_fails_run(table):
    doc = [{"latin": "batu", "jawi": "ساتو", "source": "s",
            "status": "normative", "mode": "plene"}]
    report = verify_corpus(load_corpus(json.dumps(doc)), table)
    assert not report.passed
