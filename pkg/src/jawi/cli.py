"""Command-line front door: conversion, inspection, lesson, corpus gate.

Exit codes: 0 success, 1 configuration/IO/usage failure, 2 engine-level
failure (unencodable word, unknown code point, corpus verification).
Jawi input and output are logical-order UTF-8 throughout; the CLI never
attempts terminal bidi layout, but ``--forms`` exposes the resolved
positional forms for inspection.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import composer
from .corpus import EntryStatus, default_corpus, format_report, load_corpus, run_corpus_check
from .errors import JawiError, ParseError, ValidationError
from .letters import PositionalForm, render_logical, shape
from .rules import default_table, load_rule_table
from .translit import jawi_to_latin, latin_to_jawi

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ENGINE = 2


def _load_table(args):
    if args.table:
        try:
            with open(args.table, "rb") as handle:
                return load_rule_table(handle)
        except OSError as exc:
            raise SystemExit(_fail(f"cannot read rule table: {exc}"))
        except (ParseError, ValidationError) as exc:
            raise SystemExit(_fail(f"bad rule table: {exc}"))
    return default_table()


def _fail(message):
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit_json(payload):
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def cmd_to_jawi(args) -> int:
    table = _load_table(args)
    results, failed = [], False
    for word in args.words:
        lowered = word.lower()
        if not lowered:
            return _fail("empty word")
        try:
            shaped = latin_to_jawi(lowered, table, args.mode)
        except JawiError as exc:
            failed = True
            print(f"error: {word}: {exc}", file=sys.stderr)
            continue
        results.append({
            "word": lowered,
            "jawi": render_logical(shaped, table),
            "letters": list(shaped.letters),
            "forms": [form.label for form in shaped.forms],
        })
    if args.json:
        _emit_json(results)
    else:
        for r in results:
            line = r["jawi"]
            if args.forms:
                line += "  " + " ".join(r["forms"])
            print(line)
    return EXIT_ENGINE if failed else EXIT_OK


def cmd_to_latin(args) -> int:
    table = _load_table(args)
    results, failed = [], False
    for word in args.words:
        try:
            candidates = jawi_to_latin(word, table, args.limit)
        except JawiError as exc:
            failed = True
            print(f"error: {word}: {exc}", file=sys.stderr)
            continue
        results.append({
            "word": word,
            "candidates": [
                {"latin": c.latin, "score": c.score, "trace": list(c.trace)}
                for c in candidates
            ],
        })
    if args.json:
        _emit_json(results)
    else:
        for r in results:
            ranked = "  ".join(f"{c['latin']} ({c['score']:.3f})" for c in r["candidates"])
            print(f"{r['word']}: {ranked}")
    return EXIT_ENGINE if failed else EXIT_OK


def cmd_shape(args) -> int:
    table = _load_table(args)
    results, failed = [], False
    for word in args.words:
        try:
            ids = [table.require_codepoint(ch, i).id for i, ch in enumerate(word)]
            shaped = shape(ids, table)
        except JawiError as exc:
            failed = True
            print(f"error: {word}: {exc}", file=sys.stderr)
            continue
        results.append({
            "word": word,
            "letters": list(shaped.letters),
            "forms": [form.label for form in shaped.forms],
        })
    if args.json:
        _emit_json(results)
    else:
        for r in results:
            pairs = " ".join(f"{l}:{f}" for l, f in zip(r["letters"], r["forms"]))
            print(f"{r['word']}: {pairs}")
    return EXIT_ENGINE if failed else EXIT_OK


def cmd_letters(args) -> int:
    table = _load_table(args)
    examples: dict[str, str] = {}
    try:
        for entry in default_corpus():
            for ch in entry.jawi:
                letter = table.by_codepoint(ord(ch))
                if letter is not None and letter.id not in examples:
                    examples[letter.id] = entry.latin
    except JawiError:
        pass
    rows = []
    for letter in table.letters:
        rows.append({
            "id": letter.id,
            "char": letter.char,
            "codepoint": f"U+{letter.codepoint:04X}",
            "joining": letter.joining.value,
            "category": letter.category.value,
            "forms": [form.label for form in letter.available_forms()],
            "readings": list(letter.readings),
            "example": examples.get(letter.id),
        })
    if args.json:
        _emit_json(rows)
        return EXIT_OK
    for r in rows:
        forms = ",".join(r["forms"])
        readings = "/".join(r["readings"])
        example = r["example"] or "-"
        print(f"{r['id']:9} {r['char']}  {r['codepoint']}  {r['joining']:10} "
              f"{r['category']:9} forms={forms:32} readings={readings:8} e.g. {example}")
    return EXIT_OK


def cmd_corpus_check(args) -> int:
    table = _load_table(args)
    if args.path:
        try:
            with open(args.path, "rb") as handle:
                entries = load_corpus(handle)
        except OSError as exc:
            return _fail(f"cannot read corpus: {exc}")
        except (ParseError, ValidationError) as exc:
            return _fail(f"bad corpus: {exc}")
    else:
        entries = default_corpus()
    report, elapsed = run_corpus_check(entries, table)
    if args.json:
        _emit_json({
            "passed": report.passed,
            "elapsed": elapsed,
            "results": [
                {
                    "latin": r.entry.latin,
                    "jawi": r.entry.jawi,
                    "status": r.entry.status.value,
                    "mode": r.entry.mode.value,
                    "encode_ok": r.encode_ok,
                    "decode_ok": r.decode_ok,
                    "encoded": r.encoded,
                }
                for r in report.results
            ],
        })
    else:
        print(format_report(report, elapsed))
    return EXIT_OK if report.passed else EXIT_ENGINE


_FILTER_KEYS = {
    "1": PositionalForm.ISOLATED,
    "2": PositionalForm.INITIAL,
    "3": PositionalForm.MEDIAL,
    "4": PositionalForm.FINAL,
}

_LESSON_HELP = """\
commands:
  f 1|2|3|4       set position filter (isolated/initial/medial/final)
  <letter-id>     pick a letter (e.g. ba); 'l' lists letters for the filter
  0..9            pick the offered reading with that number
  p               process the pending letter into the word
  u               undo the last processed letter
  n               start a new word
  q               quit (prints the final word and the position report)
"""


def _lesson_prompt(state, table):
    jawi, latin, _forms = composer.render(state, table)
    line = f"[{state.active_filter.label}] {jawi or '·'} / {latin or '·'}"
    if state.pending:
        offered = " ".join(
            f"{i}={opt.value}{'*' if opt.digraph else ''}"
            for i, opt in enumerate(state.pending.offered)
        )
        line += f"  pending {state.pending.letter}: {offered}"
    return line


def cmd_lesson(args) -> int:
    if not sys.stdin.isatty() and not args.script:
        return _fail("lesson needs an interactive terminal (or --script)")
    table = _load_table(args)
    state = composer.EMPTY_STATE
    echo = sys.stdin.isatty()
    print(_LESSON_HELP if echo else "", end="")
    while True:
        if echo:
            print(_lesson_prompt(state, table))
        try:
            line = input("> " if echo else "")
        except EOFError:
            break
        tokens = line.strip().split()
        if not tokens:
            continue
        head = tokens[0].lower()
        try:
            if head == "q":
                break
            elif head == "f" and len(tokens) > 1 and tokens[1] in _FILTER_KEYS:
                state = composer.apply_event(state, composer.SetFilter(_FILTER_KEYS[tokens[1]]), table)
            elif head == "p":
                state = composer.apply_event(state, composer.Process(), table)
            elif head == "n":
                state = composer.apply_event(state, composer.NewWord(), table)
            elif head == "u":
                state = composer.apply_event(state, composer.Undo(), table)
            elif head == "l":
                for letter in table.letters:
                    if state.active_filter in letter.available_forms():
                        print(f"  {letter.id:9} {letter.char}  {'/'.join(letter.readings)}")
            elif head.isdigit():
                state = composer.apply_event(state, composer.PickReading(int(head)), table)
            elif table.get(head) is not None:
                state = composer.apply_event(state, composer.PickLetter(head), table)
            else:
                print(f"? unknown command {head!r} (h for help)")
                continue
        except JawiError as exc:
            print(f"! {exc}")
            continue
    jawi, latin, _forms = composer.render(state, table)
    print(f"{jawi} / {latin}")
    mismatches = composer.check_filter_consistency(state, table)
    if mismatches:
        for index, chosen, actual in mismatches:
            print(f"position {index}: picked {chosen.label}, shaped {actual.label}")
    else:
        print("all position picks match the shaped word")
    return EXIT_OK


def cmd_serve(args) -> int:
    from . import service

    service.run(
        host=args.host,
        port=args.port,
        table_path=args.table,
        cors_origins=tuple(args.cors.split(",")) if args.cors else ("*",),
        static_dir=args.static,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jawi",
        description="Jawi (Arab-Melayu) transliteration toolkit",
    )
    parser.add_argument("--table", metavar="PATH", help="rule table JSON (default: embedded)")
    parser.add_argument("--mode", choices=["plene", "traditional"],
                        help="spelling mode override")
    parser.add_argument("--json", action="store_true", help="structured JSON output")
    parser.add_argument("--limit", type=int, default=5, metavar="N",
                        help="max decoder candidates (default 5)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("to-jawi", help="encode Latin words as Jawi")
    p.add_argument("words", nargs="+")
    p.add_argument("--forms", action="store_true", help="append positional forms")
    p.set_defaults(func=cmd_to_jawi)

    p = sub.add_parser("to-latin", help="decode Jawi words into ranked Latin candidates")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_to_latin)

    p = sub.add_parser("shape", help="show positional forms of Jawi words")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("letters", help="list the letter inventory")
    p.set_defaults(func=cmd_letters)

    p = sub.add_parser("lesson", help="interactive terminal composer")
    p.add_argument("--script", action="store_true",
                   help="read commands from non-interactive stdin")
    p.set_defaults(func=cmd_lesson)

    p = sub.add_parser("corpus", help="corpus tools")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    check = corpus_sub.add_parser("check", help="verify the reference corpus")
    check.add_argument("path", nargs="?", help="corpus JSON (default: embedded)")
    check.set_defaults(func=cmd_corpus_check)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8808)
    p.add_argument("--cors", metavar="ORIGINS", help="comma-separated CORS allowlist")
    p.add_argument("--static", metavar="DIR", help="serve a built UI from this directory")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.limit < 1:
        return _fail("--limit must be at least 1")
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
