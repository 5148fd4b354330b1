// Pure view logic: screen routing types, grid filtering, display glyphs.
// Deliberately free of any transliteration rules; everything language-
// specific comes from the service.

import type { ComposerStateJson, ConsistencyRow, LetterInfo, ReadingOptionJson } from "./api.js";

export type Screen = "splash" | "menu" | "materi" | "pembelajaran";

export interface UiSession {
  screen: Screen;
  state: ComposerStateJson;
  lastConsistency: ConsistencyRow[];
}

export const FORMS = ["isolated", "initial", "medial", "final"] as const;
export type Form = (typeof FORMS)[number];

export const FORM_LABELS: Record<Form, string> = {
  isolated: "Berdiri sendiri",
  initial: "Huruf awal",
  medial: "Huruf tengah",
  final: "Huruf akhir",
};

export const CATEGORY_LABELS: Record<LetterInfo["category"], string> = {
  vowel: "Huruf vokal",
  consonant: "Huruf konsonan",
  extended: "Huruf tambahan",
};

/** Letters that can actually take the requested positional form. */
export function lettersForFilter(letters: LetterInfo[], filter: Form): LetterInfo[] {
  return letters.filter((letter) => letter.forms.includes(filter));
}

export function groupByCategory(letters: LetterInfo[]): Record<LetterInfo["category"], LetterInfo[]> {
  const groups: Record<LetterInfo["category"], LetterInfo[]> = {
    vowel: [],
    consonant: [],
    extended: [],
  };
  for (const letter of letters) groups[letter.category].push(letter);
  return groups;
}

const ZWJ = "‍";

/**
 * Display glyph for a letter in a given position, produced by joiner
 * hints. Purely visual; the hinted string is never sent to the engine.
 */
export function displayGlyph(char: string, form: Form): string {
  switch (form) {
    case "initial":
      return char + ZWJ;
    case "medial":
      return ZWJ + char + ZWJ;
    case "final":
      return ZWJ + char;
    default:
      return char;
  }
}

/** The readings the server offered on the pending selection, if any. */
export function offeredReadings(state: ComposerStateJson): ReadingOptionJson[] {
  const pending = state["pending"];
  if (!pending || typeof pending !== "object") return [];
  const offered = (pending as { offered?: unknown }).offered;
  return Array.isArray(offered) ? (offered as ReadingOptionJson[]) : [];
}

export function pendingLetter(state: ComposerStateJson): string | null {
  const pending = state["pending"];
  if (!pending || typeof pending !== "object") return null;
  const letter = (pending as { letter?: unknown }).letter;
  return typeof letter === "string" ? letter : null;
}

export function chosenIndex(state: ComposerStateJson): number | null {
  const pending = state["pending"];
  if (!pending || typeof pending !== "object") return null;
  const chosen = (pending as { chosen?: unknown }).chosen;
  return typeof chosen === "number" ? chosen : null;
}

export function formatConsistency(rows: ConsistencyRow[]): string {
  if (rows.length === 0) return "Semua pilihan posisi cocok dengan bentuk kata.";
  return rows
    .map((row) => `Huruf ke-${row.index + 1}: dipilih ${row.chosen}, seharusnya ${row.actual}`)
    .join("\n");
}
