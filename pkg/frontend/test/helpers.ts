import type { LetterInfo } from "../src/api.js";

export function letter(overrides: Partial<LetterInfo> & { id: string; char: string }): LetterInfo {
  return {
    codepoint: "U+0000",
    display_name: overrides.id,
    joining: "dual",
    joins_left: true,
    category: "consonant",
    readings: ["x"],
    forms: ["isolated", "initial", "medial", "final"],
    example: null,
    note: null,
    ...overrides,
  };
}

export const SAMPLE_LETTERS: LetterInfo[] = [
  letter({ id: "alif", char: "ا", joining: "right-only", joins_left: false,
           category: "vowel", readings: ["a", "e"], forms: ["isolated", "final"] }),
  letter({ id: "ba", char: "ب", readings: ["b"] }),
  letter({ id: "ta", char: "ت", readings: ["t"] }),
  letter({ id: "waw", char: "و", joining: "right-only", joins_left: false,
           category: "vowel", readings: ["w", "u", "o"], forms: ["isolated", "final"] }),
  letter({ id: "ra", char: "ر", joining: "right-only", joins_left: false,
           forms: ["isolated", "final"], readings: ["r"] }),
  letter({ id: "nga", char: "ڠ", category: "extended", readings: ["ng"] }),
];
