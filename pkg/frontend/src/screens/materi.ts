// Reference screen: the letter inventory grouped by category, with the
// writing-direction and joining notes.

import type { LetterInfo } from "../api.js";
import { el } from "../dom.js";
import { CATEGORY_LABELS, FORMS, displayGlyph, groupByCategory } from "../session.js";

const DIRECTION_NOTE =
  "Tulisan arab melayu ditulis dan dibaca dari kanan ke kiri.";
const JOINING_NOTE =
  "Huruf bertanda • tidak bersambung dengan huruf sesudahnya dan " +
  "ditulis seperti huruf awal.";

export function buildMateri(doc: Document, letters: LetterInfo[], onMenu: () => void): HTMLElement {
  const root = el(doc, "section", { className: "screen materi" });
  root.append(
    el(doc, "h2", { text: "Materi huruf arab melayu" }),
    el(doc, "p", { className: "note", text: DIRECTION_NOTE }),
    el(doc, "p", { className: "note", text: JOINING_NOTE }),
  );

  const groups = groupByCategory(letters);
  for (const category of ["vowel", "consonant", "extended"] as const) {
    const section = el(doc, "div", {
      className: `letter-group ${category}`,
      dataset: { category },
    });
    section.append(el(doc, "h3", { text: CATEGORY_LABELS[category] }));
    const grid = el(doc, "div", { className: "grid" });
    for (const letter of groups[category]) {
      grid.append(letterCard(doc, letter));
    }
    section.append(grid);
    root.append(section);
  }

  root.append(el(doc, "button", { text: "Menu utama", onClick: onMenu }));
  return root;
}

function letterCard(doc: Document, letter: LetterInfo): HTMLElement {
  const forms = el(doc, "div", { className: "forms", dir: "rtl" });
  for (const form of FORMS) {
    forms.append(
      el(doc, "span", {
        className: letter.forms.includes(form) ? "form" : "form unavailable",
        dir: "rtl",
        text: letter.forms.includes(form) ? displayGlyph(letter.char, form) : "—",
        title: form,
      }),
    );
  }
  const card = el(
    doc,
    "div",
    { className: "letter-card", dataset: { letter: letter.id } },
    el(doc, "div", { className: "glyph", dir: "rtl", text: letter.char }),
    el(doc, "div", {
      className: "name",
      text: letter.joins_left ? letter.display_name : `${letter.display_name} •`,
    }),
    forms,
    el(doc, "div", { className: "readings", text: letter.readings.join(" / ") }),
  );
  if (letter.example) {
    card.append(el(doc, "div", { className: "example", text: `cth. ${letter.example}` }));
  }
  return card;
}
