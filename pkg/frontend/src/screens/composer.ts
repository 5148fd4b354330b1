// The interactive lesson screen: position filter, letter grid, reading
// picker, dual displays, proses / ulang / kata-baru commands. All word
// knowledge lives on the server; this screen only sends events and
// paints whatever comes back.

import type { ComposerEventJson, ComposerStateJson, JawiApi, LetterInfo } from "../api.js";
import { clear, el, Toasts } from "../dom.js";
import {
  FORM_LABELS,
  FORMS,
  displayGlyph,
  formatConsistency,
  lettersForFilter,
  offeredReadings,
  pendingLetter,
  chosenIndex,
  type Form,
} from "../session.js";

export class ComposerScreen {
  readonly root: HTMLElement;
  state: ComposerStateJson = {};
  filter: Form = "isolated";
  private busy = false;
  private lastOp: Promise<void> = Promise.resolve();

  private filterBar!: HTMLElement;
  private grid!: HTMLElement;
  private readings!: HTMLElement;
  private jawiOut!: HTMLElement;
  private latinOut!: HTMLElement;
  private consistencyOut!: HTMLElement;
  private prosesButton!: HTMLButtonElement;

  constructor(
    private doc: Document,
    private api: JawiApi,
    private letters: LetterInfo[],
    private toasts: Toasts,
    onMenu: () => void,
  ) {
    this.root = el(doc, "section", { className: "screen composer" });
    this.build(onMenu);
    this.renderGrid();
    this.renderReadings();
  }

  private build(onMenu: () => void): void {
    const doc = this.doc;
    this.jawiOut = el(doc, "div", {
      className: "display jawi",
      dir: "rtl",
      dataset: { testid: "jawi-display" },
    });
    this.latinOut = el(doc, "div", {
      className: "display latin",
      dir: "ltr",
      dataset: { testid: "latin-display" },
    });

    this.filterBar = el(doc, "div", { className: "filters" });
    for (const form of FORMS) {
      this.filterBar.append(
        el(doc, "button", {
          text: FORM_LABELS[form],
          dataset: { form },
          onClick: () => void this.setFilter(form),
        }),
      );
    }

    this.grid = el(doc, "div", { className: "grid", dataset: { testid: "letter-grid" } });
    this.readings = el(doc, "div", { className: "readings", dataset: { testid: "readings" } });
    this.consistencyOut = el(doc, "pre", {
      className: "consistency",
      dataset: { testid: "consistency" },
    });

    this.prosesButton = el(doc, "button", {
      className: "proses",
      text: "Proses",
      dataset: { testid: "proses" },
      onClick: () => void this.send({ type: "process" }),
    });

    this.root.append(
      el(doc, "div", { className: "dual" }, this.jawiOut, this.latinOut),
      this.filterBar,
      this.grid,
      this.readings,
      el(
        doc,
        "div",
        { className: "commands" },
        this.prosesButton,
        el(doc, "button", {
          text: "Ulang",
          dataset: { testid: "undo" },
          onClick: () => void this.send({ type: "undo" }),
        }),
        el(doc, "button", {
          text: "Kata baru (Ctrl+N)",
          dataset: { testid: "new-word" },
          onClick: () => void this.send({ type: "new_word" }),
        }),
        el(doc, "button", { text: "Menu utama", onClick: onMenu }),
      ),
      this.consistencyOut,
    );
    this.updateFilterBar();
  }

  handleKeydown(event: KeyboardEvent): void {
    if (event.ctrlKey && event.key.toLowerCase() === "n") {
      event.preventDefault();
      void this.send({ type: "new_word" });
    }
  }

  /** Resolves when no composer request is in flight (used by tests). */
  whenIdle(): Promise<void> {
    return this.lastOp;
  }

  private send(event: ComposerEventJson): Promise<void> {
    if (this.busy) return this.lastOp;
    this.busy = true;
    this.prosesButton.disabled = true;
    this.lastOp = (async () => {
      try {
        const result = await this.api.composerStep(this.state, event);
        this.state = result.state;
        this.jawiOut.textContent = result.render.jawi;
        this.latinOut.textContent = result.render.latin;
        this.consistencyOut.textContent =
          result.render.forms.length > 0 || result.consistency.length > 0
            ? formatConsistency(result.consistency)
            : "";
        this.renderReadings();
      } catch (err) {
        // surface the failure; the held state stays exactly as it was
        this.toasts.show(err instanceof Error ? err.message : String(err));
      } finally {
        this.busy = false;
        this.prosesButton.disabled = false;
      }
    })();
    return this.lastOp;
  }

  async setFilter(form: Form): Promise<void> {
    await this.send({ type: "set_filter", form });
    this.filter = form;
    this.updateFilterBar();
    this.renderGrid();
  }

  private updateFilterBar(): void {
    for (const button of Array.from(this.filterBar.children)) {
      const active = button.getAttribute("data-form") === this.filter;
      button.className = active ? "active" : "";
    }
  }

  private renderGrid(): void {
    clear(this.grid);
    for (const letter of lettersForFilter(this.letters, this.filter)) {
      this.grid.append(
        el(
          this.doc,
          "button",
          {
            className: "letter-cell",
            title: letter.display_name,
            dataset: { letter: letter.id },
            onClick: () => void this.send({ type: "pick_letter", letter: letter.id }),
          },
          el(this.doc, "span", {
            className: "glyph",
            dir: "rtl",
            text: displayGlyph(letter.char, this.filter),
          }),
          el(this.doc, "span", { className: "label", text: letter.display_name }),
        ),
      );
    }
  }

  private renderReadings(): void {
    clear(this.readings);
    const letterId = pendingLetter(this.state);
    if (letterId === null) {
      this.readings.append(
        el(this.doc, "span", { className: "hint", text: "Pilih huruf arab melayu." }),
      );
      return;
    }
    const chosen = chosenIndex(this.state);
    offeredReadings(this.state).forEach((option, index) => {
      this.readings.append(
        el(this.doc, "button", {
          className: index === chosen ? "reading chosen" : "reading",
          text: option.digraph ? `${option.value} (gabungan alif)` : option.value,
          dataset: { index: String(index), value: option.value },
          onClick: () => void this.send({ type: "pick_reading", index }),
        }),
      );
    });
  }
}
