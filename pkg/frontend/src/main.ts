// App shell: splash -> menu -> materi / pembelajaran, per the classic
// three-command main menu. "Keluar" cannot close a browser tab, so it
// returns to the landing splash instead.

import { ApiClient, type JawiApi, type LetterInfo } from "./api.js";
import { clear, el, Toasts } from "./dom.js";
import { ComposerScreen } from "./screens/composer.js";
import { buildMateri } from "./screens/materi.js";
import type { Screen } from "./session.js";

export class App {
  screen: Screen = "splash";
  composer: ComposerScreen | null = null;
  readonly toasts: Toasts;
  private letters: LetterInfo[] | null = null;
  private content: HTMLElement;
  private keyHandler = (event: KeyboardEvent) => {
    if (this.screen === "pembelajaran" && this.composer) {
      this.composer.handleKeydown(event);
    }
  };

  constructor(
    private doc: Document,
    private api: JawiApi,
    root: HTMLElement,
  ) {
    clear(root);
    this.content = el(doc, "main", {});
    root.append(this.content);
    this.toasts = new Toasts(doc, root);
    this.doc.addEventListener("keydown", this.keyHandler as EventListener);
    this.showSplash();
  }

  private swap(node: HTMLElement): void {
    clear(this.content);
    this.content.append(node);
  }

  private async loadLetters(): Promise<LetterInfo[]> {
    if (this.letters === null) {
      this.letters = await this.api.letters();
    }
    return this.letters;
  }

  showSplash(): void {
    this.screen = "splash";
    this.composer = null;
    this.swap(
      el(
        this.doc,
        "section",
        { className: "screen splash" },
        el(this.doc, "h1", { text: "Belajar Huruf Arab Melayu" }),
        el(this.doc, "button", {
          text: "Masuk",
          dataset: { testid: "enter" },
          onClick: () => this.showMenu(),
        }),
      ),
    );
  }

  showMenu(): void {
    this.screen = "menu";
    this.composer = null;
    this.swap(
      el(
        this.doc,
        "section",
        { className: "screen menu" },
        el(this.doc, "h1", { text: "Menu Utama" }),
        el(this.doc, "button", {
          text: "Pembelajaran",
          dataset: { testid: "menu-pembelajaran" },
          onClick: () => void this.showComposer(),
        }),
        el(this.doc, "button", {
          text: "Materi",
          dataset: { testid: "menu-materi" },
          onClick: () => void this.showMateri(),
        }),
        el(this.doc, "button", {
          text: "Keluar",
          dataset: { testid: "menu-keluar" },
          onClick: () => this.showSplash(),
        }),
      ),
    );
  }

  async showMateri(): Promise<void> {
    this.screen = "materi";
    this.composer = null;
    try {
      const letters = await this.loadLetters();
      this.swap(buildMateri(this.doc, letters, () => this.showMenu()));
    } catch (err) {
      this.swap(offlineBanner(this.doc, err, () => this.showMenu()));
    }
  }

  async showComposer(): Promise<void> {
    this.screen = "pembelajaran";
    try {
      const letters = await this.loadLetters();
      this.composer = new ComposerScreen(this.doc, this.api, letters, this.toasts, () =>
        this.showMenu(),
      );
      this.swap(this.composer.root);
    } catch (err) {
      this.composer = null;
      this.swap(offlineBanner(this.doc, err, () => this.showMenu()));
    }
  }
}

function offlineBanner(doc: Document, err: unknown, onMenu: () => void): HTMLElement {
  return el(
    doc,
    "section",
    { className: "screen offline" },
    el(doc, "p", {
      className: "banner",
      text: `Layanan tidak terjangkau: ${err instanceof Error ? err.message : String(err)}`,
    }),
    el(doc, "button", { text: "Menu utama", onClick: onMenu }),
  );
}

export function bootstrap(doc: Document, fetchFn?: typeof fetch): App {
  const root = doc.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const base = root.getAttribute("data-api-base") ?? "";
  const api = new ApiClient(base, fetchFn ?? ((...args) => fetch(...args)));
  return new App(doc, api, root as HTMLElement);
}

declare global {
  // the booted app, for the e2e driver
  var jawiApp: App | undefined;
}

if (typeof document !== "undefined" && document.getElementById("app")?.hasAttribute("data-autoboot")) {
  globalThis.jawiApp = bootstrap(document);
}
