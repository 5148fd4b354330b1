// Tiny DOM helpers; the app builds its UI with plain elements.

export interface ElAttrs {
  className?: string;
  text?: string;
  dir?: "rtl" | "ltr";
  title?: string;
  disabled?: boolean;
  dataset?: Record<string, string>;
  onClick?: (event: Event) => void;
}

export function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  attrs: ElAttrs = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (attrs.className) node.className = attrs.className;
  if (attrs.text !== undefined) node.textContent = attrs.text;
  if (attrs.dir) node.setAttribute("dir", attrs.dir);
  if (attrs.title) node.title = attrs.title;
  if (attrs.disabled && "disabled" in node) {
    (node as HTMLButtonElement).disabled = true;
  }
  if (attrs.dataset) {
    for (const [key, value] of Object.entries(attrs.dataset)) {
      node.setAttribute(`data-${key}`, value);
    }
  }
  if (attrs.onClick) node.addEventListener("click", attrs.onClick);
  for (const child of children) {
    node.append(typeof child === "string" ? doc.createTextNode(child) : child);
  }
  return node;
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

/** Dismissible error toasts; click one to dismiss it. */
export class Toasts {
  readonly root: HTMLElement;

  constructor(private doc: Document, parent: Element) {
    this.root = el(doc, "div", { className: "toasts" });
    parent.append(this.root);
  }

  show(message: string): void {
    const toast = el(this.doc, "div", {
      className: "toast",
      text: message,
      onClick: () => toast.remove(),
    });
    this.root.append(toast);
  }

  get count(): number {
    return this.root.children.length;
  }
}
