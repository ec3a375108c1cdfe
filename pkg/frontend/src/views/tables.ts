// Shared table + pagination chrome (First / Previous / Next / Last).

import { h } from "../dom";
import { t } from "../i18n";

export interface Paged {
  total_count: number;
  page: number;
  page_size: number;
}

export function paginationBar(page: Paged, goto: (page: number) => void): HTMLElement {
  const lastPage = Math.max(0, Math.ceil(page.total_count / page.page_size) - 1);
  const nav = h("nav", { class: "pagination" });
  const button = (label: string, target: number, disabled: boolean) => {
    const el = h("button", { type: "button", class: "page-btn" }, label) as HTMLButtonElement;
    el.disabled = disabled;
    el.addEventListener("click", () => goto(target));
    return el;
  };
  nav.append(
    button(t("ui.pagination.first"), 0, page.page === 0),
    button(t("ui.pagination.previous"), Math.max(0, page.page - 1), page.page === 0),
    h("span", { class: "page-indicator" }, `${page.page + 1} / ${lastPage + 1}`),
    button(t("ui.pagination.next"), Math.min(lastPage, page.page + 1), page.page >= lastPage),
    button(t("ui.pagination.last"), lastPage, page.page >= lastPage),
  );
  return nav;
}

export function table(headers: string[], rows: HTMLElement[]): HTMLElement {
  const head = h("tr", {});
  for (const header of headers) head.append(h("th", {}, header));
  const body = h("tbody", {});
  for (const row of rows) body.append(row);
  if (rows.length === 0) {
    const empty = h("tr", {});
    empty.append(h("td", { colspan: String(headers.length), class: "empty" }, t("ui.empty")));
    body.append(empty);
  }
  return h("table", { class: "records" }, h("thead", {}, head), body);
}

export function errorBox(message: string): HTMLElement {
  return h("p", { class: "error-box", role: "alert" }, message);
}
