// Search (with the filter panel), the directed-jobs queue (polling), and
// the publish list with the outgoing register's column set.

import type { ApplicationOut, FilterParams, PublishRowOut } from "../api";
import { clear, h } from "../dom";
import { t } from "../i18n";
import { session } from "../state";
import { handleApiFailure, type AppContext, type Cleanup } from "../router";
import { errorBox, paginationBar, table } from "./tables";

const DIRECTED_POLL_MS = 30_000;

function subjectLink(appId: string, subject: string): HTMLElement {
  return h("a", { href: `#/app/${appId}`, class: "subject-link" }, subject);
}

function applicationRow(app: ApplicationOut): HTMLElement {
  const row = h("tr", {});
  row.append(
    h("td", {}, String(app.year)),
    h("td", {}, String(app.incoming_number)),
    h("td", {}, String(app.type_code)),
    h("td", {}, subjectLink(app.app_id, app.subject)),
    h("td", {}, app.person_name),
    h("td", {}, app.incoming_date),
    h("td", {}, t(`ui.status.${app.status}`)),
  );
  return row;
}

const APPLICATION_HEADERS = () => [
  t("ui.columns.year"),
  t("ui.columns.incoming_number"),
  t("ui.columns.department_code"),
  t("ui.columns.subject"),
  t("ui.columns.person_name"),
  t("ui.columns.incoming_date"),
  t("ui.columns.status"),
];

function filterPanel(onApply: (filter: FilterParams) => void): HTMLElement {
  const year = h("input", { type: "text", "data-filter": "year", inputmode: "numeric" }) as HTMLInputElement;
  const typeCode = h("input", { type: "text", "data-filter": "type_code", inputmode: "numeric" }) as HTMLInputElement;
  const subject = h("input", { type: "text", "data-filter": "subject_contains" }) as HTMLInputElement;
  const person = h("input", { type: "text", "data-filter": "person_contains" }) as HTMLInputElement;
  const number = h("input", { type: "text", "data-filter": "incoming_number", inputmode: "numeric" }) as HTMLInputElement;
  const dateFrom = h("input", { type: "date", "data-filter": "date_from" }) as HTMLInputElement;
  const dateTo = h("input", { type: "date", "data-filter": "date_to" }) as HTMLInputElement;

  const row = (labelKey: string, control: HTMLElement) =>
    h("div", { class: "form-row" }, h("label", {}, t(labelKey)), control);

  const panel = h(
    "form",
    { class: "filter-panel", hidden: true },
    row("ui.columns.year", year),
    row("ui.columns.department_code", typeCode),
    row("ui.columns.subject", subject),
    row("ui.columns.person_name", person),
    row("ui.columns.incoming_number", number),
    row("ui.form.external_publish_date", dateFrom),
    row("ui.form.external_publish_date", dateTo),
    h("button", { type: "submit" }, t("ui.filter.apply")),
  );

  panel.addEventListener("submit", (event) => {
    event.preventDefault();
    const filter: FilterParams = {};
    if (year.value.trim()) filter.year = Number(year.value);
    if (typeCode.value.trim()) filter.type_code = Number(typeCode.value);
    if (subject.value) filter.subject_contains = subject.value;
    if (person.value) filter.person_contains = person.value;
    if (number.value.trim()) filter.incoming_number = Number(number.value);
    if (dateFrom.value) filter.date_from = dateFrom.value;
    if (dateTo.value) filter.date_to = dateTo.value;
    onApply(filter);
  });
  return panel;
}

export async function searchView(ctx: AppContext): Promise<void> {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const results = h("div", { class: "results" });
  let currentFilter: FilterParams = {};

  const panel = filterPanel((filter) => void load({ ...filter, page: 0 }));
  const showAll = h("button", { type: "button", class: "show-all" }, t("ui.filter.show_all"));
  showAll.addEventListener("click", () => void load({ page: 0 }));
  const showFilter = h("button", { type: "button", class: "show-filter" }, t("ui.filter.show_filter"));
  showFilter.addEventListener("click", () => {
    panel.hidden = !panel.hidden;
  });

  async function load(filter: FilterParams): Promise<void> {
    currentFilter = filter;
    try {
      const page = await ctx.api.applications(filter);
      clear(results as HTMLElement);
      results.append(
        table(APPLICATION_HEADERS(), page.items.map(applicationRow)),
        paginationBar(page, (target) => void load({ ...currentFilter, page: target })),
      );
    } catch (err) {
      if (handleApiFailure(ctx, err)) return;
      clear(results as HTMLElement);
      results.append(errorBox(err instanceof Error ? err.message : String(err)));
    }
  }

  view.append(
    h("h2", {}, t("ui.nav.search")),
    h("div", { class: "list-controls" }, showAll, showFilter),
    panel,
    results,
  );
  await load({});
}

export function directedView(ctx: AppContext): Cleanup | void {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const active = session();
  if (!active) return;
  const results = h("div", { class: "results" });
  view.append(h("h2", {}, t("ui.nav.directed")), results);

  let currentPage = 0;
  async function load(): Promise<void> {
    try {
      const page = await ctx.api.directed(active!.department.dept_id, currentPage);
      clear(results as HTMLElement);
      results.append(
        table(APPLICATION_HEADERS(), page.items.map(applicationRow)),
        paginationBar(page, (target) => {
          currentPage = target;
          void load();
        }),
      );
    } catch (err) {
      if (handleApiFailure(ctx, err)) return;
      clear(results as HTMLElement);
      results.append(errorBox(err instanceof Error ? err.message : String(err)));
    }
  }

  void load();
  // Clerks keep this page open; poll so newly routed work shows up on its own.
  const timer = window.setInterval(() => void load(), DIRECTED_POLL_MS);
  return () => window.clearInterval(timer);
}

function publishRow(row: PublishRowOut): HTMLElement {
  const tr = h("tr", {});
  tr.append(
    h("td", {}, String(row.year)),
    h("td", {}, String(row.type_code)),
    h("td", {}, subjectLink(row.app_id, row.subject)),
    h("td", {}, row.person_name),
    h("td", {}, row.date_of_signature),
    h("td", {}, row.publish_date),
    h("td", {}, String(row.publish_no)),
    h("td", {}, row.office_goto),
  );
  return tr;
}

export async function publishListView(ctx: AppContext): Promise<void> {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const results = h("div", { class: "results" });
  let currentFilter: FilterParams = {};

  const headers = () => [
    t("ui.columns.year"),
    t("ui.columns.department_code"),
    t("ui.columns.subject"),
    t("ui.columns.person_name"),
    t("ui.columns.date_of_signature"),
    t("ui.columns.publish_date"),
    t("ui.columns.publish_no"),
    t("ui.columns.office_goto"),
  ];

  const panel = filterPanel((filter) => void load({ ...filter, page: 0 }));
  const showAll = h("button", { type: "button", class: "show-all" }, t("ui.filter.show_all"));
  showAll.addEventListener("click", () => void load({ page: 0 }));
  const showFilter = h("button", { type: "button", class: "show-filter" }, t("ui.filter.show_filter"));
  showFilter.addEventListener("click", () => {
    panel.hidden = !panel.hidden;
  });

  async function load(filter: FilterParams): Promise<void> {
    currentFilter = filter;
    try {
      const page = await ctx.api.published(filter);
      clear(results as HTMLElement);
      results.append(
        table(headers(), page.items.map(publishRow)),
        paginationBar(page, (target) => void load({ ...currentFilter, page: target })),
      );
    } catch (err) {
      if (handleApiFailure(ctx, err)) return;
      clear(results as HTMLElement);
      results.append(errorBox(err instanceof Error ? err.message : String(err)));
    }
  }

  view.append(
    h("h2", {}, t("ui.nav.publish_list")),
    h("div", { class: "list-controls" }, showAll, showFilter),
    panel,
    results,
  );
  await load({});
}
