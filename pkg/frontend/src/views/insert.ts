// The insert page: exactly the thirteen input elements of the paper form
// (three date selectors, incoming number, type, external publish no/date,
// office, subject, person, notes, directed-to, file), plus the OK button.
// Client-side validation mirrors the server rules; an invalid form sends
// no request at all.

import { ApiError, type DepartmentOut } from "../api";
import { clear, h } from "../dom";
import { t } from "../i18n";
import { session } from "../state";
import { handleApiFailure, navigate, type AppContext } from "../router";
import { errorBox } from "./tables";

function select(field: string, options: Array<[string, string]>): HTMLSelectElement {
  const el = h("select", { class: "insert-field", "data-field": field }) as HTMLSelectElement;
  for (const [value, label] of options) el.append(h("option", { value }, label));
  return el;
}

function labeled(labelKey: string, control: HTMLElement): HTMLElement {
  return h("div", { class: "form-row" }, h("label", {}, t(labelKey)), control);
}

export async function insertView(ctx: AppContext): Promise<void> {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const active = session();
  if (!active) return;
  if (active.department.kind !== "incoming_archive") {
    view.append(errorBox(t("error.WRONG_DEPARTMENT")));
    return;
  }
  const departments = await ctx.api.departments();

  const now = new Date();
  const years: Array<[string, string]> = [];
  for (let y = now.getFullYear() + 1; y >= 2000; y--) years.push([String(y), String(y)]);
  const months: Array<[string, string]> = [];
  for (let m = 1; m <= 12; m++) months.push([String(m), String(m)]);
  const days: Array<[string, string]> = [];
  for (let d = 1; d <= 31; d++) days.push([String(d), String(d)]);

  const yearSel = select("year", years);
  const monthSel = select("month", months);
  const daySel = select("day", days);
  const incomingNumber = h("input", {
    class: "insert-field",
    "data-field": "incoming_number",
    type: "text",
    inputmode: "numeric",
  }) as HTMLInputElement;
  const typeSel = select(
    "type_code",
    departments.map((d: DepartmentOut) => [String(d.code), `${d.code} — ${d.name}`]),
  );
  const externalNo = h("input", {
    class: "insert-field",
    "data-field": "external_publish_no",
    type: "text",
  }) as HTMLInputElement;
  const externalDate = h("input", {
    class: "insert-field",
    "data-field": "external_publish_date",
    type: "date",
  }) as HTMLInputElement;
  const office = h("input", {
    class: "insert-field",
    "data-field": "office_of_origin",
    type: "text",
  }) as HTMLInputElement;
  const subject = h("input", {
    class: "insert-field",
    "data-field": "subject",
    type: "text",
  }) as HTMLInputElement;
  const person = h("input", {
    class: "insert-field",
    "data-field": "person_name",
    type: "text",
  }) as HTMLInputElement;
  const notes = h("textarea", {
    class: "insert-field",
    "data-field": "notes",
  }) as HTMLTextAreaElement;
  const directedTo = select("directed_to", [
    ["", "—"],
    ...departments
      .filter((d) => d.dept_id !== active.department.dept_id)
      .map((d): [string, string] => [d.dept_id, `${d.code} — ${d.name}`]),
  ]);
  const file = h("input", {
    class: "insert-field",
    "data-field": "attachment",
    type: "file",
  }) as HTMLInputElement;

  const feedback = h("div", { class: "form-feedback" });
  const form = h(
    "form",
    { class: "insert-form" },
    labeled("ui.form.year", yearSel),
    labeled("ui.form.month", monthSel),
    labeled("ui.form.day", daySel),
    labeled("ui.form.incoming_number", incomingNumber),
    labeled("ui.form.type_code", typeSel),
    labeled("ui.form.external_publish_no", externalNo),
    labeled("ui.form.external_publish_date", externalDate),
    labeled("ui.form.office_of_origin", office),
    labeled("ui.form.subject", subject),
    labeled("ui.form.person_name", person),
    labeled("ui.form.notes", notes),
    labeled("ui.form.directed_to", directedTo),
    labeled("ui.form.attachment", file),
    h("button", { type: "submit", class: "submit-btn" }, t("ui.form.submit")),
    feedback,
  );

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submit();
  });

  async function submit(): Promise<void> {
    clear(feedback as HTMLElement);
    const problems: string[] = [];
    if (!subject.value.trim()) problems.push(t("ui.form.subject_required"));
    const numberValue = Number(incomingNumber.value);
    if (!/^\d+$/.test(incomingNumber.value.trim()) || numberValue < 1) {
      problems.push(t("ui.form.number_numeric"));
    }
    if (problems.length > 0) {
      for (const problem of problems) feedback.append(errorBox(problem));
      return;
    }
    const month = String(monthSel.value).padStart(2, "0");
    const day = String(daySel.value).padStart(2, "0");
    try {
      const created = await ctx.api.register({
        year: Number(yearSel.value),
        incoming_number: numberValue,
        type_code: Number(typeSel.value),
        office_of_origin: office.value,
        subject: subject.value,
        person_name: person.value,
        incoming_date: `${yearSel.value}-${month}-${day}`,
        notes: notes.value,
        external_publish_no: externalNo.value || null,
        external_publish_date: externalDate.value || null,
        directed_to: directedTo.value || null,
      });
      const chosen = file.files && file.files[0];
      if (chosen) {
        await ctx.api.uploadAttachment(
          created.app_id,
          chosen.name,
          chosen.type || "application/octet-stream",
          await chosen.arrayBuffer(),
        );
      }
      navigate(`#/app/${created.app_id}`);
    } catch (err) {
      if (handleApiFailure(ctx, err)) return;
      if (err instanceof ApiError) feedback.append(errorBox(err.message));
      else throw err;
    }
  }

  view.append(h("h2", {}, t("ui.nav.insert")), form);
}
