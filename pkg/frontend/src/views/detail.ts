// Application detail: fields, the full routing trail (tracking view), and
// the actions a clerk may attempt. The server is the judge of who may do
// what; its refusals render localized.

import { ApiError, type ApplicationOut, type DepartmentOut, type EventOut } from "../api";
import { clear, h } from "../dom";
import { t } from "../i18n";
import { handleApiFailure, navigate, type AppContext } from "../router";
import { errorBox } from "./tables";

function trailEntry(event: EventOut, deptName: (id: string | null) => string): HTMLElement {
  const what = t(`ui.track.${event.kind}`);
  let movement = "";
  if (event.kind === "redirected") movement = `${deptName(event.from_dept)} ← → ${deptName(event.to_dept)}`;
  else if (event.kind === "registered") movement = deptName(event.to_dept);
  return h(
    "li",
    { class: `trail-${event.kind}` },
    h("span", { class: "trail-kind" }, `${event.seq}. ${what}`),
    h("span", { class: "trail-move" }, movement),
    h("span", { class: "trail-note" }, event.note),
    h("span", { class: "trail-at" }, event.at),
  );
}

export async function detailView(ctx: AppContext, params: Record<string, string>): Promise<void> {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const [app, events, departments] = await Promise.all([
    ctx.api.application(params.id),
    ctx.api.events(params.id),
    ctx.api.departments(),
  ]);
  const byId = new Map(departments.map((d: DepartmentOut) => [d.dept_id, d]));
  const deptName = (id: string | null) => (id && byId.get(id) ? `${byId.get(id)!.name}` : "—");

  const feedback = h("div", { class: "form-feedback" });

  const fieldRows = (a: ApplicationOut) =>
    h(
      "dl",
      { class: "app-fields" },
      h("dt", {}, t("ui.columns.year")), h("dd", {}, String(a.year)),
      h("dt", {}, t("ui.columns.incoming_number")), h("dd", {}, String(a.incoming_number)),
      h("dt", {}, t("ui.columns.department_code")), h("dd", {}, String(a.type_code)),
      h("dt", {}, t("ui.columns.subject")), h("dd", {}, a.subject),
      h("dt", {}, t("ui.columns.person_name")), h("dd", {}, a.person_name),
      h("dt", {}, t("ui.form.office_of_origin")), h("dd", {}, a.office_of_origin),
      h("dt", {}, t("ui.form.notes")), h("dd", {}, a.notes),
      h("dt", {}, t("ui.columns.incoming_date")), h("dd", {}, a.incoming_date),
      h("dt", {}, t("ui.detail.status")), h("dd", {}, t(`ui.status.${a.status}`)),
      h("dt", {}, t("ui.detail.location")), h("dd", {}, deptName(a.current_location)),
    );

  async function act(action: () => Promise<unknown>): Promise<void> {
    clear(feedback as HTMLElement);
    try {
      await action();
      navigate(`#/app/${params.id}`);
    } catch (err) {
      if (handleApiFailure(ctx, err)) return;
      if (err instanceof ApiError) feedback.append(errorBox(err.message));
      else throw err;
    }
  }

  // update form (mutable fields only)
  const subject = h("input", { type: "text", value: app.subject, "data-edit": "subject" }) as HTMLInputElement;
  subject.value = app.subject;
  const person = h("input", { type: "text", "data-edit": "person_name" }) as HTMLInputElement;
  person.value = app.person_name;
  const office = h("input", { type: "text", "data-edit": "office_of_origin" }) as HTMLInputElement;
  office.value = app.office_of_origin;
  const notes = h("textarea", { "data-edit": "notes" }) as HTMLTextAreaElement;
  notes.value = app.notes;
  const updateForm = h(
    "form",
    { class: "update-form" },
    h("div", { class: "form-row" }, h("label", {}, t("ui.columns.subject")), subject),
    h("div", { class: "form-row" }, h("label", {}, t("ui.columns.person_name")), person),
    h("div", { class: "form-row" }, h("label", {}, t("ui.form.office_of_origin")), office),
    h("div", { class: "form-row" }, h("label", {}, t("ui.form.notes")), notes),
    h("button", { type: "submit" }, t("ui.detail.update")),
  );
  updateForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const changes: Record<string, unknown> = {};
    if (subject.value !== app.subject) changes.subject = subject.value;
    if (person.value !== app.person_name) changes.person_name = person.value;
    if (office.value !== app.office_of_origin) changes.office_of_origin = office.value;
    if (notes.value !== app.notes) changes.notes = notes.value;
    if (Object.keys(changes).length === 0) return;
    void act(() => ctx.api.update(params.id, changes));
  });

  // redirect form
  const destination = h("select", { class: "redirect-dest" }) as HTMLSelectElement;
  for (const dept of departments) {
    if (dept.dept_id === app.current_location) continue;
    destination.append(h("option", { value: dept.dept_id }, `${dept.code} — ${dept.name}`));
  }
  const note = h("input", { type: "text", class: "redirect-note" }) as HTMLInputElement;
  const redirectForm = h(
    "form",
    { class: "redirect-form" },
    h("div", { class: "form-row" }, h("label", {}, t("ui.detail.redirect")), destination),
    h("div", { class: "form-row" }, h("label", {}, t("ui.form.notes")), note),
    h("button", { type: "submit" }, t("ui.detail.redirect")),
  );
  redirectForm.addEventListener("submit", (event) => {
    event.preventDefault();
    void act(() => ctx.api.redirect(params.id, destination.value, note.value));
  });

  // publish form
  const signature = h("input", { type: "date", class: "publish-signature" }) as HTMLInputElement;
  const publishDate = h("input", { type: "date", class: "publish-date" }) as HTMLInputElement;
  const officeGoto = h("input", { type: "text", class: "publish-office" }) as HTMLInputElement;
  const publishForm = h(
    "form",
    { class: "publish-form" },
    h("div", { class: "form-row" }, h("label", {}, t("ui.columns.date_of_signature")), signature),
    h("div", { class: "form-row" }, h("label", {}, t("ui.columns.publish_date")), publishDate),
    h("div", { class: "form-row" }, h("label", {}, t("ui.columns.office_goto")), officeGoto),
    h("button", { type: "submit" }, t("ui.detail.publish")),
  );
  publishForm.addEventListener("submit", (event) => {
    event.preventDefault();
    void act(() =>
      ctx.api.publish(params.id, {
        date_of_signature: signature.value,
        publish_date: publishDate.value,
        office_goto: officeGoto.value,
      }),
    );
  });

  const trail = h("ol", { class: "trail" });
  for (const event of events) trail.append(trailEntry(event, deptName));

  const pieces: Array<Node | null> = [
    h("h2", {}, `${t("ui.detail.title")} ${app.year}/${app.incoming_number}`),
    fieldRows(app),
    app.attachment_id
      ? h("p", {}, h("a", { href: ctx.api.attachmentUrl(app.app_id), class: "attachment-link" }, t("ui.detail.attachment_download")))
      : null,
    h("h3", {}, t("ui.track.title")),
    trail,
    feedback,
    app.status !== "published" ? updateForm : null,
    app.status !== "published" ? redirectForm : null,
    app.status !== "published" ? publishForm : null,
  ];
  view.append(...pieces.filter((p): p is Node => p !== null));
}
