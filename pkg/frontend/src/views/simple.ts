// Index (level 1), department home (level 2), and the denial page.

import { clear, h } from "../dom";
import { t } from "../i18n";
import { getDenialMessage, type AppContext } from "../router";
import { isIncomingArchive, session } from "../state";

export function indexView(ctx: AppContext): void {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  view.append(
    h("h2", {}, t("ui.app_title")),
    h("p", { class: "welcome" }, t("ui.index.welcome")),
    session()
      ? h("a", { href: "#/dept", class: "enter-link" }, t("ui.home.title"))
      : h("a", { href: "#/login", class: "enter-link" }, t("ui.login.title")),
  );
}

export function homeView(ctx: AppContext): void {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const active = session();
  if (!active) return;
  const links = h("ul", { class: "function-links" });
  const add = (href: string, labelKey: string) =>
    links.append(h("li", {}, h("a", { href }, t(labelKey))));
  add("#/dept/search", "ui.nav.search");
  add("#/dept/directed", "ui.nav.directed");
  if (isIncomingArchive(active)) add("#/dept/insert", "ui.nav.insert");
  add("#/dept/publish-list", "ui.nav.publish_list");
  add("#/dept/news", "ui.nav.news");
  view.append(
    h("h2", {}, `${active.department.code} — ${active.department.name}`),
    h("p", { class: "home-subtitle" }, t("ui.home.title")),
    links,
  );
}

export function deniedView(ctx: AppContext): void {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const serverMessage = getDenialMessage();
  view.append(
    h(
      "div",
      { class: "denial-page", role: "alert" },
      h("h2", {}, t("ui.denied.title")),
      h("p", {}, t("ui.denied.body")),
      serverMessage ? h("p", { class: "denial-detail" }, serverMessage) : null,
      h("a", { href: "#/login" }, t("ui.denied.back")),
    ),
  );
}
