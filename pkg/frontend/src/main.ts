// Application shell: loads the catalog, restores the session, renders the
// chrome (nav + locale toggle), and mounts the route table.

import { ApiClient } from "./api";
import { clear, h } from "./dom";
import { getLocale, otherLocale, restoreLocale, setCatalog, t, type Locale } from "./i18n";
import { clearRoutes, navigate, route, startRouter, type AppContext } from "./router";
import { restoreSession, session, setSession } from "./state";
import { detailView } from "./views/detail";
import { insertView } from "./views/insert";
import { directedView, publishListView, searchView } from "./views/lists";
import { loginView } from "./views/login";
import { newsView } from "./views/news";
import { deniedView, homeView, indexView } from "./views/simple";

async function loadLocale(api: ApiClient, locale: Locale): Promise<void> {
  const catalog = await api.catalog(locale);
  setCatalog(locale, catalog.entries);
}

export async function boot(api: ApiClient, rootEl: HTMLElement): Promise<AppContext> {
  clear(rootEl);
  const chrome = h("header", { id: "chrome" });
  const view = h("main", { id: "view" });
  rootEl.append(chrome, view);

  await loadLocale(api, restoreLocale());
  restoreSession(api);

  const ctx: AppContext = {
    api,
    root: rootEl,
    refreshChrome: () => renderChrome(ctx, chrome),
  };

  clearRoutes();
  route("/", indexView);
  route("/login", loginView);
  route("/denied", deniedView);
  route("/dept", homeView, { auth: true });
  route("/dept/search", searchView, { auth: true });
  route("/dept/directed", directedView, { auth: true });
  route("/dept/insert", insertView, { auth: true });
  route("/dept/publish-list", publishListView, { auth: true });
  route("/dept/news", newsView, { auth: true });
  route("/app/:id", detailView, { auth: true });

  renderChrome(ctx, chrome);
  startRouter(ctx);
  return ctx;
}

function renderChrome(ctx: AppContext, chrome: HTMLElement): void {
  clear(chrome);
  const title = h("a", { href: "#/", class: "brand" }, t("ui.app_title"));
  const right = h("div", { class: "chrome-right" });

  const toggle = h("button", { type: "button", class: "locale-toggle" }, t("ui.locale.toggle"));
  toggle.addEventListener("click", () => {
    void loadLocale(ctx.api, otherLocale(getLocale())).then(() => {
      ctx.refreshChrome();
      navigate(location.hash || "#/");
    });
  });
  right.append(toggle);

  const active = session();
  if (active) {
    const nav = h("nav", { class: "main-nav" });
    nav.append(
      h("a", { href: "#/dept" }, t("ui.home.title")),
      h("a", { href: "#/dept/search" }, t("ui.nav.search")),
      h("a", { href: "#/dept/directed" }, t("ui.nav.directed")),
      h("a", { href: "#/dept/publish-list" }, t("ui.nav.publish_list")),
      h("a", { href: "#/dept/news" }, t("ui.nav.news")),
    );
    const who = h("span", { class: "whoami" }, `${active.user.username} @ ${active.department.name}`);
    const logout = h("button", { type: "button", class: "logout-btn" }, t("ui.logout"));
    logout.addEventListener("click", () => {
      void ctx.api
        .logout()
        .catch(() => undefined)
        .then(() => {
          setSession(null, ctx.api);
          ctx.refreshChrome();
          navigate("#/login");
        });
    });
    right.append(who, logout);
    chrome.append(title, nav, right);
  } else {
    chrome.append(title, right);
  }
}

declare global {
  interface Window {
    RECORDROUTE_API?: string;
  }
}

const rootElement = document.getElementById("app");
if (rootElement && import.meta.env.MODE !== "test") {
  const base = window.RECORDROUTE_API ?? "";
  void boot(new ApiClient(base), rootElement);
}
