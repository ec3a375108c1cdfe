// Announcement board: everyone reads; the add/delete controls are shown
// to admins (the server enforces regardless).

import { ApiError } from "../api";
import { clear, h } from "../dom";
import { t } from "../i18n";
import { handleApiFailure, type AppContext } from "../router";
import { isAdmin, session } from "../state";
import { errorBox, paginationBar } from "./tables";

export async function newsView(ctx: AppContext): Promise<void> {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const active = session();
  if (!active) return;
  const board = h("div", { class: "news-board" });
  const feedback = h("div", { class: "form-feedback" });
  let currentPage = 0;

  async function load(): Promise<void> {
    try {
      const page = await ctx.api.news(currentPage);
      clear(board as HTMLElement);
      if (page.items.length === 0) board.append(h("p", { class: "empty" }, t("ui.empty")));
      for (const item of page.items) {
        const entry = h(
          "article",
          { class: "news-item" },
          h("h3", {}, item.title),
          h("p", {}, item.body),
          h("time", {}, item.created_at),
        );
        if (isAdmin(active!)) {
          const del = h("button", { type: "button", class: "news-delete" }, t("ui.news.delete"));
          del.addEventListener("click", () => {
            void ctx.api
              .deleteNews(item.news_id)
              .then(load)
              .catch((err) => {
                if (!handleApiFailure(ctx, err) && err instanceof ApiError)
                  feedback.append(errorBox(err.message));
              });
          });
          entry.append(del);
        }
        board.append(entry);
      }
      board.append(paginationBar(page, (target) => {
        currentPage = target;
        void load();
      }));
    } catch (err) {
      if (handleApiFailure(ctx, err)) return;
      clear(board as HTMLElement);
      board.append(errorBox(err instanceof Error ? err.message : String(err)));
    }
  }

  view.append(h("h2", {}, t("ui.nav.news")), feedback, board);

  if (isAdmin(active)) {
    const title = h("input", { type: "text", class: "news-title" }) as HTMLInputElement;
    const body = h("textarea", { class: "news-body" }) as HTMLTextAreaElement;
    const form = h(
      "form",
      { class: "news-form" },
      h("div", { class: "form-row" }, h("label", {}, t("ui.news.title_label")), title),
      h("div", { class: "form-row" }, h("label", {}, t("ui.news.body_label")), body),
      h("button", { type: "submit" }, t("ui.news.add")),
    );
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      clear(feedback as HTMLElement);
      void ctx.api
        .addNews(title.value, body.value)
        .then(() => {
          title.value = "";
          body.value = "";
          return load();
        })
        .catch((err) => {
          if (!handleApiFailure(ctx, err) && err instanceof ApiError)
            feedback.append(errorBox(err.message));
        });
    });
    view.append(form);
  }
  await load();
}
