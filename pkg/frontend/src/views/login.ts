// Login page. A wrong-machine denial is not an inline message: it routes
// to the dedicated denial page, mirroring the service's distinct response.

import { ApiError } from "../api";
import { clear, h } from "../dom";
import { t } from "../i18n";
import { navigate, setDenialMessage, type AppContext } from "../router";
import { setSession } from "../state";
import { errorBox } from "./tables";

export function loginView(ctx: AppContext): void {
  const view = ctx.root.querySelector("#view") as HTMLElement;
  clear(view);
  const username = h("input", { type: "text", name: "username", autocomplete: "username" }) as HTMLInputElement;
  const password = h("input", { type: "password", name: "password", autocomplete: "current-password" }) as HTMLInputElement;
  const feedback = h("div", { class: "form-feedback" });
  const form = h(
    "form",
    { class: "login-form" },
    h("div", { class: "form-row" }, h("label", {}, t("ui.login.username")), username),
    h("div", { class: "form-row" }, h("label", {}, t("ui.login.password")), password),
    h("button", { type: "submit" }, t("ui.login.submit")),
    feedback,
  );
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submit();
  });

  async function submit(): Promise<void> {
    clear(feedback as HTMLElement);
    try {
      const response = await ctx.api.login(username.value, password.value);
      ctx.api.token = response.token;
      const me = await ctx.api.me();
      setSession({ token: response.token, user: me.user, department: me.department }, ctx.api);
      ctx.refreshChrome();
      navigate("#/dept");
    } catch (err) {
      if (err instanceof ApiError) {
        if (err.code === "ACCESS_DENIED_IP") {
          setDenialMessage(err.message);
          navigate("#/denied");
          return;
        }
        feedback.append(errorBox(err.message));
        return;
      }
      throw err;
    }
  }

  view.append(h("h2", {}, t("ui.login.title")), form);
}
