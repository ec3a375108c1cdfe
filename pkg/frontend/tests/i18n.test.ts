// Locale direction and catalog plumbing.

import { beforeEach, describe, expect, it, vi } from "vitest";
import { applyDirection, direction, otherLocale, setCatalog, t } from "../src/i18n";

beforeEach(() => {
  sessionStorage.clear();
  vi.unstubAllGlobals();
});

describe("direction", () => {
  it("renders Kurdish right-to-left", () => {
    expect(direction("ku")).toBe("rtl");
  });

  it("renders English left-to-right", () => {
    expect(direction("en")).toBe("ltr");
  });

  it("applies direction and lang to the document", () => {
    applyDirection("ku");
    expect(document.documentElement.dir).toBe("rtl");
    expect(document.documentElement.lang).toBe("ku");
    applyDirection("en");
    expect(document.documentElement.dir).toBe("ltr");
    expect(document.documentElement.lang).toBe("en");
  });

  it("setCatalog flips the document direction with the locale", () => {
    setCatalog("ku", {});
    expect(document.documentElement.dir).toBe("rtl");
    setCatalog("en", {});
    expect(document.documentElement.dir).toBe("ltr");
  });
});

describe("catalog", () => {
  it("serves entries and persists the chosen locale", () => {
    setCatalog("ku", { "ui.login.title": "چوونەژوورەوە" });
    expect(t("ui.login.title")).toBe("چوونەژوورەوە");
    expect(sessionStorage.getItem("recordroute.locale")).toBe("ku");
  });

  it("renders the key itself when an entry is missing (visible defect)", () => {
    setCatalog("en", {});
    expect(t("ui.some.missing.key")).toBe("ui.some.missing.key");
  });

  it("toggles between the two supported locales", () => {
    expect(otherLocale("ku")).toBe("en");
    expect(otherLocale("en")).toBe("ku");
  });
});
