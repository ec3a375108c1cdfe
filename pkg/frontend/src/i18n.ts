// Locale handling. Catalogs come from the service (single source of truth
// for every label and error text); the client only decides direction and
// remembers the choice for the session.

export const SUPPORTED_LOCALES = ["ku", "en"] as const;
export type Locale = (typeof SUPPORTED_LOCALES)[number];
export const RTL_LOCALES: readonly string[] = ["ku"];

const STORAGE_KEY = "recordroute.locale";

let currentLocale: Locale = "ku";
let entries: Record<string, string> = {};

export function getLocale(): Locale {
  return currentLocale;
}

export function restoreLocale(): Locale {
  const saved = sessionStorage.getItem(STORAGE_KEY);
  if (saved && (SUPPORTED_LOCALES as readonly string[]).includes(saved)) {
    currentLocale = saved as Locale;
  }
  return currentLocale;
}

export function setCatalog(locale: Locale, catalogEntries: Record<string, string>): void {
  currentLocale = locale;
  entries = catalogEntries;
  sessionStorage.setItem(STORAGE_KEY, locale);
  applyDirection(locale);
}

export function direction(locale: string): "rtl" | "ltr" {
  return RTL_LOCALES.includes(locale) ? "rtl" : "ltr";
}

export function applyDirection(locale: string): void {
  document.documentElement.dir = direction(locale);
  document.documentElement.lang = locale;
}

export function otherLocale(locale: Locale): Locale {
  return locale === "ku" ? "en" : "ku";
}

// A missing key is a build defect (catalog parity is enforced server-side);
// render the key itself so the defect is visible instead of invisible.
export function t(key: string): string {
  return entries[key] ?? key;
}
