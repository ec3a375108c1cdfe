// Test harness: an in-memory fake of the service API behind global fetch,
// just enough state for the views under test. The real contract is
// exercised separately against a live instance (live.test.ts).

import { vi } from "vitest";
import { ApiClient } from "../src/api";
import { boot } from "../src/main";
import type { AppContext } from "../src/router";

export interface FakeRecord {
  app_id: string;
  year: number;
  incoming_number: number;
  type_code: number;
  external_publish_no: string | null;
  external_publish_date: string | null;
  office_of_origin: string;
  subject: string;
  person_name: string;
  notes: string;
  incoming_date: string;
  current_location: string;
  status: string;
  attachment_id: string | null;
}

const DEPARTMENTS = [
  { dept_id: "d-admin", code: 1, name: "Administration", kind: "admin" },
  { dept_id: "d-in", code: 10, name: "Incoming Archive", kind: "incoming_archive" },
  { dept_id: "d-out", code: 20, name: "Outgoing", kind: "outgoing" },
  { dept_id: "d-31", code: 31, name: "Engineering", kind: "functional" },
];

// Minimal bilingual catalog: tests assert structure and codes, not prose;
// the live suite checks the real catalogs.
function makeCatalog(locale: string): Record<string, string> {
  const access = locale === "ku" ? "ڕێگەپێدان ڕەتکرایەوە" : "Access denied";
  return {
    "error.ACCESS_DENIED_IP": access,
    "error.DUPLICATE_INCOMING_NUMBER": locale === "ku" ? "ژمارە دووبارەیە" : "Duplicate number",
    "ui.denied.title": access,
    "ui.denied.body": locale === "ku" ? "لەم کۆمپیوتەرەوە نا" : "Not from this computer",
  };
}

export interface FakeApi {
  records: FakeRecord[];
  loginResponses: Array<{ status: number; body: unknown }>;
  requests: Array<{ method: string; url: string; body: unknown }>;
  failNext: { status: number; body: unknown } | null;
  user: { user_id: string; username: string; dept_id: string; role: string };
  department: (typeof DEPARTMENTS)[number];
}

export function installFakeApi(overrides: Partial<FakeApi> = {}): FakeApi {
  const fake: FakeApi = {
    records: [],
    loginResponses: [],
    requests: [],
    failNext: null,
    user: { user_id: "u-in", username: "inbox1", dept_id: "d-in", role: "clerk" },
    department: DEPARTMENTS[1],
    ...overrides,
  };

  let nextId = 1;

  const json = (body: unknown, status = 200) =>
    new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  const error = (status: number, code: string, message = code) =>
    json({ code, message_key: `error.${code}`, message, detail: null }, status);

  vi.stubGlobal("fetch", async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = (init?.method ?? "GET").toUpperCase();
    let body: unknown = null;
    if (typeof init?.body === "string") {
      try {
        body = JSON.parse(init.body);
      } catch {
        body = init.body;
      }
    }
    fake.requests.push({ method, url, body });

    if (fake.failNext) {
      const planned = fake.failNext;
      fake.failNext = null;
      return json(planned.body, planned.status);
    }

    const path = url.split("?")[0];
    const query = new URLSearchParams(url.split("?")[1] ?? "");

    if (path.startsWith("/api/i18n/")) {
      const locale = path.split("/").pop()!;
      return json({ locale, entries: makeCatalog(locale) });
    }
    if (path === "/api/login" && method === "POST") {
      const planned = fake.loginResponses.shift();
      if (planned) return json(planned.body, planned.status);
      return json({
        token: "fake-token",
        expires_at: "2030-01-01T00:00:00+00:00",
        user: fake.user,
      });
    }
    if (path === "/api/logout") return json({ ok: true });
    if (path === "/api/me") return json({ user: fake.user, department: fake.department });
    if (path === "/api/departments") return json(DEPARTMENTS);
    if (path === "/api/applications" && method === "POST") {
      const draft = body as Record<string, unknown>;
      const duplicate = fake.records.find(
        (r) => r.year === draft.year && r.incoming_number === draft.incoming_number,
      );
      if (duplicate) return error(409, "DUPLICATE_INCOMING_NUMBER", "duplicate");
      const record: FakeRecord = {
        app_id: `app-${nextId++}`,
        year: draft.year as number,
        incoming_number: draft.incoming_number as number,
        type_code: draft.type_code as number,
        external_publish_no: (draft.external_publish_no as string) ?? null,
        external_publish_date: (draft.external_publish_date as string) ?? null,
        office_of_origin: (draft.office_of_origin as string) ?? "",
        subject: draft.subject as string,
        person_name: (draft.person_name as string) ?? "",
        notes: (draft.notes as string) ?? "",
        incoming_date: draft.incoming_date as string,
        current_location: (draft.directed_to as string) || "d-in",
        status: draft.directed_to ? "directed" : "registered",
        attachment_id: null,
      };
      fake.records.push(record);
      return json(record, 201);
    }
    if (path === "/api/applications" && method === "GET") {
      let items = [...fake.records];
      if (query.get("year")) items = items.filter((r) => r.year === Number(query.get("year")));
      if (query.get("subject_contains"))
        items = items.filter((r) => r.subject.includes(query.get("subject_contains")!));
      return json({ items, total_count: items.length, page: 0, page_size: 20 });
    }
    const appMatch = path.match(/^\/api\/applications\/([^/]+)$/);
    if (appMatch && method === "GET") {
      const record = fake.records.find((r) => r.app_id === appMatch[1]);
      return record ? json(record) : error(404, "NOT_FOUND");
    }
    const eventsMatch = path.match(/^\/api\/applications\/([^/]+)\/events$/);
    if (eventsMatch) {
      return json([
        {
          event_id: "e1",
          app_id: eventsMatch[1],
          seq: 1,
          kind: "registered",
          from_dept: null,
          to_dept: "d-in",
          actor: "u-in",
          at: "2009-09-01T08:00:00+00:00",
          note: "",
        },
      ]);
    }
    if (path === "/api/published") return json({ items: [], total_count: 0, page: 0, page_size: 20 });
    if (path === "/api/news") return json({ items: [], total_count: 0, page: 0, page_size: 20 });
    const directedMatch = path.match(/^\/api\/departments\/([^/]+)\/directed$/);
    if (directedMatch) {
      const items = fake.records.filter(
        (r) => r.current_location === directedMatch[1] && r.status !== "published",
      );
      return json({ items, total_count: items.length, page: 0, page_size: 20 });
    }
    return error(404, "NOT_FOUND", `no fake for ${method} ${path}`);
  });
  return fake;
}

export async function bootApp(): Promise<AppContext> {
  document.body.innerHTML = '<div id="app"></div>';
  sessionStorage.clear();
  location.hash = "";
  const api = new ApiClient("");
  return await boot(api, document.getElementById("app") as HTMLElement);
}

export async function bootLoggedIn(
  overrides: Partial<FakeApi> = {},
): Promise<{ ctx: AppContext; fake: FakeApi }> {
  const fake = installFakeApi(overrides);
  sessionStorage.setItem(
    "recordroute.session",
    JSON.stringify({ token: "fake-token", user: fake.user, department: fake.department }),
  );
  document.body.innerHTML = '<div id="app"></div>';
  location.hash = "";
  const api = new ApiClient("");
  const ctx = await boot(api, document.getElementById("app") as HTMLElement);
  return { ctx, fake };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
