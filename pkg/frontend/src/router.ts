// Hash router mirroring the three-level site map: index, department home,
// and the per-department function pages. Guarded routes never render
// without a session; API denials funnel to the dedicated pages.

import type { ApiClient } from "./api";
import { ApiError } from "./api";
import { session, setSession } from "./state";

export interface AppContext {
  api: ApiClient;
  root: HTMLElement;
  refreshChrome: () => void;
}

export type Cleanup = () => void;
export type View = (
  ctx: AppContext,
  params: Record<string, string>,
) => Cleanup | void | Promise<Cleanup | void>;

interface RouteEntry {
  pattern: string;
  view: View;
  auth: boolean;
}

const routes: RouteEntry[] = [];
let activeCleanup: Cleanup | null = null;
let denialMessage = "";

export function route(pattern: string, view: View, options: { auth?: boolean } = {}): void {
  routes.push({ pattern, view, auth: options.auth ?? false });
}

export function clearRoutes(): void {
  routes.length = 0;
  if (activeCleanup) {
    activeCleanup();
    activeCleanup = null;
  }
}

export function navigate(hash: string): void {
  if (location.hash === hash) {
    void dispatch();
  } else {
    location.hash = hash;
  }
}

export function setDenialMessage(message: string): void {
  denialMessage = message;
}

export function getDenialMessage(): string {
  return denialMessage;
}

function match(path: string, pattern: string): Record<string, string> | null {
  const pathParts = path.split("/").filter(Boolean);
  const patternParts = pattern.split("/").filter(Boolean);
  if (pathParts.length !== patternParts.length) return null;
  const params: Record<string, string> = {};
  for (let i = 0; i < patternParts.length; i++) {
    const part = patternParts[i];
    if (part.startsWith(":")) params[part.slice(1)] = decodeURIComponent(pathParts[i]);
    else if (part !== pathParts[i]) return null;
  }
  return params;
}

let context: AppContext | null = null;
let listenerInstalled = false;

export function startRouter(ctx: AppContext): void {
  context = ctx;
  if (!listenerInstalled) {
    window.addEventListener("hashchange", () => void dispatch());
    listenerInstalled = true;
  }
  void dispatch();
}

export async function dispatch(): Promise<void> {
  if (!context) return;
  const path = location.hash.replace(/^#/, "") || "/";
  if (activeCleanup) {
    activeCleanup();
    activeCleanup = null;
  }
  for (const entry of routes) {
    const params = match(path, entry.pattern);
    if (!params) continue;
    if (entry.auth && !session()) {
      navigate("#/login");
      return;
    }
    context.refreshChrome();
    try {
      const cleanup = await entry.view(context, params);
      if (typeof cleanup === "function") activeCleanup = cleanup;
    } catch (err) {
      handleApiFailure(context, err);
    }
    return;
  }
  navigate("#/");
}

// Central mapping from API failures to navigation: the wrong-machine and
// wrong-section cases get their own page, a dead session goes back to login.
export function handleApiFailure(ctx: AppContext, err: unknown): boolean {
  if (err instanceof ApiError) {
    if (err.code === "ACCESS_DENIED_IP" || err.code === "WRONG_DEPARTMENT") {
      setDenialMessage(err.message);
      navigate("#/denied");
      return true;
    }
    if (err.code === "INVALID_SESSION") {
      setSession(null, ctx.api);
      navigate("#/login");
      return true;
    }
  }
  return false;
}
