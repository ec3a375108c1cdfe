// Per-tab session state. The token lives in sessionStorage so a reload
// keeps the clerk logged in but closing the tab ends the session locally.

import type { ApiClient, DepartmentOut, UserOut } from "./api";

export interface SessionState {
  token: string;
  user: UserOut;
  department: DepartmentOut;
}

const STORAGE_KEY = "recordroute.session";

let current: SessionState | null = null;

export function session(): SessionState | null {
  return current;
}

export function setSession(state: SessionState | null, api: ApiClient): void {
  current = state;
  api.token = state?.token ?? null;
  if (state) sessionStorage.setItem(STORAGE_KEY, JSON.stringify(state));
  else sessionStorage.removeItem(STORAGE_KEY);
}

export function restoreSession(api: ApiClient): SessionState | null {
  const raw = sessionStorage.getItem(STORAGE_KEY);
  if (!raw) return null;
  try {
    current = JSON.parse(raw) as SessionState;
    api.token = current.token;
  } catch {
    sessionStorage.removeItem(STORAGE_KEY);
    current = null;
  }
  return current;
}

export function isIncomingArchive(state: SessionState): boolean {
  return state.department.kind === "incoming_archive";
}

export function isAdmin(state: SessionState): boolean {
  return state.user.role === "admin";
}
