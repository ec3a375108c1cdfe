// Typed client for the records-routing JSON API. The UI holds no business
// logic: every state change goes through these calls, and failures carry
// the server's stable machine code so views can branch without parsing text.

export interface ApiErrorBody {
  code: string;
  message_key: string;
  message: string;
  detail?: string | null;
}

export class ApiError extends Error {
  readonly code: string;
  readonly messageKey: string;
  readonly detail: string | null;
  readonly status: number;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.messageKey = body.message_key;
    this.detail = body.detail ?? null;
    this.status = status;
  }
}

export interface UserOut {
  user_id: string;
  username: string;
  dept_id: string;
  role: string;
}

export interface DepartmentOut {
  dept_id: string;
  code: number;
  name: string;
  kind: string;
}

export interface LoginResponse {
  token: string;
  expires_at: string;
  user: UserOut;
}

export interface MeOut {
  user: UserOut;
  department: DepartmentOut;
}

export interface ApplicationOut {
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

export interface EventOut {
  event_id: string;
  app_id: string;
  seq: number;
  kind: string;
  from_dept: string | null;
  to_dept: string | null;
  actor: string;
  at: string;
  note: string;
}

export interface PublishRowOut {
  app_id: string;
  year: number;
  type_code: number;
  subject: string;
  person_name: string;
  date_of_signature: string;
  publish_date: string;
  publish_no: number;
  office_goto: string;
}

export interface NewsOut {
  news_id: string;
  title: string;
  body: string;
  author: string;
  created_at: string;
}

export interface Page<T> {
  items: T[];
  total_count: number;
  page: number;
  page_size: number;
}

export interface FilterParams {
  year?: number;
  type_code?: number;
  subject_contains?: string;
  person_contains?: string;
  incoming_number?: number;
  directed_to?: string;
  date_from?: string;
  date_to?: string;
  page?: number;
  page_size?: number;
}

export interface RegisterBody {
  year: number;
  incoming_number: number;
  type_code: number;
  office_of_origin: string;
  subject: string;
  person_name: string;
  incoming_date: string;
  notes?: string;
  external_publish_no?: string | null;
  external_publish_date?: string | null;
  directed_to?: string | null;
}

export class ApiClient {
  baseUrl: string;
  token: string | null = null;

  constructor(baseUrl = "") {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  private async request<T>(
    method: string,
    path: string,
    options: { json?: unknown; query?: Record<string, unknown>; body?: BodyInit; headers?: Record<string, string> } = {},
  ): Promise<T> {
    let url = this.baseUrl + path;
    if (options.query) {
      const params = new URLSearchParams();
      for (const [key, value] of Object.entries(options.query)) {
        if (value !== undefined && value !== null && value !== "") params.set(key, String(value));
      }
      const qs = params.toString();
      if (qs) url += `?${qs}`;
    }
    const headers: Record<string, string> = { ...(options.headers ?? {}) };
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    let body = options.body;
    if (options.json !== undefined) {
      headers["Content-Type"] = "application/json";
      body = JSON.stringify(options.json);
    }
    const response = await fetch(url, { method, headers, body });
    if (!response.ok) {
      let parsed: ApiErrorBody;
      try {
        parsed = (await response.json()) as ApiErrorBody;
      } catch {
        parsed = {
          code: "INTERNAL_ERROR",
          message_key: "error.INTERNAL_ERROR",
          message: `HTTP ${response.status}`,
        };
      }
      throw new ApiError(response.status, parsed);
    }
    const contentType = response.headers.get("content-type") ?? "";
    if (contentType.includes("application/json")) return (await response.json()) as T;
    return (await response.arrayBuffer()) as unknown as T;
  }

  login(username: string, password: string): Promise<LoginResponse> {
    return this.request("POST", "/api/login", { json: { username, password } });
  }

  logout(): Promise<void> {
    return this.request("POST", "/api/logout", {});
  }

  me(): Promise<MeOut> {
    return this.request("GET", "/api/me");
  }

  catalog(locale: string): Promise<{ locale: string; entries: Record<string, string> }> {
    return this.request("GET", `/api/i18n/${locale}`);
  }

  departments(): Promise<DepartmentOut[]> {
    return this.request("GET", "/api/departments");
  }

  register(body: RegisterBody): Promise<ApplicationOut> {
    return this.request("POST", "/api/applications", { json: body });
  }

  application(appId: string): Promise<ApplicationOut> {
    return this.request("GET", `/api/applications/${appId}`);
  }

  applications(filter: FilterParams): Promise<Page<ApplicationOut>> {
    return this.request("GET", "/api/applications", { query: { ...filter } });
  }

  update(appId: string, changes: Record<string, unknown>): Promise<ApplicationOut> {
    return this.request("PATCH", `/api/applications/${appId}`, { json: changes });
  }

  redirect(appId: string, toDept: string, note = ""): Promise<EventOut> {
    return this.request("POST", `/api/applications/${appId}/redirect`, {
      json: { to_dept: toDept, note },
    });
  }

  publish(
    appId: string,
    body: { date_of_signature: string; publish_date: string; office_goto: string },
  ): Promise<unknown> {
    return this.request("POST", `/api/applications/${appId}/publish`, { json: body });
  }

  events(appId: string): Promise<EventOut[]> {
    return this.request("GET", `/api/applications/${appId}/events`);
  }

  uploadAttachment(appId: string, filename: string, mediaType: string, data: ArrayBuffer | Blob) {
    return this.request("PUT", `/api/applications/${appId}/attachment`, {
      query: { filename },
      body: data as BodyInit,
      headers: { "Content-Type": mediaType },
    });
  }

  attachmentUrl(appId: string): string {
    return `${this.baseUrl}/api/applications/${appId}/attachment`;
  }

  directed(deptId: string, page = 0): Promise<Page<ApplicationOut>> {
    return this.request("GET", `/api/departments/${deptId}/directed`, { query: { page } });
  }

  published(filter: FilterParams): Promise<Page<PublishRowOut>> {
    return this.request("GET", "/api/published", { query: { ...filter } });
  }

  news(page = 0): Promise<Page<NewsOut>> {
    return this.request("GET", "/api/news", { query: { page } });
  }

  addNews(title: string, body: string): Promise<NewsOut> {
    return this.request("POST", "/api/news", { json: { title, body } });
  }

  deleteNews(newsId: string): Promise<void> {
    return this.request("DELETE", `/api/news/${newsId}`);
  }
}
