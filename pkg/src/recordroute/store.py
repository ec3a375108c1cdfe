"""Transactional relational store on SQLite, plus the list/filter engine.

One shared connection guarded by a re-entrant lock: readers take the lock
briefly, writers run inside `transaction()` so an event append and its
state write land atomically or not at all. Text search normalizes both
sides to NFC and compares byte-wise; stored values are never normalized,
so content round-trips bit-exactly.
"""

from __future__ import annotations

import sqlite3
import threading
import unicodedata
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import date, datetime
from pathlib import Path
from typing import Any, Generic, Iterator, TypeVar

from .blobs import FileBlobStore, MemoryBlobStore
from .config import LimitsConfig
from .errors import InvalidQuery, StorageFailure
from .model import (
    Application,
    AppStatus,
    Attachment,
    Department,
    DepartmentKind,
    EventKind,
    NewsItem,
    PublishRecord,
    Role,
    RoutingEvent,
    new_id,
    utcnow,
)

T = TypeVar("T")

_SCHEMA = """
CREATE TABLE IF NOT EXISTS departments (
    dept_id TEXT PRIMARY KEY,
    code INTEGER NOT NULL UNIQUE,
    name TEXT NOT NULL,
    kind TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS users (
    user_id TEXT PRIMARY KEY,
    username TEXT NOT NULL UNIQUE,
    password_digest TEXT NOT NULL,
    dept_id TEXT NOT NULL,
    bound_ip TEXT NOT NULL,
    role TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS sessions (
    token_digest TEXT PRIMARY KEY,
    user_id TEXT NOT NULL,
    issued_at TEXT NOT NULL,
    expires_at TEXT NOT NULL,
    issue_ip TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS applications (
    app_id TEXT PRIMARY KEY,
    year INTEGER NOT NULL,
    incoming_number INTEGER NOT NULL,
    type_code INTEGER NOT NULL,
    external_publish_no TEXT,
    external_publish_date TEXT,
    office_of_origin TEXT NOT NULL,
    subject TEXT NOT NULL,
    person_name TEXT NOT NULL,
    notes TEXT NOT NULL,
    incoming_date TEXT NOT NULL,
    current_location TEXT NOT NULL,
    status TEXT NOT NULL,
    attachment_id TEXT,
    UNIQUE (year, incoming_number)
);
CREATE INDEX IF NOT EXISTS idx_applications_location
    ON applications (current_location, status);
CREATE INDEX IF NOT EXISTS idx_applications_order
    ON applications (year DESC, incoming_number DESC);
CREATE TABLE IF NOT EXISTS events (
    event_id TEXT PRIMARY KEY,
    app_id TEXT NOT NULL,
    seq INTEGER NOT NULL,
    kind TEXT NOT NULL,
    from_dept TEXT,
    to_dept TEXT,
    actor TEXT NOT NULL,
    at TEXT NOT NULL,
    note TEXT NOT NULL,
    UNIQUE (app_id, seq)
);
CREATE TABLE IF NOT EXISTS publishes (
    app_id TEXT PRIMARY KEY,
    publish_no INTEGER NOT NULL,
    publish_date TEXT NOT NULL,
    date_of_signature TEXT NOT NULL,
    office_goto TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS news (
    news_id TEXT PRIMARY KEY,
    seq INTEGER NOT NULL UNIQUE,
    title TEXT NOT NULL,
    body TEXT NOT NULL,
    author TEXT NOT NULL,
    created_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS attachments (
    attachment_id TEXT PRIMARY KEY,
    app_id TEXT NOT NULL,
    original_filename TEXT NOT NULL,
    media_type TEXT NOT NULL,
    byte_size INTEGER NOT NULL,
    content_digest TEXT NOT NULL,
    stored_name TEXT NOT NULL
);
"""

# Relational tables in canonical export order. Blobs ride along as a
# sibling section handled by the backup module.
TABLES = (
    "departments",
    "users",
    "sessions",
    "applications",
    "events",
    "publishes",
    "news",
    "attachments",
)


def _nfc_contains(haystack: str | None, needle: str) -> int:
    if haystack is None:
        return 0
    hay = unicodedata.normalize("NFC", haystack)
    ndl = unicodedata.normalize("NFC", needle)
    return 1 if ndl in hay else 0


def _iso(d: date | None) -> str | None:
    return None if d is None else d.isoformat()


def _iso_dt(d: datetime) -> str:
    return d.isoformat()


def _parse_date(s: str | None) -> date | None:
    return None if s is None else date.fromisoformat(s)


def _parse_dt(s: str) -> datetime:
    return datetime.fromisoformat(s)


@dataclass(frozen=True)
class FilterQuery:
    """Conjunction of optional predicates over applications."""

    year: int | None = None
    type_code: int | None = None
    subject_contains: str | None = None
    person_contains: str | None = None
    incoming_number: int | None = None
    directed_to: str | None = None
    date_from: date | None = None
    date_to: date | None = None
    page: int = 0
    page_size: int = LimitsConfig.page_size_default


@dataclass(frozen=True)
class Page(Generic[T]):
    items: list[T]
    total_count: int
    page: int
    page_size: int


@dataclass(frozen=True)
class PublishRow:
    """One line of the outgoing/publish list."""

    app_id: str
    year: int
    type_code: int
    subject: str
    person_name: str
    date_of_signature: date
    publish_date: date
    publish_no: int
    office_goto: str


@dataclass(frozen=True)
class UserRecord:
    user_id: str
    username: str
    password_digest: str
    dept_id: str
    bound_ip: str
    role: Role


@dataclass(frozen=True)
class SessionRecord:
    token_digest: str
    user_id: str
    issued_at: datetime
    expires_at: datetime
    issue_ip: str


class Store:
    """SQLite-backed store; all mutation goes through `transaction()`."""

    def __init__(self, conn: sqlite3.Connection, blob_store, limits: LimitsConfig | None = None):
        self._conn = conn
        self._lock = threading.RLock()
        self._in_tx = False
        self.blobs = blob_store
        self.limits = limits or LimitsConfig()
        conn.row_factory = sqlite3.Row
        conn.create_function("nfc_contains", 2, _nfc_contains, deterministic=True)
        conn.executescript(_SCHEMA)

    @classmethod
    def memory(cls, limits: LimitsConfig | None = None) -> "Store":
        conn = sqlite3.connect(":memory:", check_same_thread=False, isolation_level=None)
        return cls(conn, MemoryBlobStore(), limits)

    @classmethod
    def open(cls, data_dir: str | Path, limits: LimitsConfig | None = None) -> "Store":
        data_dir = Path(data_dir)
        data_dir.mkdir(parents=True, exist_ok=True)
        conn = sqlite3.connect(
            str(data_dir / "store.db"), check_same_thread=False, isolation_level=None
        )
        conn.execute("PRAGMA journal_mode=WAL")
        return cls(conn, FileBlobStore(data_dir / "blobs"), limits)

    def close(self) -> None:
        with self._lock:
            self._conn.close()

    # -- transactions ----------------------------------------------------

    @contextmanager
    def transaction(self) -> Iterator["Store"]:
        """Serialize a mutation; rolls back wholesale on any exception."""
        with self._lock:
            if self._in_tx:
                raise StorageFailure("nested transactions are not supported")
            try:
                self._conn.execute("BEGIN IMMEDIATE")
            except sqlite3.Error as exc:
                raise StorageFailure(str(exc)) from exc
            self._in_tx = True
            try:
                yield self
                self._conn.execute("COMMIT")
            except BaseException:
                self._conn.execute("ROLLBACK")
                raise
            finally:
                self._in_tx = False

    def _write_guard(self) -> None:
        if not self._in_tx:
            raise StorageFailure("write outside a transaction")

    # -- departments -----------------------------------------------------

    def insert_department(self, dept: Department) -> None:
        self._write_guard()
        self._conn.execute(
            "INSERT INTO departments VALUES (?, ?, ?, ?)",
            (dept.dept_id, dept.code, dept.name, dept.kind.value),
        )

    def get_department(self, dept_id: str) -> Department | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM departments WHERE dept_id = ?", (dept_id,)
            ).fetchone()
        return _department(row) if row else None

    def get_department_by_code(self, code: int) -> Department | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM departments WHERE code = ?", (code,)
            ).fetchone()
        return _department(row) if row else None

    def get_department_by_kind(self, kind: DepartmentKind) -> Department | None:
        """The singleton department of a given kind, if configured."""
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM departments WHERE kind = ? ORDER BY code LIMIT 1",
                (kind.value,),
            ).fetchone()
        return _department(row) if row else None

    def list_departments(self) -> list[Department]:
        with self._lock:
            rows = self._conn.execute("SELECT * FROM departments ORDER BY code").fetchall()
        return [_department(r) for r in rows]

    # -- users & sessions --------------------------------------------------

    def insert_user(self, user: UserRecord) -> None:
        self._write_guard()
        self._conn.execute(
            "INSERT INTO users VALUES (?, ?, ?, ?, ?, ?)",
            (
                user.user_id,
                user.username,
                user.password_digest,
                user.dept_id,
                user.bound_ip,
                user.role.value,
            ),
        )

    def get_user(self, user_id: str) -> UserRecord | None:
        with self._lock:
            row = self._conn.execute("SELECT * FROM users WHERE user_id = ?", (user_id,)).fetchone()
        return _user(row) if row else None

    def get_user_by_username(self, username: str) -> UserRecord | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM users WHERE username = ?", (username,)
            ).fetchone()
        return _user(row) if row else None

    def list_users(self) -> list[UserRecord]:
        with self._lock:
            rows = self._conn.execute("SELECT * FROM users ORDER BY username").fetchall()
        return [_user(r) for r in rows]

    def count_users(self) -> int:
        with self._lock:
            return self._conn.execute("SELECT COUNT(*) FROM users").fetchone()[0]

    def set_bound_ip(self, user_id: str, bound_ip: str) -> None:
        self._write_guard()
        self._conn.execute("UPDATE users SET bound_ip = ? WHERE user_id = ?", (bound_ip, user_id))

    def insert_session(self, session: SessionRecord) -> None:
        self._write_guard()
        self._conn.execute(
            "INSERT INTO sessions VALUES (?, ?, ?, ?, ?)",
            (
                session.token_digest,
                session.user_id,
                _iso_dt(session.issued_at),
                _iso_dt(session.expires_at),
                session.issue_ip,
            ),
        )

    def get_session(self, token_digest: str) -> SessionRecord | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM sessions WHERE token_digest = ?", (token_digest,)
            ).fetchone()
        if row is None:
            return None
        return SessionRecord(
            token_digest=row["token_digest"],
            user_id=row["user_id"],
            issued_at=_parse_dt(row["issued_at"]),
            expires_at=_parse_dt(row["expires_at"]),
            issue_ip=row["issue_ip"],
        )

    def delete_session(self, token_digest: str) -> None:
        self._write_guard()
        self._conn.execute("DELETE FROM sessions WHERE token_digest = ?", (token_digest,))

    def delete_sessions_for_user(self, user_id: str) -> None:
        self._write_guard()
        self._conn.execute("DELETE FROM sessions WHERE user_id = ?", (user_id,))

    # -- applications ------------------------------------------------------

    def insert_application(self, app: Application) -> None:
        self._write_guard()
        self._conn.execute(
            "INSERT INTO applications VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
            (
                app.app_id,
                app.year,
                app.incoming_number,
                app.type_code,
                app.external_publish_no,
                _iso(app.external_publish_date),
                app.office_of_origin,
                app.subject,
                app.person_name,
                app.notes,
                _iso(app.incoming_date),
                app.current_location,
                app.status.value,
                app.attachment_id,
            ),
        )

    def get_application(self, app_id: str) -> Application | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM applications WHERE app_id = ?", (app_id,)
            ).fetchone()
        return _application(row) if row else None

    def application_exists(self, year: int, incoming_number: int) -> bool:
        with self._lock:
            row = self._conn.execute(
                "SELECT 1 FROM applications WHERE year = ? AND incoming_number = ?",
                (year, incoming_number),
            ).fetchone()
        return row is not None

    def update_application_fields(self, app_id: str, changes: dict[str, Any]) -> None:
        self._write_guard()
        cols, params = [], []
        for name, value in changes.items():
            cols.append(f"{name} = ?")
            params.append(_iso(value) if isinstance(value, date) else value)
        params.append(app_id)
        self._conn.execute(f"UPDATE applications SET {', '.join(cols)} WHERE app_id = ?", params)

    def set_location_status(self, app_id: str, dept_id: str, status: AppStatus) -> None:
        self._write_guard()
        self._conn.execute(
            "UPDATE applications SET current_location = ?, status = ? WHERE app_id = ?",
            (dept_id, status.value, app_id),
        )

    def set_attachment(self, app_id: str, attachment_id: str | None) -> None:
        self._write_guard()
        self._conn.execute(
            "UPDATE applications SET attachment_id = ? WHERE app_id = ?", (attachment_id, app_id)
        )

    # -- events ------------------------------------------------------------

    def append_event(
        self,
        app_id: str,
        kind: EventKind,
        actor: str,
        from_dept: str | None = None,
        to_dept: str | None = None,
        note: str = "",
    ) -> RoutingEvent:
        """Append the next event for an application; seq is gap-free per app."""
        self._write_guard()
        row = self._conn.execute(
            "SELECT COALESCE(MAX(seq), 0) FROM events WHERE app_id = ?", (app_id,)
        ).fetchone()
        event = RoutingEvent(
            event_id=new_id(),
            app_id=app_id,
            seq=row[0] + 1,
            kind=kind,
            from_dept=from_dept,
            to_dept=to_dept,
            actor=actor,
            at=utcnow(),
            note=note,
        )
        self._conn.execute(
            "INSERT INTO events VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)",
            (
                event.event_id,
                event.app_id,
                event.seq,
                event.kind.value,
                event.from_dept,
                event.to_dept,
                event.actor,
                _iso_dt(event.at),
                event.note,
            ),
        )
        return event

    def events_for(self, app_id: str) -> list[RoutingEvent]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM events WHERE app_id = ? ORDER BY seq", (app_id,)
            ).fetchall()
        return [_event(r) for r in rows]

    def count_events(self, app_id: str) -> int:
        with self._lock:
            return self._conn.execute(
                "SELECT COUNT(*) FROM events WHERE app_id = ?", (app_id,)
            ).fetchone()[0]

    # -- publish records -----------------------------------------------------

    def insert_publish(self, record: PublishRecord) -> None:
        self._write_guard()
        self._conn.execute(
            "INSERT INTO publishes VALUES (?, ?, ?, ?, ?)",
            (
                record.app_id,
                record.publish_no,
                _iso(record.publish_date),
                _iso(record.date_of_signature),
                record.office_goto,
            ),
        )

    def get_publish(self, app_id: str) -> PublishRecord | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM publishes WHERE app_id = ?", (app_id,)
            ).fetchone()
        return _publish(row) if row else None

    def max_publish_no(self, year: int) -> int:
        """Highest publish number assigned to the given registry year."""
        with self._lock:
            row = self._conn.execute(
                "SELECT COALESCE(MAX(p.publish_no), 0) FROM publishes p"
                " JOIN applications a ON a.app_id = p.app_id WHERE a.year = ?",
                (year,),
            ).fetchone()
        return row[0]

    # -- news ---------------------------------------------------------------

    def insert_news(self, title: str, body: str, author: str) -> NewsItem:
        self._write_guard()
        row = self._conn.execute("SELECT COALESCE(MAX(seq), 0) FROM news").fetchone()
        item = NewsItem(
            news_id=new_id(),
            seq=row[0] + 1,
            title=title,
            body=body,
            author=author,
            created_at=utcnow(),
        )
        self._conn.execute(
            "INSERT INTO news VALUES (?, ?, ?, ?, ?, ?)",
            (item.news_id, item.seq, item.title, item.body, item.author, _iso_dt(item.created_at)),
        )
        return item

    def get_news(self, news_id: str) -> NewsItem | None:
        with self._lock:
            row = self._conn.execute("SELECT * FROM news WHERE news_id = ?", (news_id,)).fetchone()
        return _news(row) if row else None

    def delete_news(self, news_id: str) -> None:
        self._write_guard()
        self._conn.execute("DELETE FROM news WHERE news_id = ?", (news_id,))

    def list_news(self, page: int, page_size: int) -> Page[NewsItem]:
        self._check_page(page, page_size)
        with self._lock:
            total = self._conn.execute("SELECT COUNT(*) FROM news").fetchone()[0]
            rows = self._conn.execute(
                "SELECT * FROM news ORDER BY seq DESC LIMIT ? OFFSET ?",
                (page_size, page * page_size),
            ).fetchall()
        return Page([_news(r) for r in rows], total, page, page_size)

    # -- attachments ----------------------------------------------------------

    def insert_attachment(self, att: Attachment) -> None:
        self._write_guard()
        self._conn.execute(
            "INSERT INTO attachments VALUES (?, ?, ?, ?, ?, ?, ?)",
            (
                att.attachment_id,
                att.app_id,
                att.original_filename,
                att.media_type,
                att.byte_size,
                att.content_digest,
                att.stored_name,
            ),
        )

    def get_attachment(self, attachment_id: str) -> Attachment | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM attachments WHERE attachment_id = ?", (attachment_id,)
            ).fetchone()
        return _attachment(row) if row else None

    def delete_attachment(self, attachment_id: str) -> None:
        self._write_guard()
        self._conn.execute("DELETE FROM attachments WHERE attachment_id = ?", (attachment_id,))

    def list_attachment_digests(self) -> set[str]:
        with self._lock:
            rows = self._conn.execute("SELECT content_digest FROM attachments").fetchall()
        return {r[0] for r in rows}

    # -- list & filter ---------------------------------------------------------

    def _check_page(self, page: int, page_size: int) -> None:
        if page < 0:
            raise InvalidQuery("page must be non-negative")
        if page_size < 1 or page_size > self.limits.page_size_max:
            raise InvalidQuery(
                f"page_size must be between 1 and {self.limits.page_size_max}"
            )

    def _query_clauses(self, q: FilterQuery) -> tuple[list[str], list[Any]]:
        if q.date_from and q.date_to and q.date_from > q.date_to:
            raise InvalidQuery("date_from is after date_to")
        self._check_page(q.page, q.page_size)
        where, params = [], []
        if q.year is not None:
            where.append("a.year = ?")
            params.append(q.year)
        if q.type_code is not None:
            where.append("a.type_code = ?")
            params.append(q.type_code)
        if q.incoming_number is not None:
            where.append("a.incoming_number = ?")
            params.append(q.incoming_number)
        if q.directed_to is not None:
            where.append("a.current_location = ?")
            params.append(q.directed_to)
        if q.date_from is not None:
            where.append("a.incoming_date >= ?")
            params.append(q.date_from.isoformat())
        if q.date_to is not None:
            where.append("a.incoming_date <= ?")
            params.append(q.date_to.isoformat())
        if q.subject_contains is not None:
            where.append("nfc_contains(a.subject, ?)")
            params.append(q.subject_contains)
        if q.person_contains is not None:
            where.append("nfc_contains(a.person_name, ?)")
            params.append(q.person_contains)
        return where, params

    def filter_applications(self, q: FilterQuery) -> Page[Application]:
        where, params = self._query_clauses(q)
        cond = f"WHERE {' AND '.join(where)}" if where else ""
        with self._lock:
            total = self._conn.execute(
                f"SELECT COUNT(*) FROM applications a {cond}", params
            ).fetchone()[0]
            rows = self._conn.execute(
                f"SELECT a.* FROM applications a {cond}"
                " ORDER BY a.year DESC, a.incoming_number DESC LIMIT ? OFFSET ?",
                params + [q.page_size, q.page * q.page_size],
            ).fetchall()
        return Page([_application(r) for r in rows], total, q.page, q.page_size)

    def list_directed(self, dept_id: str, page: int, page_size: int) -> Page[Application]:
        """Unpublished applications currently sitting at one department."""
        self._check_page(page, page_size)
        with self._lock:
            total = self._conn.execute(
                "SELECT COUNT(*) FROM applications WHERE current_location = ? AND status != ?",
                (dept_id, AppStatus.PUBLISHED.value),
            ).fetchone()[0]
            rows = self._conn.execute(
                "SELECT * FROM applications WHERE current_location = ? AND status != ?"
                " ORDER BY year DESC, incoming_number DESC LIMIT ? OFFSET ?",
                (dept_id, AppStatus.PUBLISHED.value, page_size, page * page_size),
            ).fetchall()
        return Page([_application(r) for r in rows], total, page, page_size)

    def list_published(self, q: FilterQuery) -> Page[PublishRow]:
        where, params = self._query_clauses(q)
        where.append("a.status = ?")
        params.append(AppStatus.PUBLISHED.value)
        cond = f"WHERE {' AND '.join(where)}"
        base = f"FROM applications a JOIN publishes p ON p.app_id = a.app_id {cond}"
        with self._lock:
            total = self._conn.execute(f"SELECT COUNT(*) {base}", params).fetchone()[0]
            rows = self._conn.execute(
                f"SELECT a.app_id, a.year, a.type_code, a.subject, a.person_name,"
                f" p.date_of_signature, p.publish_date, p.publish_no, p.office_goto {base}"
                " ORDER BY a.year DESC, a.incoming_number DESC LIMIT ? OFFSET ?",
                params + [q.page_size, q.page * q.page_size],
            ).fetchall()
        items = [
            PublishRow(
                app_id=r["app_id"],
                year=r["year"],
                type_code=r["type_code"],
                subject=r["subject"],
                person_name=r["person_name"],
                date_of_signature=date.fromisoformat(r["date_of_signature"]),
                publish_date=date.fromisoformat(r["publish_date"]),
                publish_no=r["publish_no"],
                office_goto=r["office_goto"],
            )
            for r in rows
        ]
        return Page(items, total, q.page, q.page_size)

    # -- snapshot / restore ------------------------------------------------------

    def table_counts(self) -> dict[str, int]:
        with self._lock:
            return {
                t: self._conn.execute(f"SELECT COUNT(*) FROM {t}").fetchone()[0] for t in TABLES
            }

    def snapshot_rows(self) -> dict[str, list[dict[str, Any]]]:
        """All relational rows as plain dicts, for canonical export."""
        out: dict[str, list[dict[str, Any]]] = {}
        with self._lock:
            for table in TABLES:
                rows = self._conn.execute(f"SELECT * FROM {table}").fetchall()
                out[table] = [dict(r) for r in rows]
        return out

    def wipe(self) -> None:
        with self.transaction():
            for table in TABLES:
                self._conn.execute(f"DELETE FROM {table}")
        self.blobs.replace_all({})

    def replace_all(self, tables: dict[str, list[dict[str, Any]]], blobs: dict[str, bytes]) -> None:
        """Replace the whole store with a snapshot (restore semantics)."""
        with self.transaction():
            for table in TABLES:
                self._conn.execute(f"DELETE FROM {table}")
            for table in TABLES:
                for row in tables.get(table, []):
                    cols = sorted(row)
                    self._conn.execute(
                        f"INSERT INTO {table} ({', '.join(cols)})"
                        f" VALUES ({', '.join('?' for _ in cols)})",
                        [row[c] for c in cols],
                    )
        self.blobs.replace_all(blobs)


# -- row mappers ------------------------------------------------------------


def _department(row: sqlite3.Row) -> Department:
    return Department(
        dept_id=row["dept_id"], code=row["code"], name=row["name"], kind=DepartmentKind(row["kind"])
    )


def _user(row: sqlite3.Row) -> UserRecord:
    return UserRecord(
        user_id=row["user_id"],
        username=row["username"],
        password_digest=row["password_digest"],
        dept_id=row["dept_id"],
        bound_ip=row["bound_ip"],
        role=Role(row["role"]),
    )


def _application(row: sqlite3.Row) -> Application:
    return Application(
        app_id=row["app_id"],
        year=row["year"],
        incoming_number=row["incoming_number"],
        type_code=row["type_code"],
        external_publish_no=row["external_publish_no"],
        external_publish_date=_parse_date(row["external_publish_date"]),
        office_of_origin=row["office_of_origin"],
        subject=row["subject"],
        person_name=row["person_name"],
        notes=row["notes"],
        incoming_date=date.fromisoformat(row["incoming_date"]),
        current_location=row["current_location"],
        status=AppStatus(row["status"]),
        attachment_id=row["attachment_id"],
    )


def _event(row: sqlite3.Row) -> RoutingEvent:
    return RoutingEvent(
        event_id=row["event_id"],
        app_id=row["app_id"],
        seq=row["seq"],
        kind=EventKind(row["kind"]),
        from_dept=row["from_dept"],
        to_dept=row["to_dept"],
        actor=row["actor"],
        at=_parse_dt(row["at"]),
        note=row["note"],
    )


def _publish(row: sqlite3.Row) -> PublishRecord:
    return PublishRecord(
        app_id=row["app_id"],
        publish_no=row["publish_no"],
        publish_date=date.fromisoformat(row["publish_date"]),
        date_of_signature=date.fromisoformat(row["date_of_signature"]),
        office_goto=row["office_goto"],
    )


def _news(row: sqlite3.Row) -> NewsItem:
    return NewsItem(
        news_id=row["news_id"],
        seq=row["seq"],
        title=row["title"],
        body=row["body"],
        author=row["author"],
        created_at=_parse_dt(row["created_at"]),
    )


def _attachment(row: sqlite3.Row) -> Attachment:
    return Attachment(
        attachment_id=row["attachment_id"],
        app_id=row["app_id"],
        original_filename=row["original_filename"],
        media_type=row["media_type"],
        byte_size=row["byte_size"],
        content_digest=row["content_digest"],
        stored_name=row["stored_name"],
    )
