"""Core domain types and the application lifecycle.

An application is registered at the incoming archive, directed between
departments any number of times, and finally published by the outgoing
department. Every hop is recorded as an append-only routing event; the
event trail is the source of truth, and `replay` reconstructs the current
(location, status) pair from it.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field, replace
from datetime import date, datetime, timezone
from enum import Enum


class DepartmentKind(str, Enum):
    INCOMING_ARCHIVE = "incoming_archive"
    OUTGOING = "outgoing"
    FUNCTIONAL = "functional"
    ADMIN = "admin"


class AppStatus(str, Enum):
    REGISTERED = "registered"
    DIRECTED = "directed"
    PUBLISHED = "published"


class EventKind(str, Enum):
    REGISTERED = "registered"
    REDIRECTED = "redirected"
    UPDATED = "updated"
    PUBLISHED = "published"


class Role(str, Enum):
    CLERK = "clerk"
    ADMIN = "admin"


def new_id() -> str:
    return uuid.uuid4().hex


def utcnow() -> datetime:
    return datetime.now(timezone.utc)


@dataclass(frozen=True)
class Department:
    dept_id: str
    code: int
    name: str
    kind: DepartmentKind


@dataclass(frozen=True)
class UserContext:
    """The acting user, as established by a successful authorization."""

    user_id: str
    username: str
    dept_id: str
    role: Role

    @property
    def is_admin(self) -> bool:
        return self.role is Role.ADMIN


@dataclass(frozen=True)
class Application:
    app_id: str
    year: int
    incoming_number: int
    type_code: int
    office_of_origin: str
    subject: str
    person_name: str
    notes: str
    incoming_date: date
    current_location: str
    status: AppStatus
    external_publish_no: str | None = None
    external_publish_date: date | None = None
    attachment_id: str | None = None


@dataclass(frozen=True)
class ApplicationDraft:
    """Insert-form fields, before the system assigns identity and status."""

    year: int
    incoming_number: int
    type_code: int
    office_of_origin: str
    subject: str
    person_name: str
    incoming_date: date
    notes: str = ""
    external_publish_no: str | None = None
    external_publish_date: date | None = None
    directed_to: str | None = None


@dataclass(frozen=True)
class RoutingEvent:
    event_id: str
    app_id: str
    seq: int
    kind: EventKind
    from_dept: str | None
    to_dept: str | None
    actor: str
    at: datetime
    note: str


@dataclass(frozen=True)
class PublishRecord:
    app_id: str
    publish_no: int
    publish_date: date
    date_of_signature: date
    office_goto: str


@dataclass(frozen=True)
class NewsItem:
    news_id: str
    seq: int
    title: str
    body: str
    author: str
    created_at: datetime


@dataclass(frozen=True)
class Attachment:
    attachment_id: str
    app_id: str
    original_filename: str
    media_type: str
    byte_size: int
    content_digest: str
    stored_name: str


# Fields a clerk may change while the application sits at their department.
MUTABLE_FIELDS = frozenset(
    {
        "subject",
        "person_name",
        "notes",
        "office_of_origin",
        "external_publish_no",
        "external_publish_date",
        "type_code",
    }
)

# Identity fields: frozen for the lifetime of the application.
IMMUTABLE_FIELDS = frozenset({"app_id", "year", "incoming_number", "incoming_date"})


def apply_changes(app: Application, changes: dict) -> Application:
    """Return a copy of `app` with mutable fields replaced.

    Callers validate the key set first; this only performs the substitution.
    """
    return replace(app, **changes)


def replay(events: list[RoutingEvent]) -> tuple[str, AppStatus]:
    """Fold a routing-event trail into the (current_location, status) pair.

    The first event must be the registration; later events move the
    application or close it out. Update events change fields only, never
    position.
    """
    if not events or events[0].kind is not EventKind.REGISTERED:
        raise ValueError("event trail must start with a registration event")
    location = events[0].to_dept
    status = AppStatus.REGISTERED
    for ev in events[1:]:
        if ev.kind is EventKind.REGISTERED:
            raise ValueError("registration event repeated mid-trail")
        if ev.kind is EventKind.REDIRECTED:
            location = ev.to_dept
            status = AppStatus.DIRECTED
        elif ev.kind is EventKind.PUBLISHED:
            status = AppStatus.PUBLISHED
    if location is None:
        raise ValueError("registration event carries no destination")
    return location, status
