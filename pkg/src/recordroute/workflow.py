"""Application lifecycle operations: register, redirect, update, publish, track.

Each operation runs in one store transaction so the state change and its
audit event are inseparable. Authorization inside an operation is always
re-checked against the row as it exists in the transaction, not against
whatever the caller saw earlier.
"""

from __future__ import annotations

from datetime import date

from . import model
from .errors import (
    AlreadyPublished,
    DuplicateIncomingNumber,
    ImmutableField,
    NotAtOutgoing,
    NotAuthorized,
    NotFound,
    SelfRedirect,
    UnknownDepartment,
    ValidationFailed,
)
from .model import (
    Application,
    ApplicationDraft,
    AppStatus,
    DepartmentKind,
    EventKind,
    PublishRecord,
    RoutingEvent,
    UserContext,
    new_id,
)
from .store import Store


def _validate_draft(draft: ApplicationDraft) -> None:
    if not draft.subject:
        raise ValidationFailed("subject", "subject must not be empty")
    if draft.year < 1900 or draft.year > 2200:
        raise ValidationFailed("year", "year out of range")
    if draft.incoming_number < 1:
        raise ValidationFailed("incoming_number", "incoming number must be positive")
    if not isinstance(draft.incoming_date, date):
        raise ValidationFailed("incoming_date", "not a calendar date")


def register_application(store: Store, actor: UserContext, draft: ApplicationDraft) -> Application:
    """Register a new incoming application, optionally directing it onward."""
    _validate_draft(draft)
    with store.transaction():
        incoming = store.get_department_by_kind(DepartmentKind.INCOMING_ARCHIVE)
        if incoming is None:
            raise UnknownDepartment("no incoming archive department configured")
        actor_dept = store.get_department(actor.dept_id)
        if actor_dept is None or actor_dept.kind is not DepartmentKind.INCOMING_ARCHIVE:
            raise NotAuthorized("only the incoming archive registers applications")
        if store.application_exists(draft.year, draft.incoming_number):
            raise DuplicateIncomingNumber(
                f"incoming number {draft.incoming_number}/{draft.year} already registered"
            )
        if store.get_department_by_code(draft.type_code) is None:
            raise UnknownDepartment(f"no department with code {draft.type_code}")
        directed = None
        if draft.directed_to is not None:
            directed = store.get_department(draft.directed_to)
            if directed is None:
                raise UnknownDepartment(f"unknown department: {draft.directed_to}")

        app = Application(
            app_id=new_id(),
            year=draft.year,
            incoming_number=draft.incoming_number,
            type_code=draft.type_code,
            external_publish_no=draft.external_publish_no,
            external_publish_date=draft.external_publish_date,
            office_of_origin=draft.office_of_origin,
            subject=draft.subject,
            person_name=draft.person_name,
            notes=draft.notes,
            incoming_date=draft.incoming_date,
            current_location=incoming.dept_id,
            status=AppStatus.REGISTERED,
        )
        store.insert_application(app)
        store.append_event(
            app.app_id, EventKind.REGISTERED, actor.user_id, to_dept=incoming.dept_id
        )
        if directed is not None and directed.dept_id != incoming.dept_id:
            store.append_event(
                app.app_id,
                EventKind.REDIRECTED,
                actor.user_id,
                from_dept=incoming.dept_id,
                to_dept=directed.dept_id,
            )
            store.set_location_status(app.app_id, directed.dept_id, AppStatus.DIRECTED)
            app = store.get_application(app.app_id)
        return app


def redirect_application(
    store: Store, actor: UserContext, app_id: str, to_dept: str, note: str = ""
) -> RoutingEvent:
    """Move an application one hop; only the holding department may send it."""
    with store.transaction():
        app = store.get_application(app_id)
        if app is None:
            raise NotFound(f"no application {app_id}")
        if app.status is AppStatus.PUBLISHED:
            raise AlreadyPublished("published applications are immutable")
        if actor.dept_id != app.current_location:
            raise NotAuthorized("application is not at your department")
        if to_dept == app.current_location:
            raise SelfRedirect("application is already there")
        if store.get_department(to_dept) is None:
            raise UnknownDepartment(f"unknown department: {to_dept}")
        event = store.append_event(
            app_id,
            EventKind.REDIRECTED,
            actor.user_id,
            from_dept=app.current_location,
            to_dept=to_dept,
            note=note,
        )
        store.set_location_status(app_id, to_dept, AppStatus.DIRECTED)
        return event


def update_application(
    store: Store, actor: UserContext, app_id: str, changes: dict
) -> Application:
    """Replace mutable fields; records which field names changed."""
    if not changes:
        raise ValidationFailed("changes", "no fields to update")
    for name in changes:
        if name in model.IMMUTABLE_FIELDS:
            raise ImmutableField(name)
        if name not in model.MUTABLE_FIELDS:
            raise ValidationFailed(name, f"unknown or non-editable field: {name}")
    if "subject" in changes and not changes["subject"]:
        raise ValidationFailed("subject", "subject must not be empty")
    with store.transaction():
        app = store.get_application(app_id)
        if app is None:
            raise NotFound(f"no application {app_id}")
        if app.status is AppStatus.PUBLISHED:
            raise AlreadyPublished("published applications are immutable")
        if actor.dept_id != app.current_location:
            raise NotAuthorized("application is not at your department")
        if "type_code" in changes and store.get_department_by_code(changes["type_code"]) is None:
            raise UnknownDepartment(f"no department with code {changes['type_code']}")
        store.update_application_fields(app_id, changes)
        store.append_event(
            app_id,
            EventKind.UPDATED,
            actor.user_id,
            note="changed: " + ", ".join(sorted(changes)),
        )
        return store.get_application(app_id)


def publish_application(
    store: Store,
    actor: UserContext,
    app_id: str,
    date_of_signature: date,
    publish_date: date,
    office_goto: str,
) -> PublishRecord:
    """Close out an application from the outgoing department.

    The publish number is assigned serially per registry year; the
    externally supplied number, if any, stays in external_publish_no.
    """
    with store.transaction():
        app = store.get_application(app_id)
        if app is None:
            raise NotFound(f"no application {app_id}")
        if app.status is AppStatus.PUBLISHED or store.get_publish(app_id) is not None:
            raise AlreadyPublished("application already published")
        outgoing = store.get_department_by_kind(DepartmentKind.OUTGOING)
        if outgoing is None:
            raise UnknownDepartment("no outgoing department configured")
        if actor.dept_id != outgoing.dept_id:
            raise NotAuthorized("only the outgoing department publishes")
        if app.current_location != outgoing.dept_id:
            raise NotAtOutgoing("application has not reached the outgoing department")
        record = PublishRecord(
            app_id=app_id,
            publish_no=store.max_publish_no(app.year) + 1,
            publish_date=publish_date,
            date_of_signature=date_of_signature,
            office_goto=office_goto,
        )
        store.insert_publish(record)
        store.append_event(
            app_id,
            EventKind.PUBLISHED,
            actor.user_id,
            from_dept=app.current_location,
            note=f"publish_no={record.publish_no}",
        )
        store.set_location_status(app_id, app.current_location, AppStatus.PUBLISHED)
        return record


def track_application(store: Store, app_id: str) -> list[RoutingEvent]:
    """Full routing history, oldest first."""
    app = store.get_application(app_id)
    if app is None:
        raise NotFound(f"no application {app_id}")
    return store.events_for(app_id)
