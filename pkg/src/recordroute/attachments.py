"""The document (book soft copy) attached to an application.

Bytes live in the content-addressed blob store; the relational row only
carries metadata. Replacing an attachment swaps the reference and leaves
the old blob behind for the audit sweep, so a half-finished upload can
never corrupt an application.
"""

from __future__ import annotations

from .blobs import content_digest
from .config import ATTACHMENT_ALLOW_LIST
from .errors import (
    AlreadyPublished,
    DisallowedType,
    NoAttachment,
    NotAuthorized,
    NotFound,
    StorageFailure,
    TooLarge,
)
from .model import AppStatus, Attachment, EventKind, UserContext, new_id
from .store import Store


def upload_attachment(
    store: Store,
    actor: UserContext,
    app_id: str,
    filename: str,
    media_type: str,
    data: bytes,
    allow_list: frozenset[str] = ATTACHMENT_ALLOW_LIST,
) -> Attachment:
    if media_type not in allow_list:
        raise DisallowedType(f"media type not accepted: {media_type}")
    if len(data) > store.limits.attachment_max_bytes:
        raise TooLarge(f"attachment exceeds {store.limits.attachment_max_bytes} bytes")
    # Content-addressed put outside the row transaction: a rolled-back tx
    # leaves at worst an unreferenced blob, which the audit sweep reclaims.
    digest = store.blobs.put(data)
    with store.transaction():
        app = store.get_application(app_id)
        if app is None:
            raise NotFound(f"no application {app_id}")
        if app.status is AppStatus.PUBLISHED:
            raise AlreadyPublished("published applications are immutable")
        if actor.dept_id != app.current_location:
            raise NotAuthorized("application is not at your department")
        attachment = Attachment(
            attachment_id=new_id(),
            app_id=app_id,
            original_filename=filename,
            media_type=media_type,
            byte_size=len(data),
            content_digest=digest,
            stored_name=digest,
        )
        if app.attachment_id is not None:
            store.delete_attachment(app.attachment_id)
        store.insert_attachment(attachment)
        store.set_attachment(app_id, attachment.attachment_id)
        store.append_event(app_id, EventKind.UPDATED, actor.user_id, note="changed: attachment")
        return attachment


def retrieve_attachment(store: Store, app_id: str) -> tuple[Attachment, bytes]:
    app = store.get_application(app_id)
    if app is None:
        raise NotFound(f"no application {app_id}")
    if app.attachment_id is None:
        raise NoAttachment("application has no attachment")
    attachment = store.get_attachment(app.attachment_id)
    if attachment is None:
        raise StorageFailure("attachment metadata missing")
    data = store.blobs.get(attachment.stored_name)
    if data is None or content_digest(data) != attachment.content_digest:
        raise StorageFailure("attachment bytes missing or corrupted")
    return attachment, data


def audit_blobs(store: Store) -> list[str]:
    """Digests of stored blobs no attachment row references."""
    referenced = store.list_attachment_digests()
    return [d for d in store.blobs.digests() if d not in referenced]


def sweep_blobs(store: Store) -> int:
    """Delete orphaned blobs; returns how many were reclaimed."""
    orphans = audit_blobs(store)
    for digest in orphans:
        store.blobs.delete(digest)
    return len(orphans)
