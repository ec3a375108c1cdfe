"""Request/response models for the JSON API.

Wire dates are ISO-8601; rendering dd/mm/yyyy or anything else is the
client's business. Domain dataclasses convert via from_attributes.
"""

from __future__ import annotations

from datetime import date, datetime
from typing import Any, Generic, TypeVar

from pydantic import BaseModel, ConfigDict, Field

T = TypeVar("T")


class ApiErrorOut(BaseModel):
    code: str
    message_key: str
    message: str
    detail: str | None = None


class LoginRequest(BaseModel):
    username: str
    password: str


class UserOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    user_id: str
    username: str
    dept_id: str
    role: str


class UserAccountOut(UserOut):
    bound_ip: str


class LoginResponse(BaseModel):
    token: str
    expires_at: datetime
    user: UserOut


class DepartmentOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    dept_id: str
    code: int
    name: str
    kind: str


class DepartmentCreate(BaseModel):
    code: int = Field(gt=0)
    name: str
    kind: str


class ApplicationOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    app_id: str
    year: int
    incoming_number: int
    type_code: int
    external_publish_no: str | None
    external_publish_date: date | None
    office_of_origin: str
    subject: str
    person_name: str
    notes: str
    incoming_date: date
    current_location: str
    status: str
    attachment_id: str | None


class ApplicationCreate(BaseModel):
    year: int
    incoming_number: int
    type_code: int
    office_of_origin: str = ""
    subject: str
    person_name: str = ""
    incoming_date: date
    notes: str = ""
    external_publish_no: str | None = None
    external_publish_date: date | None = None
    directed_to: str | None = None


class RedirectRequest(BaseModel):
    to_dept: str
    note: str = ""


class PublishRequest(BaseModel):
    date_of_signature: date
    publish_date: date
    office_goto: str


class EventOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    event_id: str
    app_id: str
    seq: int
    kind: str
    from_dept: str | None
    to_dept: str | None
    actor: str
    at: datetime
    note: str


class PublishRowOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    app_id: str
    year: int
    type_code: int
    subject: str
    person_name: str
    date_of_signature: date
    publish_date: date
    publish_no: int
    office_goto: str


class PublishRecordOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    app_id: str
    publish_no: int
    publish_date: date
    date_of_signature: date
    office_goto: str


class NewsCreate(BaseModel):
    title: str
    body: str = ""


class NewsOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    news_id: str
    title: str
    body: str
    author: str
    created_at: datetime


class PageOut(BaseModel, Generic[T]):
    items: list[T]
    total_count: int
    page: int
    page_size: int


class AttachmentOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    attachment_id: str
    app_id: str
    original_filename: str
    media_type: str
    byte_size: int
    content_digest: str


class UserCreate(BaseModel):
    username: str
    password: str
    dept_id: str
    bound_ip: str
    role: str = "clerk"


class RebindIpRequest(BaseModel):
    bound_ip: str


class ImportReportOut(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    tables: int
    rows: int
    checksum_ok: bool


class CatalogOut(BaseModel):
    locale: str
    entries: dict[str, str]


class AckOut(BaseModel):
    ok: bool = True


class MeOut(BaseModel):
    user: UserOut
    department: DepartmentOut


class UpdateRequest(BaseModel):
    """PATCH body: free-form so immutable-field attempts surface as domain
    errors instead of being silently dropped."""

    model_config = ConfigDict(extra="allow")

    def changes(self) -> dict[str, Any]:
        return dict(self.__pydantic_extra__ or {})
