"""HTTP facade over the core package.

Every endpoint except login and the message catalogs authorizes the
session token AND re-checks the caller's source IP on each request.
Administrative endpoints hang off a deploy-time configured path that is
never advertised in responses.
"""

from __future__ import annotations

from datetime import date
from urllib.parse import quote

from fastapi import APIRouter, Depends, FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .. import attachments as attachments_ops
from .. import auth, backup, news as news_ops, workflow
from ..config import ServiceConfig
from ..errors import DomainError, NotAuthorized, NotFound, ValidationFailed
from ..i18n import CATALOGS, SUPPORTED_LOCALES, error_message
from ..model import ApplicationDraft, Department, DepartmentKind, Role, UserContext, new_id
from ..store import FilterQuery, Store
from . import schemas

SESSION_COOKIE = "session"


def _source_ip(request: Request) -> str:
    return request.client.host if request.client else ""


def _locale(request: Request) -> str:
    asked = request.query_params.get("locale")
    if asked in SUPPORTED_LOCALES:
        return asked
    accept = request.headers.get("accept-language", "")
    for part in accept.split(","):
        tag = part.split(";")[0].strip().lower()
        primary = tag.split("-")[0]
        if primary in SUPPORTED_LOCALES:
            return primary
    return request.app.state.config.default_locale


def _token(request: Request) -> str:
    header = request.headers.get("authorization", "")
    if header.lower().startswith("bearer "):
        return header[7:].strip()
    return request.cookies.get(SESSION_COOKIE, "")


def _page_query_dependency(default_page_size: int):
    def _page_query(
        year: int | None = None,
        type_code: int | None = None,
        subject_contains: str | None = None,
        person_contains: str | None = None,
        incoming_number: int | None = None,
        directed_to: str | None = None,
        date_from: date | None = None,
        date_to: date | None = None,
        page: int = 0,
        page_size: int | None = None,
    ) -> FilterQuery:
        return FilterQuery(
            year=year,
            type_code=type_code,
            subject_contains=subject_contains,
            person_contains=person_contains,
            incoming_number=incoming_number,
            directed_to=directed_to,
            date_from=date_from,
            date_to=date_to,
            page=page,
            page_size=page_size if page_size is not None else default_page_size,
        )

    return _page_query


def create_app(store: Store, config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    if config.bootstrap is not None:
        auth.bootstrap(store, config.bootstrap, config.security)

    app = FastAPI(title="recordroute", version="0.1.0")
    _page_query = _page_query_dependency(store.limits.page_size_default)
    app.state.store = store
    app.state.config = config

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    # -- error mapping ----------------------------------------------------

    def _error_response(request: Request, code: str, status: int, detail: str | None = None):
        locale = _locale(request)
        return JSONResponse(
            status_code=status,
            content=schemas.ApiErrorOut(
                code=code,
                message_key=f"error.{code}",
                message=error_message(code, locale),
                detail=detail,
            ).model_dump(),
        )

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return _error_response(request, exc.code, exc.http_status, exc.detail)

    @app.exception_handler(RequestValidationError)
    async def _request_error(request: Request, exc: RequestValidationError):
        detail = None
        if exc.errors():
            loc = exc.errors()[0].get("loc", ())
            detail = ".".join(str(p) for p in loc if p != "body") or None
        return _error_response(request, "VALIDATION_FAILED", 422, detail)

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        if exc.status_code in (404, 405):
            return _error_response(request, "NOT_FOUND", 404)
        return _error_response(request, "INTERNAL_ERROR", exc.status_code)

    # -- auth dependencies --------------------------------------------------

    def current_user(request: Request) -> UserContext:
        return auth.authorize(store, _token(request), auth.ANY_DEPARTMENT, _source_ip(request))

    def current_admin(request: Request) -> UserContext:
        # Scope stays ANY here: the admin requirement is enforced by the
        # domain operations so that probing yields NOT_AUTHORIZED.
        return auth.authorize(store, _token(request), auth.ANY_DEPARTMENT, _source_ip(request))

    # -- public entry points --------------------------------------------------

    @app.post("/api/login", response_model=schemas.LoginResponse)
    def login(request: Request, body: schemas.LoginRequest, response: Response):
        session = auth.login(store, body.username, body.password, _source_ip(request), config.security)
        user = store.get_user(session.user_id)
        response.set_cookie(
            SESSION_COOKIE,
            session.token,
            httponly=True,
            samesite="strict",
            secure=config.cookie_secure,
            max_age=config.security.session_ttl_seconds,
        )
        return schemas.LoginResponse(
            token=session.token,
            expires_at=session.expires_at,
            user=schemas.UserOut.model_validate(user),
        )

    @app.get("/api/i18n/{locale}", response_model=schemas.CatalogOut)
    def catalog(locale: str):
        if locale not in SUPPORTED_LOCALES:
            raise NotFound(f"unsupported locale: {locale}")
        return schemas.CatalogOut(locale=locale, entries=CATALOGS[locale])

    # -- session ------------------------------------------------------------

    @app.post("/api/logout", response_model=schemas.AckOut)
    def logout(request: Request, response: Response, user: UserContext = Depends(current_user)):
        auth.logout(store, _token(request))
        response.delete_cookie(SESSION_COOKIE)
        return schemas.AckOut()

    @app.get("/api/me", response_model=schemas.MeOut)
    def me(user: UserContext = Depends(current_user)):
        dept = store.get_department(user.dept_id)
        return schemas.MeOut(
            user=schemas.UserOut.model_validate(user),
            department=schemas.DepartmentOut.model_validate(dept),
        )

    # -- departments ----------------------------------------------------------

    @app.get("/api/departments", response_model=list[schemas.DepartmentOut])
    def departments(user: UserContext = Depends(current_user)):
        return [schemas.DepartmentOut.model_validate(d) for d in store.list_departments()]

    @app.get("/api/departments/{dept_id}/directed", response_model=schemas.PageOut[schemas.ApplicationOut])
    def directed(
        dept_id: str,
        request: Request,
        page: int = 0,
        page_size: int | None = None,
    ):
        auth.authorize(store, _token(request), dept_id, _source_ip(request))
        result = store.list_directed(dept_id, page, page_size or store.limits.page_size_default)
        return _page_out(result, schemas.ApplicationOut)

    # -- applications -----------------------------------------------------------

    @app.post("/api/applications", response_model=schemas.ApplicationOut, status_code=201)
    def register(body: schemas.ApplicationCreate, user: UserContext = Depends(current_user)):
        draft = ApplicationDraft(**body.model_dump())
        return schemas.ApplicationOut.model_validate(
            workflow.register_application(store, user, draft)
        )

    @app.get("/api/applications", response_model=schemas.PageOut[schemas.ApplicationOut])
    def search(
        query: FilterQuery = Depends(_page_query), user: UserContext = Depends(current_user)
    ):
        return _page_out(store.filter_applications(query), schemas.ApplicationOut)

    @app.get("/api/applications/{app_id}", response_model=schemas.ApplicationOut)
    def get_application(app_id: str, user: UserContext = Depends(current_user)):
        app_row = store.get_application(app_id)
        if app_row is None:
            raise NotFound(f"no application {app_id}")
        return schemas.ApplicationOut.model_validate(app_row)

    @app.patch("/api/applications/{app_id}", response_model=schemas.ApplicationOut)
    def update(
        app_id: str, body: schemas.UpdateRequest, user: UserContext = Depends(current_user)
    ):
        changes = _coerce_changes(body.changes())
        return schemas.ApplicationOut.model_validate(
            workflow.update_application(store, user, app_id, changes)
        )

    @app.post("/api/applications/{app_id}/redirect", response_model=schemas.EventOut)
    def redirect(
        app_id: str, body: schemas.RedirectRequest, user: UserContext = Depends(current_user)
    ):
        return schemas.EventOut.model_validate(
            workflow.redirect_application(store, user, app_id, body.to_dept, body.note)
        )

    @app.post("/api/applications/{app_id}/publish", response_model=schemas.PublishRecordOut)
    def publish(
        app_id: str, body: schemas.PublishRequest, user: UserContext = Depends(current_user)
    ):
        record = workflow.publish_application(
            store, user, app_id, body.date_of_signature, body.publish_date, body.office_goto
        )
        return schemas.PublishRecordOut.model_validate(record)

    @app.get("/api/applications/{app_id}/events", response_model=list[schemas.EventOut])
    def events(app_id: str, user: UserContext = Depends(current_user)):
        return [
            schemas.EventOut.model_validate(e)
            for e in workflow.track_application(store, app_id)
        ]

    # -- attachments ---------------------------------------------------------------

    @app.get("/api/applications/{app_id}/attachment")
    def download_attachment(app_id: str, user: UserContext = Depends(current_user)):
        att, data = attachments_ops.retrieve_attachment(store, app_id)
        disposition = "attachment; filename*=UTF-8''{}".format(quote(att.original_filename))
        return Response(
            content=data,
            media_type=att.media_type,
            headers={"Content-Disposition": disposition},
        )

    @app.put("/api/applications/{app_id}/attachment", response_model=schemas.AttachmentOut)
    async def upload_attachment(
        app_id: str,
        request: Request,
        filename: str = Query(default="document"),
        user: UserContext = Depends(current_user),
    ):
        data = await request.body()
        media_type = request.headers.get("content-type", "application/octet-stream")
        media_type = media_type.split(";")[0].strip().lower()
        att = attachments_ops.upload_attachment(store, user, app_id, filename, media_type, data)
        return schemas.AttachmentOut.model_validate(att)

    # -- published list ----------------------------------------------------------

    @app.get("/api/published", response_model=schemas.PageOut[schemas.PublishRowOut])
    def published(
        query: FilterQuery = Depends(_page_query), user: UserContext = Depends(current_user)
    ):
        return _page_out(store.list_published(query), schemas.PublishRowOut)

    # -- news ---------------------------------------------------------------------

    @app.get("/api/news", response_model=schemas.PageOut[schemas.NewsOut])
    def list_news(
        page: int = 0, page_size: int | None = None, user: UserContext = Depends(current_user)
    ):
        return _page_out(news_ops.list_news(store, page, page_size), schemas.NewsOut)

    @app.post("/api/news", response_model=schemas.NewsOut, status_code=201)
    def add_news(body: schemas.NewsCreate, user: UserContext = Depends(current_user)):
        return schemas.NewsOut.model_validate(news_ops.add_news(store, user, body.title, body.body))

    @app.delete("/api/news/{news_id}", response_model=schemas.AckOut)
    def delete_news(news_id: str, user: UserContext = Depends(current_user)):
        news_ops.delete_news(store, user, news_id)
        return schemas.AckOut()

    # -- hidden admin section --------------------------------------------------------
    # Never advertised: kept out of the OpenAPI schema so the public docs
    # cannot reveal the configured path.

    admin = APIRouter(prefix=config.admin_path, include_in_schema=False)

    @admin.get("/users", response_model=list[schemas.UserAccountOut])
    def admin_list_users(user: UserContext = Depends(current_admin)):
        if user.role is not Role.ADMIN:
            raise NotAuthorized("only administrators list accounts")
        return [schemas.UserAccountOut.model_validate(u) for u in store.list_users()]

    @admin.post("/users", response_model=schemas.UserAccountOut, status_code=201)
    def admin_create_user(body: schemas.UserCreate, user: UserContext = Depends(current_admin)):
        try:
            role = Role(body.role)
        except ValueError:
            raise ValidationFailed("role", f"unknown role: {body.role}")
        account = auth.create_user(
            store,
            user,
            username=body.username,
            password=body.password,
            dept_id=body.dept_id,
            bound_ip=body.bound_ip,
            role=role,
            security=config.security,
        )
        return schemas.UserAccountOut.model_validate(account)

    @admin.post("/users/{user_id}/rebind-ip", response_model=schemas.UserAccountOut)
    def admin_rebind_ip(
        user_id: str, body: schemas.RebindIpRequest, user: UserContext = Depends(current_admin)
    ):
        return schemas.UserAccountOut.model_validate(
            auth.rebind_ip(store, user, user_id, body.bound_ip)
        )

    @admin.post("/departments", response_model=schemas.DepartmentOut, status_code=201)
    def admin_create_department(
        body: schemas.DepartmentCreate, user: UserContext = Depends(current_admin)
    ):
        if user.role is not Role.ADMIN:
            raise NotAuthorized("only administrators create departments")
        try:
            kind = DepartmentKind(body.kind)
        except ValueError:
            raise ValidationFailed("kind", f"unknown department kind: {body.kind}")
        dept = Department(dept_id=new_id(), code=body.code, name=body.name, kind=kind)
        singleton = {
            DepartmentKind.INCOMING_ARCHIVE,
            DepartmentKind.OUTGOING,
            DepartmentKind.ADMIN,
        }
        with store.transaction():
            if store.get_department_by_code(body.code) is not None:
                raise ValidationFailed("code", f"department code {body.code} already in use")
            if kind in singleton and store.get_department_by_kind(kind) is not None:
                raise ValidationFailed("kind", f"a {kind.value} department already exists")
            store.insert_department(dept)
        return schemas.DepartmentOut.model_validate(dept)

    @admin.get("/backup/export")
    def admin_backup_export(mode: str = "none", user: UserContext = Depends(current_admin)):
        try:
            backup_mode = backup.BackupMode(mode)
        except ValueError:
            raise ValidationFailed("mode", f"unknown backup mode: {mode}")
        archive = backup.export_backup(store, backup_mode, user)
        return Response(
            content=archive.to_bytes(),
            media_type="application/octet-stream",
            headers={"Content-Disposition": "attachment; filename=backup.dlms"},
        )

    @admin.post("/backup/import", response_model=schemas.ImportReportOut)
    async def admin_backup_import(request: Request, user: UserContext = Depends(current_admin)):
        archive = backup.BackupArchive.from_bytes(await request.body())
        return schemas.ImportReportOut.model_validate(
            backup.import_backup(store, archive, user)
        )

    app.include_router(admin)
    return app


def _page_out(page, out_model):
    return schemas.PageOut(
        items=[out_model.model_validate(item) for item in page.items],
        total_count=page.total_count,
        page=page.page,
        page_size=page.page_size,
    )


def _coerce_changes(raw: dict) -> dict:
    """Coerce JSON-typed PATCH values into domain types."""
    changes = dict(raw)
    if "external_publish_date" in changes and isinstance(changes["external_publish_date"], str):
        try:
            changes["external_publish_date"] = date.fromisoformat(changes["external_publish_date"])
        except ValueError:
            raise ValidationFailed("external_publish_date", "not an ISO date")
    for name in ("subject", "person_name", "notes", "office_of_origin"):
        if name in changes and not isinstance(changes[name], str):
            raise ValidationFailed(name, "must be text")
    if "external_publish_no" in changes and changes["external_publish_no"] is not None:
        if not isinstance(changes["external_publish_no"], str):
            raise ValidationFailed("external_publish_no", "must be text or null")
    if "type_code" in changes and not isinstance(changes["type_code"], int):
        raise ValidationFailed("type_code", "must be an integer department code")
    return changes
