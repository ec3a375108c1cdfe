"""Credential authentication with per-account source-IP binding.

A session is only as good as the machine it came from: the source IP is
checked at login and again on every authorize call, against both the
account's bound IP and the IP the session was issued to. Credential
failures are indistinguishable (unknown user vs wrong password); an IP
mismatch is deliberately distinct so the client can render its own
denial page.
"""

from __future__ import annotations

import base64
import hashlib
import hmac
import ipaddress
import logging
import secrets
from dataclasses import dataclass
from datetime import datetime, timedelta

from .config import BootstrapConfig, SecurityConfig
from .errors import (
    AccessDeniedIp,
    BadCredentials,
    DuplicateUsername,
    InvalidSession,
    NotAuthorized,
    NotFound,
    UnknownDepartment,
    ValidationFailed,
    WrongDepartment,
)
from .model import Department, DepartmentKind, Role, UserContext, new_id, utcnow
from .store import SessionRecord, Store, UserRecord

logger = logging.getLogger(__name__)

# Authorization scopes beyond a concrete department id.
ANY_DEPARTMENT = "*"
ADMIN_ONLY = "#admin"


@dataclass(frozen=True)
class Session:
    """A live session; `token` is the secret the client holds."""

    token: str
    user_id: str
    issued_at: datetime
    expires_at: datetime
    issue_ip: str


def hash_password(password: str, security: SecurityConfig) -> str:
    """scrypt digest, self-describing: scrypt$logN$r$p$salt$hash (base64)."""
    salt = secrets.token_bytes(16)
    digest = hashlib.scrypt(
        password.encode("utf-8"),
        salt=salt,
        n=1 << security.scrypt_log_n,
        r=security.scrypt_r,
        p=security.scrypt_p,
        maxmem=1 << 30,
    )
    return "scrypt${}${}${}${}${}".format(
        security.scrypt_log_n,
        security.scrypt_r,
        security.scrypt_p,
        base64.b64encode(salt).decode("ascii"),
        base64.b64encode(digest).decode("ascii"),
    )


def verify_password(password: str, stored: str) -> bool:
    try:
        scheme, log_n, r, p, salt_b64, hash_b64 = stored.split("$")
        if scheme != "scrypt":
            return False
        expected = base64.b64decode(hash_b64, validate=True)
        actual = hashlib.scrypt(
            password.encode("utf-8"),
            salt=base64.b64decode(salt_b64, validate=True),
            n=1 << int(log_n),
            r=int(r),
            p=int(p),
            maxmem=1 << 30,
            dklen=len(expected),
        )
    except (ValueError, TypeError):
        return False
    return hmac.compare_digest(actual, expected)


def _token_digest(token: str) -> str:
    return hashlib.sha256(token.encode("ascii")).hexdigest()


def _same_ip(a: str, b: str) -> bool:
    try:
        return ipaddress.ip_address(a) == ipaddress.ip_address(b)
    except ValueError:
        return False


def _validate_ip(value: str) -> str:
    try:
        return str(ipaddress.ip_address(value))
    except ValueError:
        raise ValidationFailed("bound_ip", f"not an IP address: {value}")


def login(
    store: Store,
    username: str,
    password: str,
    source_ip: str,
    security: SecurityConfig | None = None,
) -> Session:
    """Authenticate and issue a session bound to the caller's machine."""
    security = security or SecurityConfig()
    user = store.get_user_by_username(username)
    if user is None or not verify_password(password, user.password_digest):
        raise BadCredentials("unknown user or wrong password")
    if not _same_ip(source_ip, user.bound_ip):
        raise AccessDeniedIp(f"account is not usable from {source_ip}")
    token = secrets.token_urlsafe(32)
    now = utcnow()
    session = Session(
        token=token,
        user_id=user.user_id,
        issued_at=now,
        expires_at=now + timedelta(seconds=security.session_ttl_seconds),
        issue_ip=source_ip,
    )
    with store.transaction():
        store.insert_session(
            SessionRecord(
                token_digest=_token_digest(token),
                user_id=session.user_id,
                issued_at=session.issued_at,
                expires_at=session.expires_at,
                issue_ip=session.issue_ip,
            )
        )
    return session


def logout(store: Store, token: str) -> None:
    with store.transaction():
        store.delete_session(_token_digest(token))


def authorize(store: Store, token: str, required_scope: str, source_ip: str) -> UserContext:
    """Resolve a session token into an acting user, or refuse.

    `required_scope` is a department id, ANY_DEPARTMENT, or ADMIN_ONLY.
    Admins pass every scope.
    """
    session = store.get_session(_token_digest(token)) if token else None
    if session is None or session.expires_at <= utcnow():
        raise InvalidSession("missing, unknown or expired session")
    user = store.get_user(session.user_id)
    if user is None:
        raise InvalidSession("account no longer exists")
    if not (_same_ip(source_ip, user.bound_ip) and _same_ip(source_ip, session.issue_ip)):
        raise AccessDeniedIp(f"session is not usable from {source_ip}")
    ctx = UserContext(
        user_id=user.user_id, username=user.username, dept_id=user.dept_id, role=user.role
    )
    if ctx.is_admin or required_scope == ANY_DEPARTMENT:
        return ctx
    if required_scope == ADMIN_ONLY or required_scope != user.dept_id:
        raise WrongDepartment("session does not cover this section")
    return ctx


def create_user(
    store: Store,
    actor: UserContext,
    username: str,
    password: str,
    dept_id: str,
    bound_ip: str,
    role: Role = Role.CLERK,
    security: SecurityConfig | None = None,
) -> UserRecord:
    if not actor.is_admin:
        raise NotAuthorized("only administrators manage accounts")
    if not username:
        raise ValidationFailed("username", "username must not be empty")
    if not password:
        raise ValidationFailed("password", "password must not be empty")
    bound_ip = _validate_ip(bound_ip)
    digest = hash_password(password, security or SecurityConfig())
    with store.transaction():
        dept = store.get_department(dept_id)
        if dept is None:
            raise UnknownDepartment(f"unknown department: {dept_id}")
        if role is Role.ADMIN and dept.kind is not DepartmentKind.ADMIN:
            raise ValidationFailed("role", "admin accounts belong to the admin department")
        if store.get_user_by_username(username) is not None:
            raise DuplicateUsername(f"username taken: {username}")
        user = UserRecord(
            user_id=new_id(),
            username=username,
            password_digest=digest,
            dept_id=dept_id,
            bound_ip=bound_ip,
            role=role,
        )
        store.insert_user(user)
        return user


def rebind_ip(store: Store, actor: UserContext, user_id: str, new_ip: str) -> UserRecord:
    """Move an account to a new machine; every live session dies with the old one."""
    if not actor.is_admin:
        raise NotAuthorized("only administrators manage accounts")
    new_ip = _validate_ip(new_ip)
    with store.transaction():
        user = store.get_user(user_id)
        if user is None:
            raise NotFound(f"no user {user_id}")
        store.set_bound_ip(user_id, new_ip)
        store.delete_sessions_for_user(user_id)
    return store.get_user(user_id)


def bootstrap(store: Store, config: BootstrapConfig, security: SecurityConfig | None = None) -> bool:
    """First-run provisioning: admin department plus the first admin account.

    No-op unless the user table is empty. Returns True when it provisioned.
    """
    security = security or SecurityConfig()
    if store.count_users() > 0:
        return False
    password = config.admin_password
    if not password:
        password = secrets.token_urlsafe(12)
        logger.warning("generated bootstrap admin password: %s", password)
    with store.transaction():
        admin_dept = store.get_department_by_kind(DepartmentKind.ADMIN)
        if admin_dept is None:
            admin_dept = Department(
                dept_id=new_id(),
                code=config.admin_dept_code,
                name=config.admin_dept_name,
                kind=DepartmentKind.ADMIN,
            )
            store.insert_department(admin_dept)
        store.insert_user(
            UserRecord(
                user_id=new_id(),
                username=config.admin_username,
                password_digest=hash_password(password, security),
                dept_id=admin_dept.dept_id,
                bound_ip=_validate_ip(config.admin_bound_ip),
                role=Role.ADMIN,
            )
        )
    return True
