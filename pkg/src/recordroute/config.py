"""Tunable knobs, grouped by the layer that consumes them."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SecurityConfig:
    """Password digest and session parameters."""

    # scrypt cost parameters; defaults follow current OWASP guidance.
    scrypt_log_n: int = 14
    scrypt_r: int = 8
    scrypt_p: int = 1
    # One working day: sessions issued at morning login die by evening.
    session_ttl_seconds: int = 8 * 3600


@dataclass(frozen=True)
class LimitsConfig:
    page_size_default: int = 20
    page_size_max: int = 200
    attachment_max_bytes: int = 25 * 1024 * 1024


# Media types a clerk may attach to an application: office documents, PDF,
# drawings, archives and common images.
ATTACHMENT_ALLOW_LIST = frozenset(
    {
        "application/pdf",
        "application/msword",
        "application/vnd.openxmlformats-officedocument.wordprocessingml.document",
        "application/vnd.ms-excel",
        "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
        "application/vnd.ms-powerpoint",
        "application/vnd.openxmlformats-officedocument.presentationml.presentation",
        "application/zip",
        "application/x-rar-compressed",
        "application/x-7z-compressed",
        "image/vnd.dwg",
        "image/vnd.dxf",
        "image/jpeg",
        "image/png",
        "image/gif",
        "image/tiff",
        "image/bmp",
        "text/plain",
    }
)


@dataclass(frozen=True)
class BootstrapConfig:
    """First-run state: the admin department and the first admin account.

    Applied only when the user table is empty, so a restored or upgraded
    instance is never touched.
    """

    admin_dept_code: int = 1
    admin_dept_name: str = "Administration"
    admin_username: str = "admin"
    admin_password: str = ""
    admin_bound_ip: str = "127.0.0.1"


@dataclass(frozen=True)
class ServiceConfig:
    """Everything the HTTP service needs beyond the store itself."""

    admin_path: str = "/admin"
    default_locale: str = "ku"
    cookie_secure: bool = False
    cors_origins: tuple[str, ...] = ()
    security: SecurityConfig = field(default_factory=SecurityConfig)
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    bootstrap: BootstrapConfig | None = None
