"""Domain errors.

Every failure the service can surface carries a stable machine code; the
HTTP layer and the CLI map on `code`, never on message text. The code set
is closed: adding an error class here requires a catalog entry for both
locales (enforced by tests).
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all expected failures. `code` is the wire token."""

    code = "INTERNAL_ERROR"
    http_status = 500

    def __init__(self, message: str = "", *, detail: str | None = None):
        super().__init__(message or self.code)
        self.detail = detail


class NotFound(DomainError):
    code = "NOT_FOUND"
    http_status = 404


class NotAuthorized(DomainError):
    code = "NOT_AUTHORIZED"
    http_status = 403


class BadCredentials(DomainError):
    """Unknown user or wrong password; deliberately indistinguishable."""

    code = "BAD_CREDENTIALS"
    http_status = 401


class AccessDeniedIp(DomainError):
    """Valid account, wrong source machine. Rendered as its own page."""

    code = "ACCESS_DENIED_IP"
    http_status = 403


class InvalidSession(DomainError):
    code = "INVALID_SESSION"
    http_status = 401


class WrongDepartment(DomainError):
    code = "WRONG_DEPARTMENT"
    http_status = 403


class ValidationFailed(DomainError):
    code = "VALIDATION_FAILED"
    http_status = 422

    def __init__(self, field: str, message: str = ""):
        super().__init__(message or f"invalid field: {field}", detail=field)
        self.field = field


class ImmutableField(DomainError):
    code = "IMMUTABLE_FIELD"
    http_status = 422

    def __init__(self, field: str):
        super().__init__(f"field is immutable: {field}", detail=field)
        self.field = field


class DuplicateIncomingNumber(DomainError):
    code = "DUPLICATE_INCOMING_NUMBER"
    http_status = 409


class DuplicateUsername(DomainError):
    code = "DUPLICATE_USERNAME"
    http_status = 409


class UnknownDepartment(DomainError):
    code = "UNKNOWN_DEPARTMENT"
    http_status = 422


class AlreadyPublished(DomainError):
    code = "ALREADY_PUBLISHED"
    http_status = 409


class SelfRedirect(DomainError):
    code = "SELF_REDIRECT"
    http_status = 422


class NotAtOutgoing(DomainError):
    code = "NOT_AT_OUTGOING"
    http_status = 409


class NoAttachment(DomainError):
    code = "NO_ATTACHMENT"
    http_status = 404


class DisallowedType(DomainError):
    code = "DISALLOWED_TYPE"
    http_status = 415


class TooLarge(DomainError):
    code = "TOO_LARGE"
    http_status = 413


class InvalidQuery(DomainError):
    code = "INVALID_QUERY"
    http_status = 422


class ChecksumMismatch(DomainError):
    code = "CHECKSUM_MISMATCH"
    http_status = 422


class UnsupportedVersion(DomainError):
    code = "UNSUPPORTED_VERSION"
    http_status = 422


class CorruptPayload(DomainError):
    code = "CORRUPT_PAYLOAD"
    http_status = 422


class StorageFailure(DomainError):
    code = "STORAGE_FAILURE"
    http_status = 500


class ConflictRetryable(DomainError):
    """Concurrent writers collided; the operation is safe to retry."""

    code = "CONFLICT_RETRYABLE"
    http_status = 409


class MissingKey(DomainError):
    """A message key absent from a catalog; parity tests keep this unreachable."""

    code = "MISSING_KEY"
    http_status = 500


def all_error_classes() -> list[type[DomainError]]:
    """Every concrete error class, for exhaustiveness checks."""
    seen: list[type[DomainError]] = []
    stack: list[type[DomainError]] = [DomainError]
    while stack:
        cls = stack.pop()
        seen.append(cls)
        stack.extend(cls.__subclasses__())
    return seen
