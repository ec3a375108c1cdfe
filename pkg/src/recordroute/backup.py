"""Canonical store export/import with plain and compressed modes.

The canonical payload is a deterministic function of store state: UTF-8
JSON lines grouped by table in a fixed order, rows sorted by a fixed key
per table, one header line per table, one trailing digest line. Archive
files prepend a small binary header (see docs/backup-format.md for the
bit-exact layout). ZIPPED mode wraps the identical payload in a raw
DEFLATE stream, so both modes decompress to the same bytes.
"""

from __future__ import annotations

import base64
import hashlib
import json
import sqlite3
import zlib
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any

from .errors import (
    ChecksumMismatch,
    CorruptPayload,
    NotAuthorized,
    UnsupportedVersion,
)
from .model import UserContext, utcnow
from .store import TABLES, Store

MAGIC = b"DLMS"
FORMAT_VERSION = 1
_HEADER_LEN = len(MAGIC) + 1 + 1 + 32

# Deterministic row order inside each table section.
_SORT_KEYS: dict[str, tuple[str, ...]] = {
    "departments": ("dept_id",),
    "users": ("user_id",),
    "applications": ("app_id",),
    "events": ("app_id", "seq"),
    "publishes": ("app_id",),
    "news": ("news_id",),
    "attachments": ("attachment_id",),
    "blobs": ("digest",),
}

# Sessions are ephemeral transport state: they stay out of backups, and a
# restore clears whatever sessions are live (everyone logs in again).
_SECTIONS = tuple(t for t in TABLES if t != "sessions") + ("blobs",)


class BackupMode(str, Enum):
    NONE = "none"
    ZIPPED = "zipped"


_MODE_BYTE = {BackupMode.NONE: 0, BackupMode.ZIPPED: 1}
_BYTE_MODE = {v: k for k, v in _MODE_BYTE.items()}


@dataclass(frozen=True)
class BackupArchive:
    format_version: int
    mode: BackupMode
    checksum: str
    table_counts: dict[str, int]
    payload: bytes
    created_at: datetime | None = None

    def canonical_payload(self) -> bytes:
        """The uncompressed payload, regardless of mode."""
        if self.mode is BackupMode.NONE:
            return self.payload
        try:
            return zlib.decompress(self.payload, wbits=-15)
        except zlib.error as exc:
            raise CorruptPayload(f"compressed payload does not inflate: {exc}") from exc

    def to_bytes(self) -> bytes:
        return (
            MAGIC
            + bytes([self.format_version, _MODE_BYTE[self.mode]])
            + bytes.fromhex(self.checksum)
            + self.payload
        )

    @classmethod
    def from_bytes(cls, data: bytes) -> "BackupArchive":
        if len(data) < _HEADER_LEN or data[: len(MAGIC)] != MAGIC:
            raise CorruptPayload("not a backup archive")
        version = data[4]
        if version != FORMAT_VERSION:
            raise UnsupportedVersion(f"archive format version {version} is not supported")
        if data[5] not in _BYTE_MODE:
            raise CorruptPayload(f"unknown mode byte: {data[5]}")
        archive = cls(
            format_version=version,
            mode=_BYTE_MODE[data[5]],
            checksum=data[6:_HEADER_LEN].hex(),
            table_counts={},
            payload=data[_HEADER_LEN:],
        )
        canonical = archive.canonical_payload()
        if hashlib.sha256(canonical).hexdigest() != archive.checksum:
            raise ChecksumMismatch("payload does not match archive checksum")
        counts, _, _ = _scan_payload(canonical)
        return cls(
            format_version=archive.format_version,
            mode=archive.mode,
            checksum=archive.checksum,
            table_counts=counts,
            payload=archive.payload,
        )


@dataclass(frozen=True)
class RestoreReport:
    tables: int
    rows: int
    checksum_ok: bool


def _row_lines(section: str, rows: list[dict[str, Any]]) -> list[str]:
    key = _SORT_KEYS[section]
    ordered = sorted(rows, key=lambda r: tuple(r[k] for k in key))
    return [json.dumps(r, ensure_ascii=False, sort_keys=True, separators=(",", ":")) for r in ordered]


def build_canonical_payload(
    tables: dict[str, list[dict[str, Any]]], blobs: dict[str, bytes]
) -> bytes:
    lines: list[str] = []
    for section in _SECTIONS:
        if section == "blobs":
            rows = [
                {"digest": d, "data": base64.b64encode(blobs[d]).decode("ascii")}
                for d in sorted(blobs)
            ]
        else:
            rows = tables.get(section, [])
        lines.append(f"#table {section} {len(rows)}")
        lines.extend(_row_lines(section, rows))
    body = ("\n".join(lines) + "\n").encode("utf-8")
    digest = hashlib.sha256(body).hexdigest()
    return body + f"#digest sha256:{digest}\n".encode("ascii")


def _scan_payload(
    payload: bytes,
) -> tuple[dict[str, int], dict[str, list[dict[str, Any]]], dict[str, bytes]]:
    """Validate and decode a canonical payload into tables and blobs."""
    try:
        text = payload.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorruptPayload("payload is not UTF-8") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[-1].startswith("#digest sha256:"):
        raise CorruptPayload("missing trailing digest line")
    stated = lines[-1][len("#digest sha256:") :]
    body = "\n".join(lines[:-1]) + "\n"
    if hashlib.sha256(body.encode("utf-8")).hexdigest() != stated:
        raise ChecksumMismatch("payload digest line does not verify")

    counts: dict[str, int] = {}
    tables: dict[str, list[dict[str, Any]]] = {}
    blobs: dict[str, bytes] = {}
    section: str | None = None
    expected = 0
    seen = 0
    order = list(_SECTIONS)
    for line in lines[:-1]:
        if line.startswith("#table "):
            if section is not None and seen != expected:
                raise CorruptPayload(f"table {section}: expected {expected} rows, got {seen}")
            try:
                _, name, count_s = line.split(" ")
                expected = int(count_s)
            except ValueError as exc:
                raise CorruptPayload(f"bad table header: {line!r}") from exc
            if not order or order[0] != name:
                raise CorruptPayload(f"unexpected table section: {name}")
            order.pop(0)
            section = name
            counts[name] = expected
            seen = 0
            if name != "blobs":
                tables[name] = []
        elif section is None:
            raise CorruptPayload("row before any table header")
        else:
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorruptPayload(f"bad row in {section}: {exc}") from exc
            if not isinstance(row, dict):
                raise CorruptPayload(f"bad row in {section}: not an object")
            if section == "blobs":
                try:
                    blobs[row["digest"]] = base64.b64decode(row["data"], validate=True)
                except (KeyError, ValueError) as exc:
                    raise CorruptPayload(f"bad blob row: {exc}") from exc
            else:
                tables[section].append(row)
            seen += 1
    if section is not None and seen != expected:
        raise CorruptPayload(f"table {section}: expected {expected} rows, got {seen}")
    if order:
        raise CorruptPayload(f"missing table sections: {', '.join(order)}")
    return counts, tables, blobs


def export_backup(store: Store, mode: BackupMode, actor: UserContext) -> BackupArchive:
    """Snapshot the whole store into a self-verifying archive."""
    if not actor.is_admin:
        raise NotAuthorized("only administrators export backups")
    tables = {t: rows for t, rows in store.snapshot_rows().items() if t != "sessions"}
    blobs = {d: store.blobs.get(d) for d in store.blobs.digests()}
    canonical = build_canonical_payload(tables, blobs)
    checksum = hashlib.sha256(canonical).hexdigest()
    if mode is BackupMode.ZIPPED:
        compressor = zlib.compressobj(level=9, wbits=-15)
        payload = compressor.compress(canonical) + compressor.flush()
    else:
        payload = canonical
    counts = {t: len(rows) for t, rows in tables.items()}
    counts["blobs"] = len(blobs)
    return BackupArchive(
        format_version=FORMAT_VERSION,
        mode=mode,
        checksum=checksum,
        table_counts=counts,
        payload=payload,
        created_at=utcnow(),
    )


def import_backup(store: Store, archive: BackupArchive, actor: UserContext) -> RestoreReport:
    """Replace the entire store with the archive's snapshot (not a merge)."""
    if not actor.is_admin:
        raise NotAuthorized("only administrators import backups")
    if archive.format_version != FORMAT_VERSION:
        raise UnsupportedVersion(
            f"archive format version {archive.format_version} is not supported"
        )
    canonical = archive.canonical_payload()
    if hashlib.sha256(canonical).hexdigest() != archive.checksum:
        raise ChecksumMismatch("payload does not match archive checksum")
    counts, tables, blobs = _scan_payload(canonical)
    try:
        store.replace_all(tables, blobs)
    except sqlite3.Error as exc:
        # rows that do not fit the schema (e.g. crafted column names); the
        # transaction has already rolled the store back.
        raise CorruptPayload(f"rows do not fit the store schema: {exc}") from exc
    return RestoreReport(
        tables=len(counts), rows=sum(counts.values()), checksum_ok=True
    )
